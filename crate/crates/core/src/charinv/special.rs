use std::collections::{BTreeMap, HashSet};

use super::{determinantal_order, InvError};
use crate::chartable::{constituents, restrict, CharacterTable, ClassFunction, TableOptions};
use crate::cyclotomic::Cyclo;
use crate::permgroup::{is_power_of, ClassData, FinGroup, Permutation};

/// Default bound on the number of subnormal subgroups enumerated.
pub const DEFAULT_LATTICE_CAP: usize = 10_000;

/// Normal subgroups of `group`, found as normal closures of single classes
/// and then closed under joins. Sorted by order, then by elements.
pub fn normal_subgroups(group: &FinGroup, cd: &ClassData) -> Vec<FinGroup> {
    let mut found: Vec<FinGroup> = vec![FinGroup::trivial(group.degree())];
    let mut keys: HashSet<Vec<Permutation>> = HashSet::new();
    keys.insert(found[0].elements().to_vec());
    let mut push = |h: FinGroup, found: &mut Vec<FinGroup>| {
        if keys.insert(h.elements().to_vec()) {
            found.push(h);
        }
    };
    for &r in cd.reps().iter().skip(1) {
        let n = group
            .normal_closure(std::slice::from_ref(group.element(r)))
            .expect("class representative lies in the group");
        push(n, &mut found);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let a = &found[i];
            let b = &found[j];
            if a.is_subgroup_of(b) || b.is_subgroup_of(a) {
                continue;
            }
            let gens: Vec<Permutation> = a
                .generators()
                .iter()
                .chain(b.generators())
                .cloned()
                .collect();
            let join = group.subgroup(&gens).expect("join of subgroups");
            push(join, &mut found);
        }
        i += 1;
    }
    found.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    found
}

/// One subnormal subgroup with its character table and the determinantal
/// order of every irreducible character.
#[derive(Clone, Debug)]
pub struct SubgroupData {
    pub group: FinGroup,
    pub classes: ClassData,
    pub table: CharacterTable,
    pub det_orders: Vec<u64>,
}

impl SubgroupData {
    pub fn new(group: FinGroup, opts: &TableOptions) -> Result<Self, InvError> {
        let classes = ClassData::new(&group);
        let table = CharacterTable::compute(&group, &classes, opts)?;
        let det_orders = table
            .rows()
            .iter()
            .map(|row| determinantal_order(row, &classes))
            .collect::<Result<_, _>>()?;
        Ok(SubgroupData {
            group,
            classes,
            table,
            det_orders,
        })
    }
}

/// Every subnormal subgroup of a group (the group itself included), with
/// character data.
#[derive(Clone, Debug)]
pub struct SubnormalLattice {
    members: Vec<SubgroupData>,
}

impl SubnormalLattice {
    pub fn build(group: &FinGroup, opts: &TableOptions, cap: usize) -> Result<Self, InvError> {
        let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
        let mut stack = vec![group.clone()];
        seen.insert(group.elements().to_vec());
        let mut subgroups = Vec::new();
        while let Some(s) = stack.pop() {
            let cd = ClassData::new(&s);
            for n in normal_subgroups(&s, &cd) {
                if seen.insert(n.elements().to_vec()) {
                    if seen.len() > cap {
                        return Err(InvError::CapExceeded {
                            count: seen.len(),
                            cap,
                        });
                    }
                    stack.push(n);
                }
            }
            subgroups.push(s);
        }
        subgroups.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
        let members = subgroups
            .into_iter()
            .map(|s| SubgroupData::new(s, opts))
            .collect::<Result<_, _>>()?;
        Ok(SubnormalLattice { members })
    }

    pub fn members(&self) -> &[SubgroupData] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// For each subnormal subgroup, the constituents of `chi` restricted to it
    /// as `(row, multiplicity)` pairs of that subgroup's table.
    pub fn restricted_constituents(
        &self,
        chi: &[Cyclo],
        group: &FinGroup,
        cd: &ClassData,
    ) -> Result<Vec<Vec<(usize, u64)>>, InvError> {
        let chi = ClassFunction::new(group.id(), chi.to_vec());
        self.members
            .iter()
            .map(|s| {
                let (res, _) = restrict(&chi, group, cd, &s.group, &s.classes)?;
                Ok(constituents(&res, &s.table)?)
            })
            .collect()
    }

    /// `χ(1)` is a power of `p` and every constituent of every restriction of
    /// `chi` to a subnormal subgroup has `p`-power determinantal order.
    pub fn is_p_special(
        &self,
        chi: &[Cyclo],
        group: &FinGroup,
        cd: &ClassData,
        p: u64,
    ) -> Result<bool, InvError> {
        let degree = chi[0].to_i64().unwrap_or(0);
        if degree < 1 || !is_power_of(degree as u64, p) {
            return Ok(false);
        }
        let parts = self.restricted_constituents(chi, group, cd)?;
        Ok(self
            .members
            .iter()
            .zip(&parts)
            .all(|(s, cons)| cons.iter().all(|&(i, _)| is_power_of(s.det_orders[i], p))))
    }

    /// Primes in `primes` for which `chi` is special.
    pub fn special_primes(
        &self,
        chi: &[Cyclo],
        group: &FinGroup,
        cd: &ClassData,
        primes: &[u64],
    ) -> Result<Vec<u64>, InvError> {
        let degree = chi[0].to_i64().unwrap_or(0);
        if degree < 1 {
            return Ok(Vec::new());
        }
        let parts = self.restricted_constituents(chi, group, cd)?;
        let mut out = Vec::new();
        for &p in primes {
            if !is_power_of(degree as u64, p) {
                continue;
            }
            let ok = self
                .members
                .iter()
                .zip(&parts)
                .all(|(s, cons)| cons.iter().all(|&(i, _)| is_power_of(s.det_orders[i], p)));
            if ok {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Number of subnormal subgroups of each order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for s in &self.members {
            *h.entry(s.group.order()).or_insert(0) += 1;
        }
        h
    }
}

/// Whether `chi` (a row of `table`) is `p`-special. Builds the subnormal
/// lattice; callers testing many characters should build a
/// [`SubnormalLattice`] once instead.
pub fn is_p_special(
    chi: &[Cyclo],
    group: &FinGroup,
    table: &CharacterTable,
    p: u64,
) -> Result<bool, InvError> {
    if !crate::permgroup::is_prime(p) {
        return Err(crate::permgroup::GroupError::NotPrime(p).into());
    }
    if !group.is_solvable() {
        return Err(InvError::NotSolvable);
    }
    let lattice = SubnormalLattice::build(group, &TableOptions::default(), DEFAULT_LATTICE_CAP)?;
    lattice.is_p_special(chi, group, table.class_data(), p)
}
