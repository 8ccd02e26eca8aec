use std::collections::hash_map::DefaultHasher;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use num_integer::Integer;

use super::{GroupError, Permutation};

/// Opaque fingerprint of a group's element set; used to tie class data and
/// class functions back to the group they were computed for.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupId(u64);

/// A fully enumerated permutation group.
///
/// Elements are kept sorted lexicographically by image list, so the identity
/// is always element 0 and an element's index is stable for a fixed group.
#[derive(Clone, Debug)]
pub struct FinGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    id: GroupId,
}

impl FinGroup {
    /// Breadth-first closure of `generators`, failing once more than `cap`
    /// elements have been produced.
    pub fn closure(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators: Vec<Permutation> = generators.to_vec();
        let elements = close_under(degree, &generators, cap)?;
        Ok(Self::from_parts(degree, generators, elements))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    fn from_parts(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort_unstable();
        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        FinGroup {
            degree,
            generators,
            elements,
            id: GroupId(hasher.finish()),
        }
    }

    /// Wraps an already closed, sorted element list, picking a small
    /// generating set greedily in element order.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut generators: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::new();
        span.insert(Permutation::identity(degree));
        for x in &elements {
            if span.len() == elements.len() {
                break;
            }
            if !span.contains(x) {
                generators.push(x.clone());
                span = close_under(degree, &generators, usize::MAX)
                    .expect("uncapped closure")
                    .into_iter()
                    .collect();
            }
        }
        debug_assert_eq!(span.len(), elements.len());
        Self::from_parts(degree, generators, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        x.degree() == self.degree && self.index_of(x).is_some()
    }

    /// Index of the product `elements[a]·elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose(&self.elements[b]);
        self.index_of(&prod)
            .expect("group is closed under products")
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, x| acc.lcm(&x.order()))
    }

    /// The distinct element orders occurring in the group, ascending.
    pub fn element_orders(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self.elements.iter().map(Permutation::order).collect();
        orders.sort_unstable();
        orders.dedup();
        orders
    }

    /// Subgroup generated by `gens`, each of which must lie in `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<FinGroup, GroupError> {
        if gens.iter().any(|g| !self.contains(g)) {
            return Err(GroupError::NotSubgroup);
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        Self::closure(self.degree, &gens, self.order())
    }

    pub fn is_subgroup_of(&self, other: &FinGroup) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.elements.iter().all(|x| other.contains(x))
    }

    /// True when `self ≤ other` and every conjugate of a generator of `self`
    /// by a generator of `other` stays inside `self`.
    pub fn is_normal_in(&self, other: &FinGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|h| self.contains(&h.conjugate_by(g)))
            })
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> Result<FinGroup, GroupError> {
        let mut current: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        loop {
            let h = self.subgroup(&current)?;
            let mut grew = false;
            for g in &self.generators {
                for x in h.generators.clone() {
                    let c = x.conjugate_by(g);
                    if !h.contains(&c) && !current.contains(&c) {
                        current.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(h);
            }
        }
    }

    /// Commutator subgroup: the normal closure of the commutators of the
    /// generators.
    pub fn derived_subgroup(&self) -> FinGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
            .expect("commutators of generators lie in the group")
    }

    /// Walks the derived series until it reaches the trivial group or stalls.
    pub fn is_solvable(&self) -> bool {
        let mut h = self.clone();
        while h.order() > 1 {
            let d = h.derived_subgroup();
            if d.order() == h.order() {
                return false;
            }
            h = d;
        }
        true
    }

    /// `{g ∈ self : h^g ∈ h for every generator h}`.
    pub fn normalizer(&self, h: &FinGroup) -> Result<FinGroup, GroupError> {
        if h.degree != self.degree || h.elements.iter().any(|x| !self.contains(x)) {
            return Err(GroupError::NotSubgroup);
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|g| h.generators.iter().all(|x| h.contains(&x.conjugate_by(g))))
            .cloned()
            .collect();
        Ok(Self::from_sorted_elements(self.degree, elements))
    }

    /// Intersection with another group on the same points.
    pub fn intersection(&self, other: &FinGroup) -> FinGroup {
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|x| other.contains(x))
            .cloned()
            .collect();
        Self::from_sorted_elements(self.degree, elements)
    }
}

impl PartialEq for FinGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FinGroup {}

fn close_under(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = x.compose(s);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(GroupError::ClosureExceedsCap { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
