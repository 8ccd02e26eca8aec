use std::collections::BTreeSet;

use serde_json::json;

use super::{CheckKind, CheckResult, GroupContext, HarnessError};
use crate::charinv::{
    conjugate_class_function, determinantal_order, galois_stabilizer, is_invariant_under, InvError,
    SubgroupData,
};
use crate::chartable::{constituents, restrict, TableError};
use crate::cyclotomic::Cyclo;
use crate::permgroup::{
    is_power_of, quotient_order_spectrum, sylow_subgroup, ClassData, FinGroup, GroupError,
    OrderSpectrum,
};

/// `P`, `N_G(P)`, `P'` and the element orders of `N_G(P)/P'`.
#[derive(Clone, Debug)]
pub struct SylowData {
    pub p: u64,
    pub sylow: FinGroup,
    pub normalizer: FinGroup,
    pub derived: FinGroup,
    pub spectrum: OrderSpectrum,
}

impl SylowData {
    pub fn new(group: &FinGroup, p: u64) -> Result<Self, GroupError> {
        let sylow = sylow_subgroup(group, p)?;
        let normalizer = group.normalizer(&sylow)?;
        let derived = sylow.derived_subgroup();
        let spectrum = quotient_order_spectrum(&normalizer, &derived)?;
        Ok(SylowData {
            p,
            sylow,
            normalizer,
            derived,
            spectrum,
        })
    }

    /// `|N_G(P) : P'|`.
    pub fn index(&self) -> u64 {
        self.spectrum.quotient_order
    }
}

fn group_err(ctx: &GroupContext) -> impl Fn(GroupError) -> HarnessError + '_ {
    move |source| HarnessError::Group {
        group: ctx.name.clone(),
        source,
    }
}

fn table_err(ctx: &GroupContext) -> impl Fn(TableError) -> HarnessError + '_ {
    move |source| HarnessError::Table {
        group: ctx.name.clone(),
        source,
    }
}

fn inv_err(ctx: &GroupContext) -> impl Fn(InvError) -> HarnessError + '_ {
    move |source| HarnessError::Inv {
        group: ctx.name.clone(),
        source,
    }
}

fn render_values(values: &[Cyclo]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

/// Theorem A at `p`: for each row of `p'`-degree, is `f_χ` the order of some
/// element of `N_G(P)/P'`? The hypothesis is met for odd degree in a solvable
/// group; other rows are still evaluated and reported.
pub fn check_theorem_a(ctx: &GroupContext, p: u64) -> Result<Vec<CheckResult>, HarnessError> {
    let syl = SylowData::new(&ctx.group, p).map_err(group_err(ctx))?;
    let index = syl.index();
    let max = syl.spectrum.max_order();
    let largest = syl
        .spectrum
        .witness(max)
        .expect("the maximum is attained")
        .representative
        .to_string();
    let histogram: Vec<[u64; 2]> = syl
        .spectrum
        .histogram()
        .into_iter()
        .map(|(o, c)| [o, c as u64])
        .collect();

    let mut out = Vec::new();
    for (i, prof) in ctx.profiles.iter().enumerate() {
        let d = prof.degree;
        if d % p == 0 {
            continue;
        }
        let f = prof.feit;
        let (holds, witness) = match syl.spectrum.witness(f) {
            Some(c) => (
                true,
                format!("{} has order {f} modulo P'", c.representative),
            ),
            None => (
                false,
                format!("no coset of order {f}; largest is {largest} of order {max}"),
            ),
        };
        out.push(CheckResult {
            group: ctx.name.clone(),
            check: CheckKind::TheoremA,
            p: Some(p),
            char_index: Some(i),
            degree: Some(d),
            feit: Some(f),
            holds,
            hypothesis_met: ctx.solvable && d % 2 == 1,
            witness: Some(witness),
            details: json!({
                "solvable": ctx.solvable,
                "degree_odd": d % 2 == 1,
                "sylow_order": syl.sylow.order(),
                "normalizer_order": syl.normalizer.order(),
                "derived_order": syl.derived.order(),
                "index": index,
                "feit_divides_index": index % f == 0,
                "max_order": max,
                "spectrum": histogram,
            }),
        });
    }
    Ok(out)
}

/// Some element of `G` has order `f_χ`, for every row. Evaluated for every
/// group; the hypothesis is solvability.
pub fn check_amit_chillag(ctx: &GroupContext) -> Vec<CheckResult> {
    let orders = ctx.group.element_orders();
    ctx.profiles
        .iter()
        .enumerate()
        .map(|(i, prof)| {
            let f = prof.feit;
            let w = ctx.group.elements().iter().find(|x| x.order() == f);
            CheckResult {
                group: ctx.name.clone(),
                check: CheckKind::AmitChillag,
                p: None,
                char_index: Some(i),
                degree: Some(prof.degree),
                feit: Some(f),
                holds: w.is_some(),
                hypothesis_met: ctx.solvable,
                witness: Some(match w {
                    Some(x) => format!("{x} has order {f}"),
                    None => format!("no element of order {f}"),
                }),
                details: json!({ "solvable": ctx.solvable, "element_orders": orders }),
            }
        })
        .collect()
}

/// Lemmas 1 to 4 at the prime `p`. Lemmas 1 and 4 hold in every finite group;
/// Lemmas 2 and 3 are only run on solvable groups. Needs a context built with
/// lemma data.
pub fn check_lemmas(ctx: &GroupContext, p: u64) -> Result<Vec<CheckResult>, HarnessError> {
    let syl = SylowData::new(&ctx.group, p).map_err(group_err(ctx))?;
    let mut out = Vec::new();
    lemma1(ctx, &syl, &mut out)?;
    if ctx.solvable {
        let specials: Vec<usize> = (0..ctx.table.len())
            .filter(|&i| ctx.profiles[i].p_special_for.contains(&p))
            .collect();
        lemma2(ctx, &syl, &specials, &mut out)?;
        lemma3(ctx, p, &specials, &mut out);
    }
    lemma4(ctx, &syl, &mut out)?;
    Ok(out)
}

/// The permutation of `Irr(N)` induced by conjugation with `x`.
fn row_action(
    ctx: &GroupContext,
    nd: &SubgroupData,
    x: &crate::permgroup::Permutation,
) -> Result<Vec<usize>, HarnessError> {
    (0..nd.table.len())
        .map(|j| {
            let v = conjugate_class_function(nd.table.row(j), &nd.group, &nd.classes, x)
                .map_err(inv_err(ctx))?;
            nd.table.find_row(&v).ok_or_else(|| HarnessError::Table {
                group: ctx.name.clone(),
                source: TableError::NotACharacter(format!(
                    "conjugate of row {j} of a normal subgroup"
                )),
            })
        })
        .collect()
}

fn orbit(start: usize, actions: &[Vec<usize>]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(j) = stack.pop() {
        for a in actions {
            if seen.insert(a[j]) {
                stack.push(a[j]);
            }
        }
    }
    seen
}

fn lemma1(
    ctx: &GroupContext,
    syl: &SylowData,
    out: &mut Vec<CheckResult>,
) -> Result<(), HarnessError> {
    let p = syl.p;
    for (ni, nd) in ctx.normals.iter().enumerate() {
        let actions = syl
            .normalizer
            .generators()
            .iter()
            .map(|x| row_action(ctx, nd, x))
            .collect::<Result<Vec<_>, _>>()?;
        let p_invariant = (0..nd.table.len())
            .map(|j| {
                is_invariant_under(
                    nd.table.row(j),
                    &nd.group,
                    &nd.classes,
                    syl.sylow.generators(),
                )
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(inv_err(ctx))?;
        for i in (0..ctx.table.len()).filter(|&i| !ctx.table.degree(i).is_multiple_of(p)) {
            let (res, _) = restrict(
                &ctx.table.character(i),
                &ctx.group,
                &ctx.classes,
                &nd.group,
                &nd.classes,
            )
            .map_err(table_err(ctx))?;
            let cons = constituents(&res, &nd.table).map_err(table_err(ctx))?;
            let invariant: Vec<usize> = cons
                .iter()
                .map(|&(j, _)| j)
                .filter(|&j| p_invariant[j])
                .collect();
            let (holds, witness, orb) = match invariant.first() {
                None => (
                    false,
                    "no constituent is P-invariant".to_string(),
                    BTreeSet::new(),
                ),
                Some(&first) => {
                    let orb = orbit(first, &actions);
                    let one_orbit = invariant.iter().all(|j| orb.contains(j));
                    let w = if one_orbit {
                        format!(
                            "constituent {first} of N is P-invariant; invariant constituents {invariant:?} lie in one N_G(P)-orbit"
                        )
                    } else {
                        format!("invariant constituents {invariant:?} are not N_G(P)-conjugate to {first}")
                    };
                    (one_orbit, w, orb)
                }
            };
            out.push(CheckResult {
                group: ctx.name.clone(),
                check: CheckKind::Lemma1,
                p: Some(p),
                char_index: Some(i),
                degree: Some(ctx.table.degree(i)),
                feit: Some(ctx.feit(i)),
                holds,
                hypothesis_met: true,
                witness: Some(witness),
                details: json!({
                    "normal_index": ni,
                    "normal_order": nd.group.order(),
                    "normal_generators": nd.group.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "constituents": cons,
                    "p_invariant": invariant,
                    "orbit": orb,
                }),
            });
        }
    }
    Ok(())
}

fn lemma2(
    ctx: &GroupContext,
    syl: &SylowData,
    specials: &[usize],
    out: &mut Vec<CheckResult>,
) -> Result<(), HarnessError> {
    let p = syl.p;
    let pcd = ClassData::new(&syl.sylow);
    let restrictions = specials
        .iter()
        .map(|&i| {
            restrict(
                &ctx.table.character(i),
                &ctx.group,
                &ctx.classes,
                &syl.sylow,
                &pcd,
            )
            .map(|(r, _)| r.into_values())
            .map_err(table_err(ctx))
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (a, &i) in specials.iter().enumerate() {
        let collisions: Vec<usize> = specials
            .iter()
            .enumerate()
            .filter(|&(b, _)| b != a && restrictions[b] == restrictions[a])
            .map(|(_, &j)| j)
            .collect();
        let f = ctx.feit(i);
        let f_p_power = is_power_of(f, p);
        out.push(CheckResult {
            group: ctx.name.clone(),
            check: CheckKind::Lemma2,
            p: Some(p),
            char_index: Some(i),
            degree: Some(ctx.table.degree(i)),
            feit: Some(f),
            holds: collisions.is_empty() && f_p_power,
            hypothesis_met: true,
            witness: Some(format!(
                "restriction to P: [{}]",
                render_values(&restrictions[a]).join(", ")
            )),
            details: json!({
                "p_special": specials,
                "collides_with": collisions,
                "feit_is_p_power": f_p_power,
                "sylow_order": syl.sylow.order(),
            }),
        });
    }
    Ok(())
}

fn lemma3(ctx: &GroupContext, q: u64, specials: &[usize], out: &mut Vec<CheckResult>) {
    for &i in specials.iter().filter(|&&i| i != 0) {
        let stab = galois_stabilizer(ctx.table.row(i), &ctx.classes);
        let zeta_in_field = stab.members.iter().all(|k| k % q == 1);
        let f = ctx.feit(i);
        let q_divides_f = f.is_multiple_of(q);
        // ζ_2 = −1 is rational, so divisibility is only part of the claim for odd q
        let holds = zeta_in_field && (q == 2 || q_divides_f);
        out.push(CheckResult {
            group: ctx.name.clone(),
            check: CheckKind::Lemma3,
            p: Some(q),
            char_index: Some(i),
            degree: Some(ctx.table.degree(i)),
            feit: Some(f),
            holds,
            hypothesis_met: true,
            witness: Some(format!(
                "Galois stabilizer {:?} mod {} lies in 1 + {q}Z: {zeta_in_field}",
                stab.members, stab.modulus
            )),
            details: json!({
                "stabilizer": stab,
                "zeta_in_field": zeta_in_field,
                "q_divides_feit": q_divides_f,
            }),
        });
    }
}

fn lemma4(
    ctx: &GroupContext,
    syl: &SylowData,
    out: &mut Vec<CheckResult>,
) -> Result<(), HarnessError> {
    let ncd = ClassData::new(&syl.normalizer);
    for i in ctx.table.linear_rows() {
        let order = ctx.profiles[i].det_order;
        for (label, h, hcd) in [
            ("normalizer", &syl.normalizer, &ncd),
            ("group", &ctx.group, &ctx.classes),
        ] {
            let (res, _) = restrict(&ctx.table.character(i), &ctx.group, &ctx.classes, h, hcd)
                .map_err(table_err(ctx))?;
            let restricted = determinantal_order(res.values(), hcd).map_err(inv_err(ctx))?;
            out.push(CheckResult {
                group: ctx.name.clone(),
                check: CheckKind::Lemma4,
                p: Some(syl.p),
                char_index: Some(i),
                degree: Some(1),
                feit: Some(ctx.feit(i)),
                holds: order == restricted,
                hypothesis_met: true,
                witness: Some(format!(
                    "o(λ) = {order}, o(λ_H) = {restricted} for H = {label}"
                )),
                details: json!({
                    "subgroup": label,
                    "subgroup_order": h.order(),
                    "order": order,
                    "restricted_order": restricted,
                }),
            });
        }
    }
    Ok(())
}
