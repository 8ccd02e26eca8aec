//! Invariants of irreducible characters: fields of values, Feit numbers,
//! determinantal orders, `p`-special characters and invariance under
//! conjugation.

mod det;
mod galois;
mod special;

use serde::Serialize;
use thiserror::Error;

pub use det::{determinant, determinantal_order, eigenvalue_multiplicities, Determinant};
pub use galois::{feit_from_stabilizer, feit_number, galois_stabilizer, GaloisStabilizer};
pub use special::{
    is_p_special, normal_subgroups, SubgroupData, SubnormalLattice, DEFAULT_LATTICE_CAP,
};

use crate::chartable::{CharacterTable, TableError};
use crate::cyclotomic::Cyclo;
use crate::permgroup::{prime_divisors, ClassData, FinGroup, GroupError, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvError {
    #[error("eigenvalue decomposition failed: {0}")]
    DecompositionFailure(String),
    #[error("group is not solvable")]
    NotSolvable,
    #[error("subnormal lattice has more than {cap} members (reached {count})")]
    CapExceeded { count: usize, cap: usize },
    #[error("actor does not normalize the subgroup")]
    NotNormalizing,
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Per-character summary used in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterProfile {
    pub degree: u64,
    pub feit: u64,
    pub det_order: u64,
    pub is_rational: bool,
    pub field_degree: u64,
    pub p_special_for: Vec<u64>,
}

/// Profiles of every row of `table`. The `p`-special flags are filled from
/// `lattice` for the primes dividing `|G|`, and left empty without one.
pub fn profile_characters(
    group: &FinGroup,
    table: &CharacterTable,
    lattice: Option<&SubnormalLattice>,
) -> Result<Vec<CharacterProfile>, InvError> {
    let cd = table.class_data();
    let primes = prime_divisors(group.order() as u64);
    table
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let stab = galois_stabilizer(row, cd);
            let p_special_for = match lattice {
                Some(l) => l.special_primes(row, group, cd, &primes)?,
                None => Vec::new(),
            };
            Ok(CharacterProfile {
                degree: table.degree(i),
                feit: feit_from_stabilizer(&stab),
                det_order: determinantal_order(row, cd)?,
                is_rational: stab.is_full(),
                field_degree: stab.field_degree(),
                p_special_for,
            })
        })
        .collect()
}

fn check_normalizes(sub: &FinGroup, x: &Permutation) -> Result<(), InvError> {
    if x.degree() != sub.degree()
        || !sub
            .generators()
            .iter()
            .all(|h| sub.contains(&h.conjugate_by(x)))
    {
        return Err(InvError::NotNormalizing);
    }
    Ok(())
}

/// The conjugate class function `θ^x : n ↦ θ(x·n·x⁻¹)` on `sub`, for `x`
/// normalizing `sub`.
pub fn conjugate_class_function(
    theta: &[Cyclo],
    sub: &FinGroup,
    cd: &ClassData,
    x: &Permutation,
) -> Result<Vec<Cyclo>, InvError> {
    check_normalizes(sub, x)?;
    let xinv = x.inverse();
    Ok(cd
        .reps()
        .iter()
        .map(|&r| {
            let y = sub.element(r).conjugate_by(&xinv);
            theta[cd.class_of(sub.index_of(&y).expect("x normalizes sub"))].clone()
        })
        .collect())
}

/// Whether `theta` is fixed by conjugation with every actor.
pub fn is_invariant_under(
    theta: &[Cyclo],
    sub: &FinGroup,
    cd: &ClassData,
    actors: &[Permutation],
) -> Result<bool, InvError> {
    for x in actors {
        if conjugate_class_function(theta, sub, cd, x)? != theta {
            return Ok(false);
        }
    }
    Ok(true)
}
