//! Permutations, fully enumerated permutation groups and the subgroup
//! machinery around Sylow normalizers.

mod classes;
mod group;
mod perm;
mod sylow;

use thiserror::Error;

pub use classes::ClassData;
pub use group::{FinGroup, GroupId};
pub use perm::Permutation;
pub use sylow::{
    is_power_of, is_prime, p_part, prime_divisors, quotient_order_spectrum, sylow_subgroup,
    CosetOrder, OrderSpectrum,
};

/// Default upper bound on the number of elements a closure may produce.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeds the cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cycle notation: {0}")]
    Parse(String),
}

/// Convenience wrapper for closure with the default cap.
pub fn group_closure(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<FinGroup, GroupError> {
    FinGroup::closure(degree, generators, cap)
}

/// Conjugacy classes of `group`.
pub fn conjugacy_classes(group: &FinGroup) -> ClassData {
    ClassData::new(group)
}
