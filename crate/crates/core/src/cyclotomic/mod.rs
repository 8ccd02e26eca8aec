//! Exact arithmetic in cyclotomic fields Q(ζ_n).

mod parse;
mod poly;
mod value;

use thiserror::Error;

pub use parse::parse_cyclo;
pub use poly::{cyclotomic_polynomial, CycloPoly};
pub use value::Cyclo;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("Galois exponent {k} is not coprime to the conductor {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("cannot parse cyclotomic value: {0}")]
    Parse(String),
}

/// ζ_n^i at context `n`.
pub fn root_of_unity(n: u32, i: i64) -> Cyclo {
    Cyclo::root_of_unity(n, i)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Residues in `1..n` coprime to `n` (just `[0]` for n = 1, since every
/// integer is a unit mod 1).
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| num_integer::gcd(k, n) == 1).collect()
}
