use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::InvError;
use crate::cyclotomic::Cyclo;
use crate::permgroup::ClassData;

/// The determinant of a character as a linear character: on class `c` it
/// takes the value ζ_e^{exponents[c]}, with `e` the group exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Determinant {
    pub modulus: u64,
    pub exponents: Vec<u64>,
}

impl Determinant {
    /// Multiplicative order of the linear character.
    pub fn order(&self) -> u64 {
        self.exponents.iter().fold(1u64, |acc, &x| {
            acc.lcm(&(self.modulus / x.gcd(&self.modulus)))
        })
    }

    pub fn values(&self) -> Vec<Cyclo> {
        self.exponents
            .iter()
            .map(|&x| Cyclo::root_of_unity(self.modulus as u32, x as i64))
            .collect()
    }
}

/// Multiplicities `a_j` of the eigenvalues ζ_m^j of a representation affording
/// `chi` at an element of order `m` in class `c`:
/// `a_j = (1/m)·Σ_t χ(g^t)·ζ_m^(−jt)`.
pub fn eigenvalue_multiplicities(
    chi: &[Cyclo],
    cd: &ClassData,
    c: usize,
) -> Result<Vec<u64>, InvError> {
    let m = cd.rep_order(c);
    let ctx = chi
        .iter()
        .fold(cd.exponent(), |acc, v| acc.lcm(&u64::from(v.context())));
    let step = (ctx / m) as i64;
    let values: Vec<Cyclo> = (0..m)
        .map(|t| chi[cd.power_map(t as i64)[c]].lift(ctx as u32))
        .collect();
    let degree = chi[0]
        .to_integer()
        .filter(|d| !d.is_negative())
        .ok_or_else(|| {
            InvError::DecompositionFailure(format!("degree {} is not a natural number", chi[0]))
        })?;

    let mut mults = Vec::with_capacity(m as usize);
    for j in 0..m as i64 {
        let mut sum = Cyclo::zero(ctx as u32);
        for (t, v) in values.iter().enumerate() {
            sum = &sum + &v.mul_root(-j * t as i64 * step);
        }
        let a = sum.div_int(m as i64);
        let a = a
            .to_integer()
            .filter(|x| !x.is_negative())
            .and_then(|x| x.to_u64())
            .ok_or_else(|| {
                InvError::DecompositionFailure(format!(
                    "multiplicity of ζ_{m}^{j} on class {c} is {a}"
                ))
            })?;
        mults.push(a);
    }
    let total: u64 = mults.iter().sum();
    if Some(total) != degree.to_u64() {
        return Err(InvError::DecompositionFailure(format!(
            "multiplicities on class {c} sum to {total}, degree is {degree}"
        )));
    }
    Ok(mults)
}

/// det χ, computed class by class from the eigenvalue multiplicities.
pub fn determinant(chi: &[Cyclo], cd: &ClassData) -> Result<Determinant, InvError> {
    let e = cd.exponent();
    let mut exponents = Vec::with_capacity(cd.len());
    for c in 0..cd.len() {
        let m = cd.rep_order(c);
        let mults = eigenvalue_multiplicities(chi, cd, c)?;
        let s: u64 = mults
            .iter()
            .enumerate()
            .map(|(j, &a)| (j as u64 * a) % m)
            .sum::<u64>()
            % m;
        exponents.push(s * (e / m) % e.max(1));
    }
    Ok(Determinant {
        modulus: e,
        exponents,
    })
}

/// The determinantal order o(χ).
pub fn determinantal_order(chi: &[Cyclo], cd: &ClassData) -> Result<u64, InvError> {
    Ok(determinant(chi, cd)?.order())
}
