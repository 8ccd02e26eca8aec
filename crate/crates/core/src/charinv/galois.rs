use serde::Serialize;

use crate::cyclotomic::{totient, units, Cyclo};
use crate::permgroup::ClassData;

/// The residues `k` (coprime to the group exponent) whose Galois automorphism
/// σ_k fixes a character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisStabilizer {
    pub modulus: u64,
    pub members: Vec<u64>,
}

impl GaloisStabilizer {
    pub fn contains(&self, k: u64) -> bool {
        let k = if self.modulus == 1 {
            0
        } else {
            k % self.modulus
        };
        self.members.binary_search(&k).is_ok()
    }

    /// `[Q(χ) : Q]`, the index of the stabilizer in the unit group.
    pub fn field_degree(&self) -> u64 {
        totient(self.modulus) / self.members.len() as u64
    }

    pub fn is_full(&self) -> bool {
        self.members.len() as u64 == totient(self.modulus)
    }
}

/// `{k : χ(g^k) = χ(g) for every class}`, using χ^{σ_k}(g) = χ(g^k).
pub fn galois_stabilizer(chi: &[Cyclo], cd: &ClassData) -> GaloisStabilizer {
    let e = cd.exponent();
    let members = units(e)
        .into_iter()
        .filter(|&k| {
            let map = cd.power_map(k as i64);
            (0..cd.len()).all(|c| chi[map[c]] == chi[c])
        })
        .collect();
    GaloisStabilizer {
        modulus: e,
        members,
    }
}

/// Smallest `d` dividing the modulus such that every unit `k ≡ 1 (mod d)`
/// lies in the stabilizer, i.e. the conductor of the fixed field.
pub fn feit_from_stabilizer(stab: &GaloisStabilizer) -> u64 {
    let e = stab.modulus;
    let all = units(e);
    (1..=e)
        .filter(|d| e.is_multiple_of(*d))
        .find(|&d| {
            all.iter()
                .filter(|&&k| k % d == 1 % d)
                .all(|&k| stab.contains(k))
        })
        .expect("d = e always qualifies")
}

/// The Feit number f_χ: the least `n` with all values of χ in Q(ζ_n).
pub fn feit_number(chi: &[Cyclo], cd: &ClassData) -> u64 {
    feit_from_stabilizer(&galois_stabilizer(chi, cd))
}
