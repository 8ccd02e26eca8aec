//! Dixon–Schneider: split the class algebra over F_ℓ into common eigenspaces,
//! then lift the central characters back to Q(ζ_e).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::{choose_prime, inv_mod, mul_mod, nullspace, pow_mod, primitive_root, rref};
use super::TableError;
use crate::cyclotomic::Cyclo;
use crate::permgroup::{ClassData, FinGroup};

/// Structure constants of the class algebra: `get(i, j, k)` counts pairs
/// `(x, y) ∈ C_i × C_j` with `x·y = z` for the fixed representative `z` of `C_k`.
#[derive(Clone, Debug)]
pub struct ClassConstants {
    r: usize,
    data: Vec<u64>,
}

impl ClassConstants {
    pub fn new(group: &FinGroup, cd: &ClassData) -> Self {
        let r = cd.len();
        let mut data = vec![0u64; r * r * r];
        let inverses: Vec<usize> = group
            .elements()
            .iter()
            .map(|x| group.index_of(&x.inverse()).expect("inverse in group"))
            .collect();
        for (k, &zi) in cd.reps().iter().enumerate() {
            for (x, &xinv) in inverses.iter().enumerate() {
                let i = cd.class_of(x);
                let y = group.mul_index(xinv, zi);
                let j = cd.class_of(y);
                data[(i * r + j) * r + k] += 1;
            }
        }
        ClassConstants { r, data }
    }

    pub fn len(&self) -> usize {
        self.r
    }

    pub fn is_empty(&self) -> bool {
        self.r == 0
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

pub(crate) struct DixonOutput {
    pub prime: u64,
    pub rows: Vec<Vec<Cyclo>>,
    pub degrees: Vec<u64>,
}

pub(crate) fn dixon_schneider(
    group: &FinGroup,
    cd: &ClassData,
    seed: u64,
    retry_budget: usize,
) -> Result<DixonOutput, TableError> {
    let order = group.order() as u64;
    let e = cd.exponent();
    let r = cd.len();
    let l = choose_prime(e, order);
    let consts = ClassConstants::new(group, cd);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let eigvecs = split_eigenspaces(&consts, l, &mut rng, retry_budget)?;
    debug_assert_eq!(eigvecs.len(), r);

    let z = pow_mod(primitive_root(l), (l - 1) / e, l);
    let z_inv = inv_mod(z, l);
    let e_inv = inv_mod(e % l, l);
    let sizes: Vec<u64> = cd.sizes().iter().map(|s| s % l).collect();
    let max_degree = (order as f64).sqrt().floor() as u64;

    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for w in eigvecs {
        // w[c] = ω(C_c) = |C_c|·χ(c)/χ(1) (mod ℓ), with w[0] = 1.
        let mut s = 0u64;
        for c in 0..r {
            let t = mul_mod(w[c], w[cd.inverse_class(c)], l);
            s = (s + mul_mod(t, inv_mod(sizes[c], l), l)) % l;
        }
        if s == 0 {
            return Err(TableError::LiftFailure(
                "degenerate central character norm".into(),
            ));
        }
        let d2 = mul_mod(order % l, inv_mod(s, l), l);
        let degree = (1..=max_degree)
            .find(|&d| (d * d) % l == d2)
            .ok_or_else(|| {
                TableError::LiftFailure(format!("no integer degree with square {d2} mod {l}"))
            })?;

        let modular: Vec<u64> = (0..r)
            .map(|c| mul_mod(mul_mod(w[c], degree % l, l), inv_mod(sizes[c], l), l))
            .collect();

        let mut row = Vec::with_capacity(r);
        for c in 0..r {
            let values: Vec<u64> = (0..e as usize)
                .map(|k| modular[cd.power_maps()[k][c]])
                .collect();
            let mut mults = vec![0i64; e as usize];
            let mut total = 0u64;
            for (j, m) in mults.iter_mut().enumerate() {
                // m_j = (1/e)·Σ_k χ̃(c^k)·z^(−jk)
                let step = pow_mod(z_inv, j as u64, l);
                let mut acc = 0u64;
                let mut zz = 1u64;
                for &v in &values {
                    acc = (acc + mul_mod(v, zz, l)) % l;
                    zz = mul_mod(zz, step, l);
                }
                let mj = mul_mod(acc, e_inv, l);
                if mj > degree {
                    return Err(TableError::LiftFailure(format!(
                        "multiplicity {mj} of ζ_{e}^{j} on class {c} exceeds degree {degree}"
                    )));
                }
                total += mj;
                *m = mj as i64;
            }
            if total != degree {
                return Err(TableError::LiftFailure(format!(
                    "multiplicities on class {c} sum to {total}, expected {degree}"
                )));
            }
            row.push(Cyclo::from_root_coeffs(e as u32, &mults));
        }
        rows.push(row);
        degrees.push(degree);
    }
    Ok(DixonOutput {
        prime: l,
        rows,
        degrees,
    })
}

/// Common eigenvectors of the class matrices `M_i[j][k] = a_ijk`, each scaled
/// so that its identity-class entry is 1.
fn split_eigenspaces(
    consts: &ClassConstants,
    l: u64,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<Vec<Vec<u64>>, TableError> {
    let r = consts.len();
    let mut pending: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    let mut done = Vec::with_capacity(r);

    while let Some(space) = pending.pop() {
        if space.len() == 1 {
            done.push(space.into_iter().next().expect("one vector"));
            continue;
        }
        let mut split = None;
        for _ in 0..retry_budget {
            let coeffs: Vec<u64> = (0..r).map(|_| rng.random_range(0..l)).collect();
            let pieces = eigenspaces_of_combination(consts, &coeffs, &space, l)?;
            if pieces.len() > 1 {
                split = Some(pieces);
                break;
            }
        }
        match split {
            Some(pieces) => pending.extend(pieces),
            None => {
                return Err(TableError::SplittingFailed {
                    dim: space.len(),
                    attempts: retry_budget,
                })
            }
        }
    }

    for v in done.iter_mut() {
        if v[0] == 0 {
            return Err(TableError::LiftFailure(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let inv = inv_mod(v[0], l);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, l);
        }
    }
    Ok(done)
}

/// Restricts `Σ coeffs[i]·M_i` to the invariant subspace spanned by the RREF
/// rows of `space` and decomposes it into eigenspaces.
fn eigenspaces_of_combination(
    consts: &ClassConstants,
    coeffs: &[u64],
    space: &[Vec<u64>],
    l: u64,
) -> Result<Vec<Vec<Vec<u64>>>, TableError> {
    let r = consts.len();
    let d = space.len();
    let pivots: Vec<usize> = space
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();

    let mut combined = vec![vec![0u64; r]; r];
    for (i, &ci) in coeffs.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        for (j, row) in combined.iter_mut().enumerate() {
            for (k, x) in row.iter_mut().enumerate() {
                let a = consts.get(i, j, k);
                if a != 0 {
                    *x = (*x + mul_mod(ci, a % l, l)) % l;
                }
            }
        }
    }

    // coordinates of M·b_t in the basis, read off at the pivot columns
    let mut restricted = vec![vec![0u64; d]; d];
    for (t, b) in space.iter().enumerate() {
        for (s, &p) in pivots.iter().enumerate() {
            let mut acc = 0u64;
            for (k, &bk) in b.iter().enumerate() {
                if bk != 0 {
                    acc = (acc + mul_mod(combined[p][k], bk, l)) % l;
                }
            }
            restricted[s][t] = acc;
        }
    }

    let mut pieces = Vec::new();
    let mut found = 0;
    for lambda in 0..l {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(s, row)| {
                row.iter()
                    .enumerate()
                    .map(|(t, &x)| if s == t { (x + l - lambda) % l } else { x })
                    .collect()
            })
            .collect();
        let kernel = nullspace(&shifted, l);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        let mut vectors: Vec<Vec<u64>> = kernel
            .iter()
            .map(|x| {
                let mut v = vec![0u64; r];
                for (t, &xt) in x.iter().enumerate() {
                    if xt != 0 {
                        for (vi, &bi) in v.iter_mut().zip(&space[t]) {
                            *vi = (*vi + mul_mod(xt, bi, l)) % l;
                        }
                    }
                }
                v
            })
            .collect();
        rref(&mut vectors, l);
        pieces.push(vectors);
        if found == d {
            break;
        }
    }
    if found != d {
        return Err(TableError::SplittingFailed {
            dim: d,
            attempts: 0,
        });
    }
    Ok(pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    fn group(n: usize, gens: &[&str]) -> FinGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|g| Permutation::parse_cycles(g, n).unwrap())
            .collect();
        FinGroup::closure(n, &gens, 100_000).unwrap()
    }

    #[test]
    fn s3_class_constants() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let cd = ClassData::new(&s3);
        let a = ClassConstants::new(&s3, &cd);
        let t = (0..cd.len()).find(|&c| cd.rep_order(c) == 2).unwrap();
        let r3 = (0..cd.len()).find(|&c| cd.rep_order(c) == 3).unwrap();
        assert_eq!(a.get(t, t, 0), 3);
        assert_eq!(a.get(t, t, r3), 3);
        assert_eq!(a.get(t, t, t), 0);
        assert_eq!(a.get(r3, r3, r3), 1);
        for j in 0..cd.len() {
            for k in 0..cd.len() {
                assert_eq!(a.get(0, j, k), u64::from(j == k));
            }
        }
    }

    #[test]
    fn class_constant_counting_identity() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let cd = ClassData::new(&s4);
        let a = ClassConstants::new(&s4, &cd);
        for i in 0..cd.len() {
            for j in 0..cd.len() {
                let lhs: u64 = (0..cd.len()).map(|k| a.get(i, j, k) * cd.sizes()[k]).sum();
                assert_eq!(lhs, cd.sizes()[i] * cd.sizes()[j]);
            }
        }
    }
}
