use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The cyclotomic polynomial Φ_n with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPoly {
    pub n: u32,
    pub coeffs: Vec<i64>,
}

impl CycloPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Φ_n by exact division of `x^n − 1` by every Φ_d with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u32) -> CycloPoly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    CycloPoly {
        n,
        coeffs: context(n).phi_coeffs.clone(),
    }
}

fn compute_phi(n: u32) -> Vec<i64> {
    // x^n - 1
    let mut rem = vec![0i64; n as usize + 1];
    rem[0] = -1;
    rem[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            rem = exact_div(&rem, &context(d).phi_coeffs);
        }
    }
    rem
}

/// Quotient of `num` by the monic `den`; panics if the division is not exact.
pub(crate) fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "division is not exact");
    quot
}

#[cfg(test)]
pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Per-conductor reduction data: Φ_n and the basis expansion of every ζ_n^i.
#[derive(Debug)]
pub(crate) struct Context {
    pub n: u32,
    pub phi: usize,
    pub phi_coeffs: Vec<i64>,
    /// `powers[i]` expresses ζ_n^i (0 ≤ i < n) in the basis 1, ζ, …, ζ^(φ−1),
    /// as sparse (index, coefficient) pairs.
    pub powers: Vec<Vec<(usize, i64)>>,
    /// Largest absolute coefficient in `powers`.
    pub max_abs: i64,
}

pub(crate) fn context(n: u32) -> Arc<Context> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Context>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(ctx) = cache.lock().expect("cache lock").get(&n) {
        return ctx.clone();
    }
    // Built outside the lock: building Φ_n recursively needs smaller contexts.
    let ctx = Arc::new(build_context(n));
    cache
        .lock()
        .expect("cache lock")
        .entry(n)
        .or_insert(ctx)
        .clone()
}

fn build_context(n: u32) -> Context {
    let phi_coeffs = if n == 1 { vec![-1, 1] } else { compute_phi(n) };
    let phi = phi_coeffs.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    if phi > 0 {
        cur[0] = 1;
    }
    let mut max_abs = 1;
    for _ in 0..n {
        powers.push(
            cur.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect::<Vec<_>>(),
        );
        // multiply by ζ and reduce with ζ^φ = −Σ c_j ζ^j
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * phi_coeffs[j];
            }
        }
        max_abs = max_abs.max(cur.iter().map(|c| c.abs()).max().unwrap_or(0));
    }
    Context {
        n,
        phi,
        phi_coeffs,
        powers,
        max_abs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic_polynomial(1).coeffs, vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).coeffs, vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(12).coeffs, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8).coeffs, vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(7).degree(), 6);
    }

    #[test]
    fn product_over_divisors_is_xn_minus_1() {
        for n in 1..=60u32 {
            let mut prod = vec![1i64];
            for d in 1..=n {
                if n % d == 0 {
                    prod = poly_mul(&prod, &cyclotomic_polynomial(d).coeffs);
                }
            }
            let mut expect = vec![0i64; n as usize + 1];
            expect[0] = -1;
            expect[n as usize] = 1;
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).coeffs.contains(&-2));
    }

    #[test]
    fn power_table_wraps() {
        let ctx = context(6);
        assert_eq!(ctx.phi, 2);
        // ζ6^3 = −1
        assert_eq!(ctx.powers[3], vec![(0, -1)]);
    }
}
