use std::collections::BTreeMap;

use super::{FinGroup, GroupError, Permutation};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

/// A Sylow `p`-subgroup of `group`.
///
/// Starts from the first non-identity `p`-element in element order and keeps
/// adjoining the first element of the normalizer whose `p`-th power falls
/// back into the current subgroup, until the full `p`-part is reached.
pub fn sylow_subgroup(group: &FinGroup, p: u64) -> Result<FinGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let target = p_part(group.order() as u64, p) as usize;
    if target == 1 {
        return Ok(FinGroup::trivial(group.degree()));
    }
    let seed = group
        .elements()
        .iter()
        .find(|x| !x.is_identity() && is_power_of(x.order(), p))
        .expect("Cauchy: a p-element exists when p divides |G|");
    let mut gens = vec![seed.clone()];
    let mut sylow = group.subgroup(&gens)?;
    while sylow.order() < target {
        let norm = group.normalizer(&sylow)?;
        let next = norm
            .elements()
            .iter()
            .find(|y| !sylow.contains(y) && sylow.contains(&y.pow(p)))
            .expect("p divides |N(P):P| while P is not Sylow");
        gens.push(next.clone());
        sylow = group.subgroup(&gens)?;
    }
    Ok(sylow)
}

/// Order of one coset `gK` of a quotient group, with a representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetOrder {
    pub order: u64,
    pub representative: Permutation,
}

/// Element orders of a quotient `N/K`, one entry per coset, listed in order
/// of the least element of each coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpectrum {
    pub quotient_order: u64,
    pub cosets: Vec<CosetOrder>,
}

impl OrderSpectrum {
    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.cosets.iter().map(|c| c.order)
    }

    pub fn max_order(&self) -> u64 {
        self.orders().max().unwrap_or(1)
    }

    pub fn contains(&self, order: u64) -> bool {
        self.orders().any(|o| o == order)
    }

    /// First coset (in element order) whose order is `order`.
    pub fn witness(&self, order: u64) -> Option<&CosetOrder> {
        self.cosets.iter().find(|c| c.order == order)
    }

    /// Multiplicity of each order.
    pub fn histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for o in self.orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }
}

/// The order of every coset of `k` in `n`; `k` must be normal in `n`.
pub fn quotient_order_spectrum(n: &FinGroup, k: &FinGroup) -> Result<OrderSpectrum, GroupError> {
    if !k.is_subgroup_of(n) {
        return Err(GroupError::NotSubgroup);
    }
    if !k.is_normal_in(n) {
        return Err(GroupError::NotNormal);
    }
    let mut visited = vec![false; n.order()];
    let mut cosets = Vec::with_capacity(n.order() / k.order());
    for i in 0..n.order() {
        if visited[i] {
            continue;
        }
        let g = n.element(i);
        for x in k.elements() {
            let j = n.index_of(&g.compose(x)).expect("coset lies in N");
            visited[j] = true;
        }
        let mut order = 1u64;
        let mut power = g.clone();
        while !k.contains(&power) {
            power = power.compose(g);
            order += 1;
        }
        cosets.push(CosetOrder {
            order,
            representative: g.clone(),
        });
    }
    Ok(OrderSpectrum {
        quotient_order: cosets.len() as u64,
        cosets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> FinGroup {
        let gens: Vec<_> = gens.iter().map(|g| perm(g, n)).collect();
        FinGroup::closure(n, &gens, 100_000).unwrap()
    }

    #[test]
    fn number_helpers() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(15));
        assert_eq!(prime_divisors(48), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(48, 2), 16);
        assert_eq!(p_part(48, 5), 1);
        assert!(is_power_of(1, 3) && is_power_of(27, 3) && !is_power_of(6, 3));
    }

    #[test]
    fn sylow_examples() {
        let gl23 = group(8, &["(1 4 7)(2 8 5)", "(3 6)(4 7)(5 8)", "(1 3)(2 6)(5 7)"]);
        assert_eq!(sylow_subgroup(&gl23, 3).unwrap().order(), 3);
        assert_eq!(sylow_subgroup(&gl23, 2).unwrap().order(), 16);
        assert_eq!(sylow_subgroup(&gl23, 5).unwrap().order(), 1);
        let a5 = group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let p = sylow_subgroup(&a5, 2).unwrap();
        assert_eq!(p.order(), 4);
        assert!(p.elements().iter().all(|x| x.order() <= 2));
        assert_eq!(sylow_subgroup(&a5, 4), Err(GroupError::NotPrime(4)));
    }

    #[test]
    fn gl23_sylow3_normalizer() {
        let gl23 = group(8, &["(1 4 7)(2 8 5)", "(3 6)(4 7)(5 8)", "(1 3)(2 6)(5 7)"]);
        let p = sylow_subgroup(&gl23, 3).unwrap();
        let n = gl23.normalizer(&p).unwrap();
        assert_eq!(n.order(), 12);
        assert_eq!(n.exponent(), 6);
        let spectrum = quotient_order_spectrum(&n, &p.derived_subgroup()).unwrap();
        assert_eq!(spectrum.max_order(), 6);
        assert!(!spectrum.contains(8));
    }

    #[test]
    fn spectrum_examples() {
        let c6 = group(5, &["(1 2 3)(4 5)"]);
        let c2 = c6.subgroup(&[perm("(4 5)", 5)]).unwrap();
        let spectrum = quotient_order_spectrum(&c6, &c2).unwrap();
        let mut orders: Vec<u64> = spectrum.orders().collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 3, 3]);
        assert_eq!(spectrum.quotient_order, 3);
        let whole = quotient_order_spectrum(&c6, &c6).unwrap();
        assert_eq!(whole.orders().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn spectrum_rejects_non_normal() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let c2 = s3.subgroup(&[perm("(1 2)", 3)]).unwrap();
        assert_eq!(
            quotient_order_spectrum(&s3, &c2),
            Err(GroupError::NotNormal)
        );
        let other = group(3, &["(1 2 3)"]);
        assert_eq!(
            quotient_order_spectrum(&c2, &other),
            Err(GroupError::NotSubgroup)
        );
    }
}
