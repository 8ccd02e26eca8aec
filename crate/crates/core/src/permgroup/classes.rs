use super::group::GroupId;
use super::{FinGroup, Permutation};

/// Conjugacy classes of a [`FinGroup`] with power maps.
///
/// Classes are numbered by their smallest element index, so class 0 is the
/// identity class and each representative is the least element of its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    group_id: GroupId,
    group_order: u64,
    exponent: u64,
    reps: Vec<usize>,
    sizes: Vec<u64>,
    class_of: Vec<usize>,
    rep_orders: Vec<u64>,
    /// `power_maps[k][c]` is the class of `g^k` for `g` in class `c`, `0 ≤ k < exponent`.
    power_maps: Vec<Vec<usize>>,
}

impl ClassData {
    /// Partitions `group` into conjugation orbits and fills every power map.
    pub fn new(group: &FinGroup) -> Self {
        let n = group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(start);
            class_of[start] = c;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = group.element(orbit[head]).clone();
                head += 1;
                for g in group.generators() {
                    let y = group
                        .index_of(&x.conjugate_by(g))
                        .expect("conjugate stays in the group");
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        orbit.push(y);
                    }
                }
            }
            sizes.push(orbit.len() as u64);
        }

        let rep_orders: Vec<u64> = reps.iter().map(|&r| group.element(r).order()).collect();
        let exponent = rep_orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o));

        let mut power_maps = vec![vec![0usize; reps.len()]; exponent as usize];
        for (c, &r) in reps.iter().enumerate() {
            let g = group.element(r);
            let mut x = Permutation::identity(group.degree());
            for map in power_maps.iter_mut() {
                map[c] = class_of[group.index_of(&x).expect("power in group")];
                x = x.compose(g);
            }
        }

        ClassData {
            group_id: group.id(),
            group_order: n as u64,
            exponent,
            reps,
            sizes,
            class_of,
            rep_orders,
            power_maps,
        }
    }

    pub fn group_id(&self) -> GroupId {
        self.group_id
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    /// Order of the elements in class `c`.
    pub fn rep_order(&self, c: usize) -> u64 {
        self.rep_orders[c]
    }

    /// Class of `g^k` for `g` in each class; depends only on `k mod exponent`.
    pub fn power_map(&self, k: i64) -> &[usize] {
        let k = k.rem_euclid(self.exponent as i64) as usize;
        &self.power_maps[k]
    }

    pub fn power_maps(&self) -> &[Vec<usize>] {
        &self.power_maps
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_map(-1)[c]
    }

    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.group_order / self.sizes[c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> FinGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|g| Permutation::parse_cycles(g, n).unwrap())
            .collect();
        FinGroup::closure(n, &gens, 100_000).unwrap()
    }

    fn sorted_sizes(cd: &ClassData) -> Vec<u64> {
        let mut s = cd.sizes().to_vec();
        s.sort_unstable();
        s
    }

    #[test]
    fn s3_classes() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let cd = ClassData::new(&s3);
        assert_eq!(sorted_sizes(&cd), vec![1, 2, 3]);
        assert_eq!(cd.reps()[0], 0);
        assert_eq!(cd.exponent(), 6);
        let t = (0..cd.len()).find(|&c| cd.rep_order(c) == 2).unwrap();
        assert_eq!(cd.power_map(2)[t], 0);
        assert_eq!(
            cd.power_map(1),
            (0..cd.len()).collect::<Vec<_>>().as_slice()
        );
    }

    #[test]
    fn trivial_classes() {
        let cd = ClassData::new(&FinGroup::trivial(3));
        assert_eq!(cd.sizes(), &[1]);
        assert_eq!(cd.power_map(0), &[0]);
        assert_eq!(cd.power_map(-1), &[0]);
    }

    #[test]
    fn q8_classes() {
        let q8 = group(8, &["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"]);
        assert_eq!(q8.order(), 8);
        let cd = ClassData::new(&q8);
        assert_eq!(sorted_sizes(&cd), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn c4_cube_is_inverse() {
        let c4 = group(4, &["(1 2 3 4)"]);
        let cd = ClassData::new(&c4);
        let g = c4
            .index_of(&Permutation::parse_cycles("(1 2 3 4)", 4).unwrap())
            .unwrap();
        let ginv = c4
            .index_of(&Permutation::parse_cycles("(1 4 3 2)", 4).unwrap())
            .unwrap();
        assert_eq!(cd.power_map(3)[cd.class_of(g)], cd.class_of(ginv));
        assert_eq!(cd.inverse_class(cd.class_of(g)), cd.class_of(ginv));
    }

    #[test]
    fn reps_are_class_minima() {
        let s4 = group(4, &["(1 2 3 4)", "(1 2)"]);
        let cd = ClassData::new(&s4);
        for (c, &r) in cd.reps().iter().enumerate() {
            assert_eq!(cd.class_of(r), c);
            assert!((0..r).all(|i| cd.class_of(i) != c));
        }
        assert_eq!(cd.sizes().iter().sum::<u64>(), 24);
    }
}
