//! Brute-force oracles and table checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};
use std::path::PathBuf;

use feitlab_core::chartable::CharacterTable;
use feitlab_core::cyclotomic::{units, Cyclo};
use feitlab_core::harness::{parse_corpus, CorpusEntry, BUNDLED_CORPUS};
use feitlab_core::permgroup::{ClassData, FinGroup, Permutation};

pub fn corpus() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED_CORPUS).unwrap()
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden")
}

/// Conjugacy classes by the double loop over `x` and `g`, as sorted index sets.
pub fn brute_classes(group: &FinGroup) -> BTreeSet<BTreeSet<usize>> {
    let mut classes = BTreeSet::new();
    for x in group.elements() {
        let class: BTreeSet<usize> = group
            .elements()
            .iter()
            .map(|g| group.index_of(&g.inverse().compose(x).compose(g)).unwrap())
            .collect();
        classes.insert(class);
    }
    classes
}

pub fn classes_of(cd: &ClassData) -> BTreeSet<BTreeSet<usize>> {
    let mut parts = vec![BTreeSet::new(); cd.len()];
    for (i, &c) in cd.class_map().iter().enumerate() {
        parts[c].insert(i);
    }
    parts.into_iter().collect()
}

/// `{g : g⁻¹Hg = H}` by testing every element of `group`.
pub fn brute_normalizer(group: &FinGroup, h: &FinGroup) -> Vec<Permutation> {
    let set: BTreeSet<&Permutation> = h.elements().iter().collect();
    group
        .elements()
        .iter()
        .filter(|g| {
            h.elements()
                .iter()
                .all(|x| set.contains(&g.inverse().compose(x).compose(g)))
        })
        .cloned()
        .collect()
}

/// Irreducible characters of an abelian group as homomorphisms to the
/// `e`-th roots of unity: every assignment of roots to the generators that
/// extends consistently along a breadth-first walk.
pub fn dual_group_rows(group: &FinGroup, cd: &ClassData) -> Vec<Vec<Cyclo>> {
    let e = group.exponent();
    let gens = group.generators();
    let n = group.order();
    let mut rows = Vec::new();
    let mut tuple = vec![0u64; gens.len()];
    loop {
        let mut expo: Vec<Option<u64>> = vec![None; n];
        expo[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        let mut ok = true;
        while let Some(i) = queue.pop_front() {
            let a = expo[i].unwrap();
            for (g, &t) in gens.iter().zip(&tuple) {
                let j = group.index_of(&group.element(i).compose(g)).unwrap();
                let b = (a + t) % e;
                match expo[j] {
                    None => {
                        expo[j] = Some(b);
                        queue.push_back(j);
                    }
                    Some(c) if c != b => ok = false,
                    _ => {}
                }
            }
        }
        if ok {
            rows.push(
                cd.reps()
                    .iter()
                    .map(|&r| Cyclo::root_of_unity(e as u32, expo[r].unwrap() as i64))
                    .collect(),
            );
        }
        let mut k = 0;
        loop {
            if k == tuple.len() {
                return rows;
            }
            tuple[k] += 1;
            if tuple[k] < e {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
    }
}

/// Cycle type such as `1^2.2`, fixed points included.
pub fn cycle_type(x: &Permutation) -> String {
    let mut lens: Vec<usize> = x.cycles().iter().map(Vec::len).collect();
    let fixed = x.degree() - lens.iter().sum::<usize>();
    lens.extend(std::iter::repeat_n(1, fixed));
    lens.sort_unstable();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for l in lens {
        match counts.last_mut() {
            Some((m, c)) if *m == l => *c += 1,
            _ => counts.push((l, 1)),
        }
    }
    counts
        .iter()
        .map(|&(l, c)| {
            if c == 1 {
                l.to_string()
            } else {
                format!("{l}^{c}")
            }
        })
        .collect::<Vec<_>>()
        .join(".")
}

/// Compares `table` against a golden file whose columns are labelled by cycle
/// type. Rows are compared as a set.
pub fn matches_golden(group: &FinGroup, table: &CharacterTable, text: &str) -> Result<(), String> {
    let mut lines = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    let header: Vec<&str> = lines
        .next()
        .ok_or("empty golden file")?
        .split_whitespace()
        .collect();
    let cd = table.class_data();
    let col_of_class: Vec<usize> = cd
        .reps()
        .iter()
        .map(|&r| {
            let t = cycle_type(group.element(r));
            header
                .iter()
                .position(|h| *h == t)
                .ok_or(format!("class type {t} missing"))
        })
        .collect::<Result<_, _>>()?;
    let golden: BTreeSet<Vec<i64>> = lines
        .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect();
    let computed: BTreeSet<Vec<i64>> = table
        .rows()
        .iter()
        .map(|row| {
            let mut v = vec![0i64; header.len()];
            for (c, val) in row.iter().enumerate() {
                v[col_of_class[c]] = val.to_i64().expect("rational table");
            }
            v
        })
        .collect();
    if header.len() != cd.len() || golden != computed {
        return Err(format!("golden {golden:?} != computed {computed:?}"));
    }
    Ok(())
}

fn dot(a: &[Cyclo], b: &[Cyclo], weights: &[u64]) -> Cyclo {
    let mut s = Cyclo::zero(1);
    for ((x, y), &w) in a.iter().zip(b).zip(weights) {
        s = &s + &(x * &y.conj()).scale_int(w as i64);
    }
    s
}

/// Row and column orthogonality, Σχ(1)² = |G|, integral degrees dividing
/// `|G|`, and closure of the row set under Galois action.
pub fn table_validity(group: &FinGroup, table: &CharacterTable) -> Result<(), String> {
    let cd = table.class_data();
    let n = group.order() as i64;
    let r = table.len();
    if r != cd.len() {
        return Err(format!("{r} rows for {} classes", cd.len()));
    }
    for i in 0..r {
        for j in 0..r {
            let ip = dot(table.row(i), table.row(j), cd.sizes());
            let want = if i == j { n } else { 0 };
            if ip != Cyclo::from_int(1, want) {
                return Err(format!("<X{i}, X{j}> = {ip}/|G|"));
            }
        }
    }
    let ones = vec![1u64; r];
    for c in 0..r {
        for d in 0..r {
            let col_c: Vec<Cyclo> = table.rows().iter().map(|row| row[c].clone()).collect();
            let col_d: Vec<Cyclo> = table.rows().iter().map(|row| row[d].clone()).collect();
            let s = dot(&col_c, &col_d, &ones);
            let want = if c == d {
                cd.centralizer_order(c) as i64
            } else {
                0
            };
            if s != Cyclo::from_int(1, want) {
                return Err(format!("columns {c}, {d} give {s}"));
            }
        }
    }
    let mut sum = 0i64;
    for i in 0..r {
        let d = table.row(i)[0]
            .to_i64()
            .ok_or(format!("degree of X{i} is not an integer"))?;
        if d < 1 || n % d != 0 || d as u64 != table.degree(i) {
            return Err(format!("degree {d} of X{i}"));
        }
        sum += d * d;
    }
    if sum != n {
        return Err(format!("sum of squared degrees {sum} != {n}"));
    }
    for k in units(cd.exponent()) {
        let map = cd.power_map(k as i64);
        for (i, row) in table.rows().iter().enumerate() {
            let by_values: Vec<Cyclo> = row.iter().map(|v| v.galois(k as i64).unwrap()).collect();
            let by_powers: Vec<Cyclo> = map.iter().map(|&c| row[c].clone()).collect();
            if by_values != by_powers {
                return Err(format!("σ_{k} of X{i} disagrees with the power map"));
            }
            if table.find_row(&by_values).is_none() {
                return Err(format!("σ_{k} of X{i} is not a row"));
            }
        }
    }
    Ok(())
}

/// Power maps compose: `(x^a)^b = x^(ab)`.
pub fn power_map_law(cd: &ClassData) -> Result<(), String> {
    let e = cd.exponent() as i64;
    for a in 0..e {
        for b in 0..e {
            let ab = cd.power_map(a * b);
            let pa = cd.power_map(a);
            let pb = cd.power_map(b);
            if (0..cd.len()).any(|c| pb[pa[c]] != ab[c]) {
                return Err(format!("power maps {a}, {b}"));
            }
        }
    }
    Ok(())
}
