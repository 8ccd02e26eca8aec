mod common;

use std::fs;

use common::*;
use feitlab_core::chartable::compute_character_table;
use feitlab_core::permgroup::{prime_divisors, sylow_subgroup, ClassData, DEFAULT_ORDER_CAP};

#[test]
fn classes_match_double_loop() {
    for e in corpus() {
        let g = e.group(DEFAULT_ORDER_CAP).unwrap();
        if g.order() > 24 {
            continue;
        }
        let cd = ClassData::new(&g);
        assert_eq!(classes_of(&cd), brute_classes(&g), "{}", e.name);
    }
}

#[test]
fn normalizers_match_double_loop() {
    for e in corpus() {
        let g = e.group(DEFAULT_ORDER_CAP).unwrap();
        if g.order() > 24 {
            continue;
        }
        let mut subgroups: Vec<_> = g
            .elements()
            .iter()
            .map(|x| g.subgroup(std::slice::from_ref(x)).unwrap())
            .collect();
        for p in prime_divisors(g.order() as u64) {
            subgroups.push(sylow_subgroup(&g, p).unwrap());
        }
        subgroups.push(g.derived_subgroup());
        for h in &subgroups {
            let n = g.normalizer(h).unwrap();
            assert_eq!(
                n.elements(),
                brute_normalizer(&g, h).as_slice(),
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn abelian_tables_are_dual_groups() {
    let mut seen = 0;
    for e in corpus() {
        let g = e.group(DEFAULT_ORDER_CAP).unwrap();
        if !g.is_abelian() {
            continue;
        }
        seen += 1;
        let cd = ClassData::new(&g);
        let t = compute_character_table(&g, &cd, 0).unwrap();
        let dual = dual_group_rows(&g, &cd);
        assert_eq!(dual.len(), g.order(), "{}", e.name);
        assert!(t.degrees().iter().all(|&d| d == 1));
        let mut a: Vec<String> = t.rows().iter().map(|r| format!("{r:?}")).collect();
        let mut b: Vec<String> = dual.iter().map(|r| format!("{r:?}")).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{}", e.name);
    }
    assert!(seen >= 5);
}

#[test]
fn golden_symmetric_groups() {
    for name in ["S3", "S4"] {
        let e = corpus().into_iter().find(|e| e.name == name).unwrap();
        let g = e.group(DEFAULT_ORDER_CAP).unwrap();
        let cd = ClassData::new(&g);
        let t = compute_character_table(&g, &cd, 0).unwrap();
        let text = fs::read_to_string(golden_dir().join(format!("{name}.txt"))).unwrap();
        matches_golden(&g, &t, &text).unwrap();
    }
}
