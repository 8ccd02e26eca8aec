mod common;

use common::*;
use feitlab_core::charinv::feit_number;
use feitlab_core::chartable::{compute_character_table, induce, inner_product, restrict};
use feitlab_core::harness::{
    check_amit_chillag, check_lemmas, check_theorem_a, parse_corpus, render_corpus, CorpusEntry,
    GroupContext,
};
use feitlab_core::permgroup::{prime_divisors, sylow_subgroup, ClassData, FinGroup, Permutation};
use proptest::prelude::*;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group_strategy() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 1..=2)))
}

fn entry_strategy() -> impl Strategy<Value = CorpusEntry> {
    (1usize..=6, 1usize..=3).prop_flat_map(|(n, k)| {
        (
            Just(n),
            prop::collection::vec(perm_strategy(n), k),
            prop::collection::vec("[a-z]{1,6}", 0..3),
            "[A-Za-z0-9():,^]{1,8}",
        )
            .prop_map(|(degree, gens, tags, name)| CorpusEntry {
                name,
                degree,
                generators: gens.iter().map(ToString::to_string).collect(),
                tags,
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_tables_are_valid((n, gens) in group_strategy()) {
        let g = FinGroup::closure(n, &gens, 1000).unwrap();
        let cd = ClassData::new(&g);
        let t = compute_character_table(&g, &cd, 7).unwrap();
        prop_assert_eq!(table_validity(&g, &t), Ok(()));
        for i in 0..t.len() {
            let f = feit_number(t.row(i), &cd);
            prop_assert_eq!(g.order() as u64 % f, 0);
            prop_assert_ne!(f % 4, 2);
        }
    }

    #[test]
    fn reciprocity_with_sylow((n, gens) in group_strategy()) {
        let g = FinGroup::closure(n, &gens, 1000).unwrap();
        let cd = ClassData::new(&g);
        let t = compute_character_table(&g, &cd, 0).unwrap();
        for p in prime_divisors(g.order() as u64) {
            let h = sylow_subgroup(&g, p).unwrap();
            let hcd = ClassData::new(&h);
            let th = compute_character_table(&h, &hcd, 0).unwrap();
            for i in 0..t.len() {
                let (res, _) = restrict(&t.character(i), &g, &cd, &h, &hcd).unwrap();
                for j in 0..th.len() {
                    let ind = induce(&th.character(j), &h, &hcd, &g, &cd).unwrap();
                    prop_assert_eq!(
                        inner_product(&cd, &ind, &t.character(i)).unwrap(),
                        inner_product(&hcd, &res, &th.character(j)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn suites_hold_on_random_groups((n, gens) in group_strategy()) {
        let entry = CorpusEntry {
            name: "R".into(),
            degree: n,
            generators: gens.iter().map(ToString::to_string).collect(),
            tags: vec![],
        };
        let ctx = GroupContext::build(&entry, 0, 1000, true).unwrap();
        let mut results = check_amit_chillag(&ctx);
        for p in prime_divisors(ctx.group.order() as u64) {
            results.extend(check_theorem_a(&ctx, p).unwrap());
            results.extend(check_lemmas(&ctx, p).unwrap());
        }
        for r in results {
            prop_assert!(!r.failed(), "{:?}", r);
        }
    }

    #[test]
    fn corpus_round_trip(entries in prop::collection::vec(entry_strategy(), 0..4)) {
        let mut seen = std::collections::HashSet::new();
        let entries: Vec<CorpusEntry> = entries.into_iter().filter(|e| seen.insert(e.name.clone())).collect();
        let text = render_corpus(&entries);
        let parsed = parse_corpus(&text).unwrap();
        prop_assert_eq!(&parsed, &entries);
        prop_assert_eq!(render_corpus(&parsed), text);
    }
}
