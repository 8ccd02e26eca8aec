use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use feitlab_core::chartable::compute_character_table;
use feitlab_core::cyclotomic::parse_cyclo;
use feitlab_core::harness::{
    find_entry, parse_corpus, run_corpus, CheckSelection, PrimeSelection, RunOptions,
    BUNDLED_CORPUS,
};
use feitlab_core::permgroup::{ClassData, FinGroup, DEFAULT_ORDER_CAP};

fn group(name: &str) -> FinGroup {
    let entries = parse_corpus(BUNDLED_CORPUS).unwrap();
    find_entry(&entries, name)
        .unwrap()
        .group(DEFAULT_ORDER_CAP)
        .unwrap()
}

fn tables(c: &mut Criterion) {
    for name in ["GL(2,3)", "A5", "AGL(2,3)"] {
        let g = group(name);
        c.bench_function(&format!("classes {name}"), |b| {
            b.iter(|| ClassData::new(black_box(&g)))
        });
        let cd = ClassData::new(&g);
        c.bench_function(&format!("table {name}"), |b| {
            b.iter(|| compute_character_table(black_box(&g), &cd, 0).unwrap())
        });
    }
}

fn cyclotomic(c: &mut Criterion) {
    let a = parse_cyclo("E(24)-E(24)^3+3*E(24)^7").unwrap();
    let b = parse_cyclo("(1+2*E(3))/3+E(8)").unwrap();
    c.bench_function("cyclo mul Q(24)", |bch| {
        bch.iter(|| black_box(&a) * black_box(&b))
    });
    c.bench_function("cyclo inverse Q(24)", |bch| {
        bch.iter(|| black_box(&a).inverse())
    });
}

fn suites(c: &mut Criterion) {
    let entries = parse_corpus(BUNDLED_CORPUS).unwrap();
    let opts = RunOptions {
        checks: CheckSelection::TheoremA,
        primes: PrimeSelection::All,
        seed: 0,
        max_order: DEFAULT_ORDER_CAP,
    };
    let mut group = c.benchmark_group("corpus");
    group.sample_size(10);
    group.bench_function("theoremA all primes", |b| {
        b.iter(|| run_corpus(&entries, &opts).unwrap())
    });
    group.finish();
}

criterion_group!(benches, tables, cyclotomic, suites);
criterion_main!(benches);
