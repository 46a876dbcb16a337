use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use llt_bench::{running_example, two_matching_example};
use llt_core::checks::criterion_8;
use llt_core::lattice::{enumerate_configs, partition_function};
use llt_core::relations::{catalan_check, group_by_matching};
use llt_core::swap::{bead_sequence, enumerate_noncrossing_matchings, phi};
use llt_core::tableaux::llt_poly;

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("llt");
    let t = running_example();
    for n in [2usize, 3] {
        g.bench_with_input(BenchmarkId::new("tableaux", n), &n, |b, &n| b.iter(|| llt_poly(black_box(&t), n).unwrap()));
        g.bench_with_input(BenchmarkId::new("lattice", n), &n, |b, &n| {
            b.iter(|| partition_function(black_box(&t), n).unwrap())
        });
    }
    g.finish();
}

fn swapping(c: &mut Criterion) {
    let t = two_matching_example();
    let configs = enumerate_configs(&t, 4).unwrap();
    c.bench_function("phi over all configs", |b| {
        b.iter(|| configs.iter().map(|cfg| phi(cfg).unwrap().cols).sum::<usize>())
    });
    let beads = bead_sequence(&running_example()).unwrap();
    c.bench_function("enumerate matchings", |b| b.iter(|| enumerate_noncrossing_matchings(black_box(&beads))));
    c.bench_function("classification up to 8 beads", |b| b.iter(|| criterion_8(8).unwrap()));
}

fn relations(c: &mut Criterion) {
    let t = two_matching_example();
    c.bench_function("group by matching", |b| b.iter(|| group_by_matching(black_box(&t), 3).unwrap()));
    let mut g = c.benchmark_group("catalan");
    g.sample_size(10);
    g.bench_function("three arcs", |b| b.iter(|| catalan_check(&[5, 4, 3, 2, 1, 0], 3).unwrap()));
    g.finish();
}

criterion_group!(benches, oracles, swapping, relations);
criterion_main!(benches);
