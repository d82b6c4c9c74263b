//! Criterion benchmarks for the matching engines; run with
//! `cargo bench -p hipermotif-bench`.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion, Throughput};
use hipermotif::generate::{generate, random_pattern, sample_pattern, seeded_rng, Family, GeneratorSpec};
use hipermotif::{run_prepared, structural_reorder, Engine, MatchConfig, PreparedPattern, PropertyGraph};

/// Cap on matches per run so heavy instances keep iterations short.
pub const MATCH_LIMIT: usize = 20_000;

/// A directed ER target and a connected pattern sampled from it, so the
/// pattern has at least one embedding.
pub fn er_instance(n: usize, p: f64, pattern_size: usize, seed: u64) -> (PropertyGraph, PreparedPattern) {
    let target = generate(&GeneratorSpec::new(Family::ErdosRenyi { p }, n, seed)).expect("valid parameters");
    let mut rng = seeded_rng(seed);
    loop {
        let pattern = sample_pattern(&target, pattern_size, &mut rng).expect("target has edges");
        let prepared = PreparedPattern::new(&pattern, true).expect("sampled patterns have no self-loops");
        if prepared.check_seed_edge().is_ok() {
            return (target, prepared);
        }
    }
}

pub fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("engines");
    group.sample_size(10);
    for size in [3, 4, 5] {
        let (target, prepared) = er_instance(2000, 0.002, size, 11);
        let config = MatchConfig {
            match_limit: Some(MATCH_LIMIT),
            ..MatchConfig::default()
        };
        let matches = run_prepared(Engine::Vf2ps, &prepared, &target, &config).unwrap().len();
        group.throughput(Throughput::Elements(matches as u64));
        for engine in [Engine::HiPerMotif, Engine::Vf2ps] {
            group.bench_with_input(BenchmarkId::new(engine.name(), size), &size, |b, _| {
                b.iter(|| run_prepared(engine, black_box(&prepared), &target, &config).unwrap().len())
            });
        }
    }
    group.finish();
}

pub fn workers(c: &mut Criterion) {
    let mut group = c.benchmark_group("workers");
    group.sample_size(10);
    let (target, prepared) = er_instance(5000, 0.001, 5, 12);
    for workers in [1, 2, 4, 8] {
        let config = MatchConfig {
            workers,
            match_limit: Some(MATCH_LIMIT),
            ..MatchConfig::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(workers), &workers, |b, _| {
            b.iter(|| run_prepared(Engine::HiPerMotif, black_box(&prepared), &target, &config).unwrap().len())
        });
    }
    group.finish();
}

pub fn reorder(c: &mut Criterion) {
    let mut group = c.benchmark_group("reorder");
    let mut rng = seeded_rng(13);
    for size in [5, 10, 20] {
        let pattern = random_pattern(size, 2 * size, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(size), &pattern, |b, p| {
            b.iter(|| structural_reorder(black_box(p)).unwrap())
        });
    }
    group.finish();
}
