use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use distext::extend::{is_k_extendable_direct, is_k_extendable_tutte};
use distext::graph::canonical_form_with_cap;
use distext::matching::max_matching;
use distext::spectrum::{distance_matrix, spectral_radius, DEFAULT_TOL};
use distext_bench::{connected_fixtures, fixtures};

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral-radius");
    for (name, g) in connected_fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| {
                let d = distance_matrix(g).unwrap();
                spectral_radius(&d, DEFAULT_TOL).unwrap().radius
            })
        });
    }
    group.finish();
}

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("max-matching");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| max_matching(black_box(g)).len()));
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical-form");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| canonical_form_with_cap(black_box(g), g.order()).unwrap())
        });
    }
    group.finish();
}

fn extendability(c: &mut Criterion) {
    let mut group = c.benchmark_group("extendability");
    group.sample_size(20);
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.order() <= 12) {
        group.bench_with_input(BenchmarkId::new("direct", name), &g, |b, g| b.iter(|| is_k_extendable_direct(g, 2).holds));
        group.bench_with_input(BenchmarkId::new("tutte", name), &g, |b, g| {
            b.iter(|| is_k_extendable_tutte(g, 2).unwrap().holds)
        });
    }
    group.finish();
}

criterion_group!(benches, spectral, matching, canonical, extendability);
criterion_main!(benches);
