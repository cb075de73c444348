use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wlpairs_core::generators::cfi::cfi_pair;
use wlpairs_core::generators::collision::find_collision_pairs;
use wlpairs_core::generators::csl::{gen_csl, CslParams};
use wlpairs_core::generators::named;
use wlpairs_core::graph::{canonical_form, enumerate_nonisomorphic};
use wlpairs_core::wl::{distinguishes, WlConfig};

fn wl(c: &mut Criterion) {
    let g = gen_csl(CslParams { m: 41, r: 2 }).unwrap();
    let h = gen_csl(CslParams { m: 41, r: 3 }).unwrap();
    c.bench_function("1wl csl41", |b| b.iter(|| distinguishes(&WlConfig::wl1(), black_box(&g), black_box(&h))));

    let (g, h) = cfi_pair(&named::complete(4)).unwrap();
    let mut group = c.benchmark_group("cfi k4");
    group.sample_size(10);
    for k in [2, 3] {
        group.bench_with_input(BenchmarkId::new("kwl", k), &k, |b, &k| {
            b.iter(|| distinguishes(&WlConfig::kwl(k), &g, &h))
        });
    }
    group.finish();
}

fn canon(c: &mut Criterion) {
    let rook = named::rook(4);
    c.bench_function("canonical rook4", |b| b.iter(|| canonical_form(black_box(&rook), None)));
    let petersen = named::petersen();
    c.bench_function("canonical petersen", |b| b.iter(|| canonical_form(black_box(&petersen), None)));
}

fn collisions(c: &mut Criterion) {
    let graphs = enumerate_nonisomorphic(7).unwrap();
    let wl1 = "1wl".parse().unwrap();
    let mut group = c.benchmark_group("collisions");
    group.sample_size(10);
    group.bench_function("n7 1wl", |b| b.iter(|| find_collision_pairs(&graphs, &wl1, None)));
    group.finish();
}

criterion_group!(benches, wl, canon, collisions);
criterion_main!(benches);
