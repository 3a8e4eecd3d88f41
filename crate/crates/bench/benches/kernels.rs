use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use penrose_bench::greedy;
use penrose_core::generator::default_seed;
use penrose_core::{
    classify_contact, classify_contact_canonical, decode_bits, encode_bits, generate_greedy, sign_quad,
    validate_tiling, LatticeVertex, Tile, TileKind,
};

fn predicates(c: &mut Criterion) {
    c.bench_function("sign_quad", |b| {
        b.iter(|| sign_quad(black_box(-682_000_000), black_box(305_000_000)))
    });
    let n = Tile::new(TileKind::Narrow, 0, LatticeVertex::ORIGIN).unwrap();
    let w = Tile::new(TileKind::Wide, 0, LatticeVertex::new(1, 1, 1, 0)).unwrap();
    c.bench_function("classify_contact", |b| {
        b.iter(|| classify_contact(black_box(&n), black_box(&w)))
    });
    c.bench_function("classify_contact_canonical", |b| {
        b.iter(|| classify_contact_canonical(black_box(LatticeVertex::new(1, 1, 1, 0))))
    });
}

fn tilings(c: &mut Criterion) {
    let mut g = c.benchmark_group("tilings");
    g.sample_size(10);
    for size in [50, 200] {
        g.bench_with_input(BenchmarkId::new("generate_greedy", size), &size, |b, &n| {
            b.iter(|| generate_greedy(n, default_seed(TileKind::Wide)))
        });
        let doc = greedy(size);
        let bits = encode_bits(&doc).unwrap();
        g.bench_with_input(BenchmarkId::new("validate", size), &doc, |b, d| {
            b.iter(|| validate_tiling(d))
        });
        g.bench_with_input(BenchmarkId::new("encode", size), &doc, |b, d| {
            b.iter(|| encode_bits(d))
        });
        g.bench_with_input(BenchmarkId::new("decode", size), &bits, |b, bits| {
            b.iter(|| decode_bits(bits))
        });
    }
    g.finish();
}

criterion_group!(benches, predicates, tilings);
criterion_main!(benches);
