use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sgp_core::gorenstein::{is_nearly_gorenstein, ng_vectors};
use sgp_core::rf::rf_plus_enumeration;
use sgp_core::verify::{check_all, check_semigroup, CheckOptions, Claim, GenusTree, HarnessConfig};
use sgp_core::NumericalSemigroup;

const EXAMPLE: [i64; 5] = [13, 45, 72, 79, 99];
const BIG_AS: [i64; 6] = [455, 497, 574, 589, 631, 708];

fn semigroup(c: &mut Criterion) {
    c.bench_function("construct big example (Apéry, F, PF)", |b| {
        b.iter(|| {
            let s = NumericalSemigroup::new(black_box(&BIG_AS)).unwrap();
            s.pseudo_frobenius()
        })
    });
    let s = NumericalSemigroup::new(&BIG_AS).unwrap();
    c.bench_function("factorizations of F + n_6", |b| {
        b.iter(|| s.factorizations(black_box(7846 + 708)))
    });
}

fn gorenstein(c: &mut Criterion) {
    let ex = NumericalSemigroup::new(&EXAMPLE).unwrap();
    let big = NumericalSemigroup::new(&BIG_AS).unwrap();
    c.bench_function("ng_vectors of the five-generated example", |b| {
        b.iter(|| ng_vectors(black_box(&ex)).unwrap())
    });
    c.bench_function("is_nearly_gorenstein of the big example", |b| {
        b.iter(|| is_nearly_gorenstein(black_box(&big)))
    });
    c.bench_function("RF+ enumeration of 3789", |b| {
        b.iter(|| rf_plus_enumeration(black_box(&big), 3789).unwrap().count())
    });
}

fn harness(c: &mut Criterion) {
    let mut g = c.benchmark_group("harness");
    g.sample_size(10);
    g.bench_function("genus tree walk to 16", |b| {
        b.iter(|| GenusTree::new(16).count())
    });
    g.bench_function("check_all to genus 14, one worker", |b| {
        let cfg = HarnessConfig {
            genus_max: 14,
            ..HarnessConfig::default()
        };
        b.iter(|| check_all(&cfg, |_| {}).total_failures)
    });
    let big = NumericalSemigroup::new(&BIG_AS).unwrap();
    g.bench_function("check_semigroup on the big example", |b| {
        b.iter(|| check_semigroup(&big, Claim::ALL, CheckOptions::default()))
    });
    g.finish();
}

criterion_group!(benches, semigroup, gorenstein, harness);
criterion_main!(benches);
