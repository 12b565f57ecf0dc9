//! Default rayon pool against a single-thread pool on the data-parallel kernels.

use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use extremal_core::complexes::{scarf_complex, Generators, DEFAULT_FACE_BUDGET};
use extremal_core::homology::{betti_total_oracle, Field, GeneralIdeal};
use extremal_core::morse::{build_small_q_matching_with, verify_matching, FaceSet, SmallQContext};
use rayon::ThreadPool;

fn pools() -> [(&'static str, ThreadPool); 2] {
    let seq = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let par = rayon::ThreadPoolBuilder::new().build().unwrap();
    [("1-thread", seq), ("pool", par)]
}

fn scarf(c: &mut Criterion) {
    let mut g = c.benchmark_group("scarf_complex");
    g.sample_size(10);
    for (name, pool) in pools() {
        for (q, r) in [(4usize, 5u32), (5, 3)] {
            g.bench_with_input(
                BenchmarkId::new(name, format!("q{q}r{r}")),
                &(q, r),
                |b, &(q, r)| {
                    b.iter(|| {
                        pool.install(|| {
                            scarf_complex(black_box(q), r, None, DEFAULT_FACE_BUDGET).unwrap()
                        })
                    })
                },
            );
        }
    }
    g.finish();
}

fn small_q(c: &mut Criterion) {
    let gens = Arc::new(Generators::new(3, 4).unwrap());
    let ctx = SmallQContext::new(gens.clone()).unwrap();
    let y = FaceSet::full_taylor(gens.clone(), 20).unwrap();
    let m = build_small_q_matching_with(&ctx, 20).unwrap();
    let mut g = c.benchmark_group("small_q_matching_q3r4");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new("build", name), |b| {
            b.iter(|| pool.install(|| build_small_q_matching_with(&ctx, 20).unwrap()))
        });
        g.bench_function(BenchmarkId::new("verify", name), |b| {
            b.iter(|| pool.install(|| verify_matching(&m, &y).unwrap()))
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let gens = Generators::new(3, 4).unwrap();
    let ideal = GeneralIdeal::new(gens.vertex_labels().to_vec()).unwrap();
    let mut g = c.benchmark_group("betti_oracle_q3r4");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(name, |b| {
            b.iter(|| pool.install(|| betti_total_oracle(&ideal, None, Field::Gf2).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, scarf, small_q, oracle);
criterion_main!(benches);
