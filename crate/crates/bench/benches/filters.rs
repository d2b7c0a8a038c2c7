use std::hint::black_box;

use ccorr_bench::{link, noise};
use ccorr_core::channel::sample_alpha_stable;
use ccorr_core::filters::{mccc_fixed_point, Algorithm, FixedPointOptions};
use ccorr_core::{Complex64, KernelSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn training(c: &mut Criterion) {
    let (scenario, data) = link(500);
    let mut group = c.benchmark_group("equalize_500");
    for algo in [Algorithm::mccc(1.0), Algorithm::crls(), Algorithm::clms(), Algorithm::lad()] {
        let label = algo.sigma().map_or(algo.name().to_string(), |s| format!("{}_{s}", algo.name()));
        group.bench_function(label, |b| b.iter(|| scenario.equalize(black_box(&data), algo).unwrap()));
    }
    group.finish();
}

fn batch_solve(c: &mut Criterion) {
    let (_, data) = link(2000);
    let mut group = c.benchmark_group("mccc_fixed_point");
    for sigma in [1.0, 100.0] {
        let spec = KernelSpec::gaussian(sigma).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(sigma), &data.train, |b, train| {
            b.iter(|| {
                mccc_fixed_point(train, &spec, &[Complex64::new(0.0, 0.0); 2], &FixedPointOptions::default()).unwrap()
            })
        });
    }
    group.finish();
}

fn noise_sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_alpha_stable_10k");
    for alpha in [1.0, 1.5, 2.0] {
        let spec = noise(alpha);
        group.bench_with_input(BenchmarkId::from_parameter(alpha), &spec, |b, spec| {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            b.iter(|| sample_alpha_stable(spec, 10_000, &mut rng))
        });
    }
    group.finish();
}

criterion_group!(benches, training, batch_solve, noise_sampling);
criterion_main!(benches);
