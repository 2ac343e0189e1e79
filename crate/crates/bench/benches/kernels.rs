use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use manova_core::algebra::rat;
use manova_core::ensembles::{esd_report, haar_unitary, sample_projection_pair, EnsembleKind};
use manova_core::genfunc::coupling_table;
use manova_core::manova::{moments_exact, moments_quadrature, ManovaParams};
use manova_core::necklace::{mixed_traces, necklace_predict};
use manova_core::weingarten::weingarten_table;

fn bench_exact_kernels(c: &mut Criterion) {
    let params = ManovaParams::new(rat(3, 10), rat(1, 2)).unwrap();
    c.bench_function("coupling_table_k16", |b| {
        b.iter(|| coupling_table(16, params.alpha(), &params.eta()).unwrap())
    });
    c.bench_function("moments_exact_k16", |b| {
        b.iter(|| moments_exact(&params, 16).unwrap())
    });
    c.bench_function("moments_quadrature_k12", |b| {
        b.iter(|| moments_quadrature(&params, 12).unwrap())
    });
    c.bench_function("weingarten_table_k5_n41", |b| {
        b.iter(|| weingarten_table(5, 41).unwrap())
    });
}

fn bench_random_models(c: &mut Criterion) {
    let params = ManovaParams::new(rat(3, 10), rat(1, 2)).unwrap();
    c.bench_function("haar_unitary_128", |b| {
        let mut seed = 0u64;
        b.iter(|| {
            seed += 1;
            haar_unitary(128, seed)
        })
    });
    c.bench_function("esd_report_128", |b| {
        b.iter_batched(
            || sample_projection_pair(EnsembleKind::Invariant, 128, &params, 7).unwrap(),
            |(a, bm)| esd_report(&a, &bm, &params, 6, 20).unwrap(),
            BatchSize::LargeInput,
        )
    });
    c.bench_function("necklace_predict_float_k8", |b| {
        let (a, bm) = sample_projection_pair(EnsembleKind::Dft, 64, &params, 5).unwrap();
        let data = mixed_traces(&a, &bm, &params, 8).unwrap();
        b.iter(|| necklace_predict(&data, 8).unwrap())
    });
}

criterion_group!(benches, bench_exact_kernels, bench_random_models);
criterion_main!(benches);
