//! Seeded statistical contracts of the random models that are too heavy
//! for unit tests: Haar entry moments at full sample counts, and the
//! conjugation-invariance smoke test of the invariant projection model.

use manova_core::ensembles::{
    child_seed, haar_unitary, hermitize, invariant_projection, sample_projection_pair,
    EnsembleKind,
};
use manova_core::manova::ManovaParams;

#[test]
fn haar_second_moment_full_sample() {
    // E|U_11|^2 = 1/N at N = 4 over 1e5 draws, within 0.005
    let n = 4;
    let samples = 100_000;
    let mut acc = 0.0;
    for s in 0..samples {
        acc += haar_unitary(n, child_seed(314, s)).data[(0, 0)].norm_sqr();
    }
    let mean = acc / samples as f64;
    assert!((mean - 0.25).abs() < 0.005, "E|U11|^2 = {mean}");
}

fn sorted_eigenvalues(m: &manova_core::ensembles::CMatrix) -> Vec<f64> {
    let eig = hermitize(m).symmetric_eigen();
    let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    v
}

fn ks_distance(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    b.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let mut worst = 0.0f64;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            i += 1;
        } else {
            j += 1;
        }
        worst = worst.max((i as f64 / na - j as f64 / nb).abs());
    }
    worst
}

#[test]
fn invariant_model_is_conjugation_invariant() {
    // pooled spectra of A B A with B re-conjugated by an independent Haar
    // unitary should match in distribution: KS distance < 0.05 at
    // N = 256 over 50 trials
    let n = 256;
    let trials = 50;
    let params = ManovaParams::from_f64(0.4, 0.5).unwrap();
    let mut pooled_base = Vec::with_capacity(n * trials);
    let mut pooled_reconj = Vec::with_capacity(n * trials);
    for t in 0..trials {
        let seed = child_seed(2_718, t as u64);
        let (a, b) = sample_projection_pair(EnsembleKind::Invariant, n, &params, seed).unwrap();
        pooled_base.extend(sorted_eigenvalues(&(&a.data * &b.data * &a.data)));
        // re-conjugate B by a fresh Haar unitary
        let u = haar_unitary(n, child_seed(seed, 909));
        let b2 = &u.data * &b.data * u.data.adjoint();
        pooled_reconj.extend(sorted_eigenvalues(&(&a.data * b2 * &a.data)));
    }
    let ks = ks_distance(pooled_base, pooled_reconj);
    assert!(ks < 0.05, "KS distance {ks}");
}

#[test]
fn invariant_projection_rank_concentrates() {
    let n = 4096;
    let b = invariant_projection(n, 0.5, 77);
    let frac = b.trace_re() / n as f64;
    let band = 3.0 * (0.25f64 / n as f64).sqrt();
    assert!((frac - 0.5).abs() < band, "rank fraction {frac}");
}
