//! Seeded random matrix models: Haar unitaries, Bernoulli coordinate
//! projections, and unitarily invariant projections.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use super::matrix::{hermitize, CMatrix, ComplexMatrix};

/// Derive an independent child seed from a master seed and an index
/// (splitmix64 finalizer).
pub fn child_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(0x9E3779B97F4A7C15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn rng_for(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn standard_complex(rng: &mut ChaCha12Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) / 2f64.sqrt()
}

/// Haar-distributed unitary: complex Gaussian matrix, QR factorization,
/// then right-multiplication by the phases making the triangular factor's
/// diagonal real positive. Without the phase correction the law of Q is
/// not Haar measure.
pub fn haar_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = rng_for(seed);
    let g = CMatrix::from_fn(n, n, |_, _| standard_complex(&mut rng));
    let qr = g.qr();
    let r = qr.r();
    let phases = DVector::from_fn(n, |i, _| {
        let d = r[(i, i)];
        let m = d.norm();
        if m == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            d / m
        }
    });
    let mut q = qr.q();
    for (j, col) in phases.iter().enumerate() {
        for i in 0..n {
            q[(i, j)] *= col;
        }
    }
    debug_assert!((q.adjoint() * &q - CMatrix::identity(n, n)).norm() <= 1e-10 * n as f64);
    ComplexMatrix::general(q)
}

/// The 0/1 diagonal of a Bernoulli(alpha) coordinate projection.
pub fn bernoulli_diagonal(n: usize, alpha: f64, seed: u64) -> Vec<bool> {
    let mut rng = rng_for(seed);
    (0..n).map(|_| rng.gen::<f64>() < alpha).collect()
}

/// Diagonal projection with i.i.d. Bernoulli(alpha) entries; exactly
/// idempotent.
pub fn bernoulli_projection(n: usize, alpha: f64, seed: u64) -> ComplexMatrix {
    let picks = bernoulli_diagonal(n, alpha, seed);
    let diag = DVector::from_fn(n, |i, _| {
        if picks[i] {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    ComplexMatrix {
        data: CMatrix::from_diagonal(&diag),
        hermitian: true,
    }
}

/// Unitarily invariant projection `U D U*` with `U` Haar and `D` a
/// Bernoulli(beta) coordinate projection.
pub fn invariant_projection(n: usize, beta: f64, seed: u64) -> ComplexMatrix {
    let u = haar_unitary(n, child_seed(seed, 0));
    let d = bernoulli_projection(n, beta, child_seed(seed, 1));
    let m = &u.data * &d.data * u.data.adjoint();
    ComplexMatrix {
        data: hermitize(&m),
        hermitian: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn haar_is_unitary_and_deterministic() {
        let u = haar_unitary(16, 5);
        let defect = (u.data.adjoint() * &u.data - CMatrix::identity(16, 16)).norm();
        assert!(defect < 1e-12, "unitarity defect {defect:.3e}");
        let v = haar_unitary(16, 5);
        assert_eq!(u.data, v.data);
        let w = haar_unitary(16, 6);
        assert_ne!(u.data, w.data);
    }

    #[test]
    fn haar_one_by_one_is_a_phase() {
        for seed in 0..20 {
            let u = haar_unitary(1, seed);
            assert!((u.data[(0, 0)].norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn haar_second_moment_matches_weingarten_value() {
        // E |U_11|^2 = 1/N; 20_000 samples at N = 4 gives ~0.003 std err
        let n = 4;
        let samples = 20_000;
        let mut acc = 0.0;
        for s in 0..samples {
            let u = haar_unitary(n, child_seed(99, s));
            acc += u.data[(0, 0)].norm_sqr();
        }
        let mean = acc / samples as f64;
        assert!((mean - 0.25).abs() < 0.01, "E|U11|^2 = {mean}");
    }

    #[test]
    fn haar_first_moment_vanishes() {
        let n = 4;
        let samples = 20_000;
        let mut acc = Complex64::new(0.0, 0.0);
        for s in 0..samples {
            acc += haar_unitary(n, child_seed(7, s)).data[(0, 0)];
        }
        let mean = acc / samples as f64;
        assert!(mean.re.abs() < 0.01 && mean.im.abs() < 0.01, "E U11 = {mean}");
    }

    #[test]
    fn bernoulli_projection_properties() {
        // rank concentration on the raw diagonal at N = 10^4
        let n = 10_000;
        let picks = bernoulli_diagonal(n, 0.3, 1);
        let frac = picks.iter().filter(|&&p| p).count() as f64 / n as f64;
        let band = 3.0 * (0.3f64 * 0.7 / n as f64).sqrt();
        assert!((frac - 0.3).abs() < band, "rank fraction {frac}");
        // exact idempotence and determinism on the dense matrix
        let a = bernoulli_projection(128, 0.3, 1);
        assert_eq!(a.idempotence_defect(), 0.0);
        let b = bernoulli_projection(128, 0.3, 1);
        assert_eq!(a.data, b.data);
    }

    #[test]
    fn invariant_projection_is_projection() {
        let b = invariant_projection(64, 0.5, 3);
        assert!(b.require_projection("B").is_ok());
        // eigenvalues concentrate on {0, 1}
        let eig = b.data.clone().symmetric_eigen();
        for lam in eig.eigenvalues.iter() {
            assert!(lam.abs() < 1e-8 || (lam - 1.0).abs() < 1e-8, "eigenvalue {lam}");
        }
    }
}
