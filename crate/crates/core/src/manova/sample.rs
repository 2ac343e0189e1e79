//! Seeded sampling from the law: atoms by coin flip, the absolutely
//! continuous part by inverse CDF over a tabulated monotone interpolant.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::Result;

use super::law::ManovaLaw;
use super::quadrature::gauss_legendre;

/// Number of CDF table points; 4096 panels hold the inverse-CDF error
/// well below 1e-6 for every parameter pair in (0,1)^2.
const TABLE_SIZE: usize = 4096;

/// Inverse-CDF sampler for a fixed law.
pub struct ManovaSampler {
    law: ManovaLaw,
    /// Cumulative mass of the absolutely continuous part at `xs[i]`.
    cdf: Vec<f64>,
    xs: Vec<f64>,
    /// Fritsch-Carlson slopes for monotone cubic inverse interpolation.
    slopes: Vec<f64>,
    ac_mass: f64,
}

impl ManovaSampler {
    pub fn new(law: &ManovaLaw) -> Result<Self> {
        let width = law.r_plus - law.r_minus;
        let rule = gauss_legendre(16);
        let mut cdf = Vec::with_capacity(TABLE_SIZE + 1);
        let mut xs = Vec::with_capacity(TABLE_SIZE + 1);
        cdf.push(0.0);
        xs.push(law.r_minus);
        let integrand = |theta: f64| {
            let s = theta.sin();
            let c = theta.cos();
            let x = law.r_minus + width * s * s;
            if x <= 0.0 || x >= 1.0 {
                return 0.0;
            }
            width * width * s * s * c * c / (PI * x * (1.0 - x))
        };
        let h = (PI / 2.0) / TABLE_SIZE as f64;
        let mut acc = 0.0;
        for i in 0..TABLE_SIZE {
            let lo = i as f64 * h;
            let mid = lo + 0.5 * h;
            let mut panel = 0.0;
            for &(t, w) in &rule {
                panel += w * integrand(mid + 0.5 * h * t);
            }
            acc += panel * 0.5 * h;
            let theta = (i + 1) as f64 * h;
            cdf.push(acc);
            xs.push(law.r_minus + width * theta.sin().powi(2));
        }
        let ac_mass = acc;
        let slopes = monotone_slopes(&cdf, &xs);
        Ok(ManovaSampler {
            law: law.clone(),
            cdf,
            xs,
            slopes,
            ac_mass,
        })
    }

    pub fn law(&self) -> &ManovaLaw {
        &self.law
    }

    /// Quantile of the absolutely continuous part at cumulative mass `c`
    /// (in units of actual mass, `0 <= c <= ac_mass`).
    fn ac_quantile(&self, c: f64) -> f64 {
        let c = c.clamp(0.0, self.ac_mass);
        // binary search for the containing panel
        let mut lo = 0usize;
        let mut hi = self.cdf.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.cdf[mid] <= c {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (c0, c1) = (self.cdf[lo], self.cdf[hi]);
        if c1 <= c0 {
            return self.xs[lo];
        }
        // monotone cubic Hermite on (cdf, xs)
        let t = (c - c0) / (c1 - c0);
        let dh = c1 - c0;
        let (x0, x1) = (self.xs[lo], self.xs[hi]);
        let (m0, m1) = (self.slopes[lo], self.slopes[hi]);
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * x0 + h10 * dh * m0 + h01 * x1 + h11 * dh * m1
    }

    /// Draw `n` i.i.d. values, deterministically from the seed: atom at 0
    /// with mass `atom0`, atom at 1 with mass `atom1`, otherwise the
    /// continuous part by inverse CDF.
    pub fn sample(&self, n: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let u: f64 = rng.gen();
            if u < self.law.atom0 {
                out.push(0.0);
            } else if u < self.law.atom0 + self.law.atom1 {
                out.push(1.0);
            } else {
                let v = (u - self.law.atom0 - self.law.atom1)
                    / (1.0 - self.law.atom0 - self.law.atom1);
                out.push(self.ac_quantile(v * self.ac_mass));
            }
        }
        out
    }
}

/// Fritsch-Carlson slope limiter, guaranteeing a monotone interpolant of
/// the strictly increasing data `(u, x)`.
fn monotone_slopes(u: &[f64], x: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mut secants = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let du = u[i + 1] - u[i];
        secants.push(if du > 0.0 { (x[i + 1] - x[i]) / du } else { 0.0 });
    }
    let mut m = vec![0.0; n];
    m[0] = secants[0];
    m[n - 1] = secants[n - 2];
    for i in 1..n - 1 {
        let (s0, s1) = (secants[i - 1], secants[i]);
        m[i] = if s0 * s1 <= 0.0 {
            0.0
        } else {
            // harmonic mean keeps the cubic monotone
            2.0 * s0 * s1 / (s0 + s1)
        };
    }
    for i in 0..n - 1 {
        let s = secants[i];
        if s == 0.0 {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        let a = m[i] / s;
        let b = m[i + 1] / s;
        let norm = (a * a + b * b).sqrt();
        if norm > 3.0 {
            m[i] = 3.0 * a / norm * s;
            m[i + 1] = 3.0 * b / norm * s;
        }
    }
    m
}

/// Convenience wrapper: build the sampler and draw in one call.
pub fn sample(law: &ManovaLaw, n: usize, seed: u64) -> Result<Vec<f64>> {
    Ok(ManovaSampler::new(law)?.sample(n, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_to_f64;
    use crate::manova::{moments_exact, ManovaParams};

    #[test]
    fn deterministic_given_seed() {
        let law = ManovaLaw::new(&ManovaParams::from_f64(0.3, 0.5).unwrap());
        let a = sample(&law, 1000, 7).unwrap();
        let b = sample(&law, 1000, 7).unwrap();
        assert_eq!(a, b);
        let c = sample(&law, 1000, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn atom_frequencies() {
        // alpha = 0.3, beta = 0.5: atom0 = 0.7
        let law = ManovaLaw::new(&ManovaParams::from_f64(0.3, 0.5).unwrap());
        let draws = sample(&law, 100_000, 11).unwrap();
        let zeros = draws.iter().filter(|&&x| x == 0.0).count() as f64 / 1e5;
        assert!((zeros - 0.7).abs() < 0.01, "zero fraction {zeros}");
    }

    #[test]
    fn sample_mean_matches_first_moment() {
        let p = ManovaParams::from_f64(0.3, 0.5).unwrap();
        let law = ManovaLaw::new(&p);
        let n = 100_000usize;
        let draws = sample(&law, n, 13).unwrap();
        let mean: f64 = draws.iter().sum::<f64>() / n as f64;
        let m = moments_exact(&p, 2).unwrap();
        let m1 = rat_to_f64(m.m(1));
        let m2 = rat_to_f64(m.m(2));
        let std_err = ((m2 - m1 * m1) / n as f64).sqrt();
        assert!(
            (mean - m1).abs() < 3.0 * std_err,
            "mean {mean} vs m1 {m1} (3se = {})",
            3.0 * std_err
        );
    }

    #[test]
    fn quantile_is_monotone_and_in_support() {
        let law = ManovaLaw::new(&ManovaParams::from_f64(0.25, 0.75).unwrap());
        let s = ManovaSampler::new(&law).unwrap();
        let mut prev = law.r_minus;
        for i in 0..=200 {
            let c = s.ac_mass * i as f64 / 200.0;
            let x = s.ac_quantile(c);
            assert!(x >= prev - 1e-12);
            assert!(x >= law.r_minus - 1e-9 && x <= law.r_plus + 1e-9);
            prev = x;
        }
    }
}
