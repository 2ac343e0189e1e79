//! The two-parameter spectral law of a product of projections: an
//! absolutely continuous arch on `[r_-, r_+]` plus atoms at 0 and 1.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rat_to_f64, rational_from_f64};
use crate::error::{Error, Result};

/// The parameter pair `(alpha, beta)` with both entries in `(0, 1)`,
/// kept exact so the recursion side of the library can work over
/// rationals. The law is symmetric under swapping the two.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManovaParams {
    alpha: BigRational,
    beta: BigRational,
}

impl ManovaParams {
    pub fn new(alpha: BigRational, beta: BigRational) -> Result<Self> {
        for (name, v) in [("alpha", &alpha), ("beta", &beta)] {
            if v <= &BigRational::zero() || v >= &BigRational::one() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must lie in (0,1), got {v}"
                )));
            }
        }
        Ok(ManovaParams { alpha, beta })
    }

    /// Approximate float parameters by rationals with denominator at most
    /// `10^6` so they can enter the exact identity paths.
    pub fn from_f64(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(
            rational_from_f64(alpha, 1_000_000),
            rational_from_f64(beta, 1_000_000),
        )
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }

    pub fn alpha_f64(&self) -> f64 {
        rat_to_f64(&self.alpha)
    }

    pub fn beta_f64(&self) -> f64 {
        rat_to_f64(&self.beta)
    }

    /// `eta = 1/beta - 1`, the constant of the centered-projection
    /// quadratic relation.
    pub fn eta(&self) -> BigRational {
        self.beta.recip() - BigRational::one()
    }

    pub fn swapped(&self) -> Self {
        ManovaParams {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    /// Whether `alpha <= min(beta, 1 - beta)`, the domain of the
    /// positive-part (DE) reparametrization.
    pub fn in_de_domain(&self) -> bool {
        let one_minus_beta = BigRational::one() - &self.beta;
        self.alpha <= self.beta && self.alpha <= one_minus_beta
    }
}

/// Derived description of the law: support edges and atom masses, in
/// floating point for the numeric half of the library.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ManovaLaw {
    pub alpha: f64,
    pub beta: f64,
    pub r_minus: f64,
    pub r_plus: f64,
    /// Mass of the atom at 0: `1 - min(alpha, beta)`.
    pub atom0: f64,
    /// Mass of the atom at 1: `max(alpha + beta - 1, 0)`.
    pub atom1: f64,
    /// Right edge of the support: 1 when `alpha + beta > 1`, else `r_+`.
    pub edge: f64,
}

impl ManovaLaw {
    pub fn new(params: &ManovaParams) -> Self {
        let alpha = params.alpha_f64();
        let beta = params.beta_f64();
        let cross = 2.0 * (alpha * (1.0 - alpha) * beta * (1.0 - beta)).sqrt();
        let mid = alpha + beta - 2.0 * alpha * beta;
        let r_minus = (mid - cross).max(0.0);
        let r_plus = (mid + cross).min(1.0);
        let atom0 = 1.0 - alpha.min(beta);
        let atom1 = (alpha + beta - 1.0).max(0.0);
        let edge = if alpha + beta > 1.0 { 1.0 } else { r_plus };
        ManovaLaw {
            alpha,
            beta,
            r_minus,
            r_plus,
            atom0,
            atom1,
            edge,
        }
    }

    /// Density of the absolutely continuous part at an interior point
    /// `x` of `(0, 1)`:
    /// `sqrt((r_+ - x)(x - r_-)) / (2 pi x (1 - x))` on `[r_-, r_+]`,
    /// zero elsewhere. The atoms are queried separately.
    pub fn density(&self, x: f64) -> Result<f64> {
        if x <= 0.0 || x >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "density is defined on the open interval (0,1); got {x}"
            )));
        }
        if x < self.r_minus || x > self.r_plus {
            return Ok(0.0);
        }
        let num = ((self.r_plus - x).max(0.0) * (x - self.r_minus).max(0.0)).sqrt();
        Ok(num / (2.0 * std::f64::consts::PI * x * (1.0 - x)))
    }
}

/// Right edge of the support of the law.
pub fn edge(params: &ManovaParams) -> f64 {
    ManovaLaw::new(params).edge
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn construction_validates_domain() {
        assert!(ManovaParams::new(rat(1, 2), rat(1, 2)).is_ok());
        assert!(ManovaParams::new(rat(0, 1), rat(1, 2)).is_err());
        assert!(ManovaParams::new(rat(1, 2), rat(3, 2)).is_err());
    }

    #[test]
    fn arcsine_case_density() {
        // alpha = beta = 1/2: r = [0,1], density(1/2) = 1/pi
        let p = ManovaParams::new(rat(1, 2), rat(1, 2)).unwrap();
        let law = ManovaLaw::new(&p);
        assert!((law.r_minus - 0.0).abs() < 1e-15);
        assert!((law.r_plus - 1.0).abs() < 1e-15);
        let d = law.density(0.5).unwrap();
        assert!((d - 1.0 / std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn density_vanishes_at_edges_and_outside() {
        let p = ManovaParams::from_f64(0.3, 0.5).unwrap();
        let law = ManovaLaw::new(&p);
        assert_eq!(law.density(law.r_plus).unwrap(), 0.0);
        assert_eq!(law.density(law.r_minus / 2.0).unwrap(), 0.0);
        assert!(law.density(1.5).is_err());
    }

    #[test]
    fn edge_branches() {
        let sup = |a, b| edge(&ManovaParams::from_f64(a, b).unwrap());
        assert_eq!(sup(0.6, 0.5), 1.0);
        assert!((sup(0.5, 0.5) - 1.0).abs() < 1e-15);
        // r_+ = 0.5 + 2 sqrt(0.3 * 0.7 * 0.25) = 0.5 + 2 sqrt(0.0525)
        let want = 0.5 + 2.0 * 0.0525f64.sqrt();
        assert!((sup(0.3, 0.5) - want).abs() < 1e-12);
        assert!((want - 0.95826).abs() < 5e-6);
    }

    #[test]
    fn eta_and_swap() {
        let p = ManovaParams::new(rat(1, 4), rat(1, 2)).unwrap();
        assert_eq!(p.eta(), rat(1, 1));
        let q = p.swapped();
        assert_eq!(q.alpha(), &rat(1, 2));
        assert!(p.in_de_domain());
        assert!(!q.in_de_domain());
    }
}
