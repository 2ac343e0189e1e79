//! The folding identity: for `X` drawn from the `(1/2, alpha)` law
//! conditioned off the atoms, `(2X - 1)^2` has the `(alpha, alpha)` law
//! conditioned off the atoms.

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{rat, rat_to_f64};
use crate::error::{Error, Result};

use super::law::{ManovaLaw, ManovaParams};
use super::quadrature::integrate_against_density;

/// Comparison of conditional moments on both sides of the folding map.
#[derive(Clone, Debug)]
pub struct FoldingReport {
    pub alpha: f64,
    pub orders: usize,
    /// `E[((2X-1)^2)^k | X not in {0,1}]` for `X ~ law(1/2, alpha)`.
    pub folded: Vec<f64>,
    /// `E[Y^k | Y not in {0,1}]` for `Y ~ law(alpha, alpha)`.
    pub direct: Vec<f64>,
    pub max_abs_diff: f64,
}

/// Conditional moment `E[g(X) | X not in {0,1}]` for the law with the
/// given parameters (the conditioning removes only atom mass, so it is a
/// plain renormalization of the absolutely continuous integral).
fn conditional_expectation(
    params: &ManovaParams,
    g: &dyn Fn(f64) -> f64,
) -> Result<f64> {
    let law = ManovaLaw::new(params);
    let ac_mass = 1.0 - law.atom0 - law.atom1;
    if ac_mass <= 1e-12 {
        return Err(Error::Numerical(
            "no absolutely continuous mass to condition on".into(),
        ));
    }
    Ok(integrate_against_density(&law, g, 1e-11)? / ac_mass)
}

/// Check the folding identity in conditional moments up to order `k_max`
/// for a rational `alpha < 1/2`.
pub fn folding_check(alpha: &BigRational, k_max: usize) -> Result<FoldingReport> {
    if alpha <= &BigRational::zero() || alpha >= &rat(1, 2) {
        return Err(Error::InvalidParameter(format!(
            "folding identity stated for 0 < alpha < 1/2, got {alpha}"
        )));
    }
    if k_max > 12 {
        return Err(Error::InvalidParameter(
            "folding check supported through order 12".into(),
        ));
    }
    let half_alpha = ManovaParams::new(rat(1, 2), alpha.clone())?;
    let alpha_alpha = ManovaParams::new(alpha.clone(), alpha.clone())?;
    let mut folded = Vec::with_capacity(k_max);
    let mut direct = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        folded.push(conditional_expectation(&half_alpha, &|x| {
            (2.0 * x - 1.0).powi(2 * k as i32)
        })?);
        direct.push(conditional_expectation(&alpha_alpha, &|y| {
            y.powi(k as i32)
        })?);
    }
    let max_abs_diff = folded
        .iter()
        .zip(&direct)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(FoldingReport {
        alpha: rat_to_f64(alpha),
        orders: k_max,
        folded,
        direct,
        max_abs_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_folded_moment_equals_alpha() {
        let report = folding_check(&rat(3, 10), 1).unwrap();
        assert!((report.folded[0] - 0.3).abs() < 1e-7);
        assert!((report.direct[0] - 0.3).abs() < 1e-7);
    }

    #[test]
    fn folding_identity_holds() {
        for alpha in [rat(1, 4), rat(3, 10)] {
            let report = folding_check(&alpha, 8).unwrap();
            assert!(
                report.max_abs_diff < 1e-7,
                "alpha={alpha}: diff {}",
                report.max_abs_diff
            );
        }
    }

    #[test]
    fn domain_validation() {
        assert!(folding_check(&rat(1, 2), 2).is_err());
        assert!(folding_check(&rat(3, 5), 2).is_err());
    }
}
