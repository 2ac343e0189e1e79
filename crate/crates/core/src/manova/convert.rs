//! Conversions between the `(alpha, beta)` parametrization and the two
//! other parametrizations in common use.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

use super::law::ManovaParams;

/// Target parametrization of [`convert_params`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParamTarget {
    /// Jacobi-ensemble style `(a, b) = (beta/alpha, (1-beta)/alpha)`,
    /// defined when `alpha <= min(beta, 1-beta)`; that family omits the
    /// atom at zero and renormalizes.
    De,
    /// Frame-theory style `(beta~, gamma~) = (alpha/beta, beta)`; that
    /// family's law is additionally rescaled by `1/gamma~` (documented,
    /// not applied here).
    Hzg,
}

/// Convert `(alpha, beta)` into the requested parametrization.
pub fn convert_params(params: &ManovaParams, target: ParamTarget) -> Result<(BigRational, BigRational)> {
    match target {
        ParamTarget::De => {
            if !params.in_de_domain() {
                return Err(Error::InvalidParameter(format!(
                    "the (a, b) parametrization requires alpha <= min(beta, 1-beta); \
                     got alpha={} beta={}, for which a or b would fall below 1",
                    params.alpha(),
                    params.beta()
                )));
            }
            let a = params.beta() / params.alpha();
            let b = (BigRational::one() - params.beta()) / params.alpha();
            Ok((a, b))
        }
        ParamTarget::Hzg => Ok((params.alpha() / params.beta(), params.beta().clone())),
    }
}

/// Support endpoints computed from the `(a, b)` parametrization,
/// `((sqrt(b) +- sqrt(a(a+b-1))) / (a+b))^2`, for round-trip checks
/// against the direct `r_+-(alpha, beta)` arithmetic.
pub fn de_support_endpoints(a: f64, b: f64) -> (f64, f64) {
    let plus = ((b.sqrt() + (a * (a + b - 1.0)).sqrt()) / (a + b)).powi(2);
    let minus = ((b.sqrt() - (a * (a + b - 1.0)).sqrt()) / (a + b)).powi(2);
    (minus.min(plus), minus.max(plus))
}
