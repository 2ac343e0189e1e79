//! Moments of the law: exact values from the coupling recursion, and an
//! independent quadrature oracle.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{binomial, rat_to_f64};
use crate::error::{Error, Result};
use crate::genfunc::coupling_table;

use super::law::{ManovaLaw, ManovaParams};
use super::quadrature::integrate_against_density;

/// Moment sequence `m_1 .. m_K`, exact or floating point.
#[derive(Clone, Debug)]
pub struct MomentVector<T> {
    pub values: Vec<T>,
}

impl<T> MomentVector<T> {
    /// `m_k` with 1-based `k`.
    pub fn m(&self, k: usize) -> &T {
        &self.values[k - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The centered sequence `mu~_0 .. mu~_K` solving
///
/// `mu~_0 = alpha`,
/// `mu~_k = alpha^k sum_{b=1}^{k-1}(1 - 1/beta)^b
///          - sum_{a=0}^{k-1} mu~_a sum_{j=1}^{k-1}(-alpha)^{k-j} q_{k,j,a}(eta)`,
///
/// from which `m_k = beta^k sum_l binom(k,l) mu~_l`.
pub(crate) fn centered_moment_sequence(
    params: &ManovaParams,
    k_max: usize,
) -> Result<Vec<BigRational>> {
    let alpha = params.alpha();
    let coupling = coupling_table(k_max, alpha, &params.eta())?;
    let one = BigRational::one();
    let base = &one - params.beta().recip(); // 1 - 1/beta
    let mut seq = Vec::with_capacity(k_max + 1);
    seq.push(alpha.clone());
    let mut alpha_pow = BigRational::one(); // alpha^k alongside the loop
    for k in 1..=k_max {
        alpha_pow *= alpha;
        // alpha^k * sum_{b=1}^{k-1} (1 - 1/beta)^b
        let mut geo = BigRational::zero();
        let mut base_pow = BigRational::one();
        for _ in 1..k {
            base_pow *= &base;
            geo += &base_pow;
        }
        let mut value = &alpha_pow * geo;
        // coupling[k][a] carries sum_{j=1}^{k} (-alpha)^{k-j} q_{k,j,a},
        // and the j = k term only contributes at a = k, so restricting
        // the a-sum to a < k matches the j <= k-1 recursion exactly.
        for (a, mu) in seq.iter().enumerate().take(k) {
            value -= mu * &coupling[k][a];
        }
        seq.push(value);
    }
    Ok(seq)
}

/// Exact moments `m_1 .. m_K` of the law by the coupling recursion.
pub fn moments_exact(params: &ManovaParams, k_max: usize) -> Result<MomentVector<BigRational>> {
    if k_max == 0 || k_max > 24 {
        return Err(Error::InvalidParameter(
            "exact moments supported for 1 <= K <= 24".into(),
        ));
    }
    let centered = centered_moment_sequence(params, k_max)?;
    let mut values = Vec::with_capacity(k_max);
    let mut beta_pow = BigRational::one();
    for k in 1..=k_max {
        beta_pow *= params.beta();
        let mut sum = BigRational::zero();
        for (l, mu) in centered.iter().enumerate().take(k + 1) {
            sum += BigRational::from(binomial(k as u64, l as u64)) * mu;
        }
        values.push(&beta_pow * sum);
    }
    Ok(MomentVector { values })
}

/// Moments `m_1 .. m_K` by quadrature: the atom at 1 contributes its
/// mass, and the absolutely continuous part is integrated after the
/// sine-squared substitution. Absolute error is held near 1e-10.
pub fn moments_quadrature(params: &ManovaParams, k_max: usize) -> Result<MomentVector<f64>> {
    if k_max == 0 || k_max > 24 {
        return Err(Error::InvalidParameter(
            "quadrature moments supported for 1 <= K <= 24".into(),
        ));
    }
    let law = ManovaLaw::new(params);
    let mut values = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let ac = integrate_against_density(&law, &|x| x.powi(k as i32), 1e-11)?;
        values.push(law.atom1 + ac);
    }
    Ok(MomentVector { values })
}

/// Largest absolute difference between the exact and quadrature moments
/// through order `k_max`.
pub fn moment_discrepancy(params: &ManovaParams, k_max: usize) -> Result<f64> {
    let exact = moments_exact(params, k_max)?;
    let quad = moments_quadrature(params, k_max)?;
    Ok(exact
        .values
        .iter()
        .zip(&quad.values)
        .map(|(e, q)| (rat_to_f64(e) - q).abs())
        .fold(0.0, f64::max))
}
