//! Monic orthogonal polynomials of the positive part of the law, their
//! generating function, the recursion polynomials `s_k`, and the series
//! identity linking the two families.
//!
//! The polynomials are built from shifted-argument Chebyshev evaluations
//! `p_j = sigma^j U_j(m / 2 sigma)` where `m = x - alpha(1-beta) -
//! beta(1-alpha)` and `sigma^2 = alpha(1-alpha)beta(1-beta)`. Because
//! `U_j` has the parity of `j`, only even powers of the radical survive,
//! so the whole computation stays in exact rationals; this cancellation
//! is asserted once in the tests against a direct expansion.

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{
    expand_rational, rat_int, MultiPoly, RatPolynomial, TruncatedSeries, VarSet,
};
use crate::error::{Error, Result};
use crate::manova::ManovaParams;

use super::closed_forms::{coupling_table, q_gf_num_den};

/// Monic orthogonal polynomials `f_0, ..., f_n` for the positive part of
/// the law with the given parameters.
#[derive(Clone, Debug)]
pub struct DEPolySequence {
    pub params: ManovaParams,
    pub polys: Vec<RatPolynomial>,
}

fn require_de_domain(params: &ManovaParams) -> Result<()> {
    if !params.in_de_domain() {
        return Err(Error::InvalidParameter(format!(
            "orthogonal polynomial family needs alpha <= min(beta, 1-beta), got alpha={} beta={}",
            params.alpha(),
            params.beta()
        )));
    }
    Ok(())
}

/// `sigma^2 = alpha (1-alpha) beta (1-beta)`.
fn sigma_squared(params: &ManovaParams) -> BigRational {
    let one = BigRational::one();
    params.alpha() * (&one - params.alpha()) * params.beta() * (&one - params.beta())
}

/// `x - alpha(1-beta) - beta(1-alpha)`, the recurrence shift.
fn shifted_x(params: &ManovaParams) -> RatPolynomial {
    let one = BigRational::one();
    let c = params.alpha() * (&one - params.beta()) + params.beta() * (&one - params.alpha());
    RatPolynomial::x_minus(&c)
}

/// The family `f_0 = 1`, `f_n = (x - beta) p_{n-1} - sigma^2/(1-alpha)
/// p_{n-2}`, each monic of degree `n`.
pub fn de_orth_polys(params: &ManovaParams, n_max: usize) -> Result<DEPolySequence> {
    require_de_domain(params)?;
    if n_max > 12 {
        return Err(Error::InvalidParameter(
            "orthogonal polynomial family supported through degree 12".into(),
        ));
    }
    let sigma2 = sigma_squared(params);
    let m = shifted_x(params);
    let x_minus_beta = RatPolynomial::x_minus(params.beta());
    let tail_scale = &sigma2 / (BigRational::one() - params.alpha());

    // p_j = sigma^j U_j(m / 2 sigma): p_{-1} = 0, p_0 = 1,
    // p_j = m p_{j-1} - sigma^2 p_{j-2}
    let mut p_prev = RatPolynomial::zero();
    let mut p_curr = RatPolynomial::one();
    let mut polys = vec![RatPolynomial::one()];
    for n in 1..=n_max {
        let f = &(&x_minus_beta * &p_curr) - &p_prev.scale(&tail_scale);
        debug_assert_eq!(f.degree(), Some(n));
        debug_assert_eq!(f.leading_coeff(), BigRational::one());
        polys.push(f);
        let p_next = &(&m * &p_curr) - &p_curr_scale(&p_prev, &sigma2);
        p_prev = p_curr;
        p_curr = p_next;
    }
    Ok(DEPolySequence {
        params: params.clone(),
        polys,
    })
}

fn p_curr_scale(p: &RatPolynomial, c: &BigRational) -> RatPolynomial {
    p.scale(c)
}

/// Closed-form generating function `F(x, t) = sum_n f_n(x) t^n`
/// expanded as a series in `t` with polynomial coefficients in `x`,
/// after substituting `t -> t * t_scale`.
pub fn de_gf_series(
    params: &ManovaParams,
    order: usize,
    t_scale: &BigRational,
) -> Result<TruncatedSeries> {
    require_de_domain(params)?;
    let vars = VarSet::new(&["t", "x"]);
    let t = MultiPoly::var(&vars, "t").scale(t_scale);
    let x = MultiPoly::var(&vars, "x");
    let one = MultiPoly::one(&vars);
    let alpha = params.alpha();
    let beta = params.beta();
    let one_r = BigRational::one();

    // numerator: 1 + alpha(1-2beta) t - alpha^2 beta(1-beta) t^2
    let c1 = alpha * (&one_r - rat_int(2) * beta);
    let c2 = alpha * alpha * beta * (&one_r - beta);
    let num = one.add(&t.scale(&c1)).sub(&t.pow(2).scale(&c2));

    // denominator: 1 - t(x - alpha(1-beta) - beta(1-alpha))
    //              + alpha(1-beta)beta(1-alpha) t^2
    let shift = alpha * (&one_r - beta) + beta * (&one_r - alpha);
    let sigma2 = sigma_squared(params);
    let den = one
        .sub(&t.mul(&x.sub(&MultiPoly::constant(&vars, shift))))
        .add(&t.pow(2).scale(&sigma2));

    expand_rational(&num, &den, "t", order)
}

/// The recursion polynomial
///
/// `s_k(x) = sum_{a=0}^{k} (x/beta - 1)^a sum_{j=1}^{k} (-alpha)^{k-j}
/// q_{k,j,a}(eta)  -  alpha^{k-1} sum_{b=1}^{k-1} (1 - 1/beta)^b`,
///
/// a polynomial of degree `k` with leading coefficient `beta^{-k}`.
pub fn s_poly(k: usize, params: &ManovaParams) -> Result<RatPolynomial> {
    if k == 0 {
        return Err(Error::InvalidParameter("s_k defined for k >= 1".into()));
    }
    let table = coupling_table(k, params.alpha(), &params.eta())?;
    Ok(s_poly_from_table(k, params, &table))
}

fn s_poly_from_table(
    k: usize,
    params: &ManovaParams,
    table: &[Vec<BigRational>],
) -> RatPolynomial {
    let one = BigRational::one();
    // x/beta - 1
    let affine = RatPolynomial::new(vec![-one.clone(), params.beta().recip()]);
    let mut acc = RatPolynomial::zero();
    let mut affine_pow = RatPolynomial::one();
    for a in 0..=k {
        acc = &acc + &affine_pow.scale(&table[k][a]);
        affine_pow = &affine_pow * &affine;
    }
    // alpha^{k-1} * sum_{b=1}^{k-1} (1 - 1/beta)^b
    let mut alpha_pow = BigRational::one();
    for _ in 0..k - 1 {
        alpha_pow *= params.alpha();
    }
    let base = &one - params.beta().recip();
    let mut geo = BigRational::from_integer(0.into());
    let mut base_pow = BigRational::one();
    for _ in 1..k {
        base_pow *= &base;
        geo += &base_pow;
    }
    &acc - &RatPolynomial::constant(alpha_pow * geo)
}

/// All of `s_1, ..., s_k` sharing one coupling-table computation.
pub fn s_polys(k_max: usize, params: &ManovaParams) -> Result<Vec<RatPolynomial>> {
    let table = coupling_table(k_max, params.alpha(), &params.eta())?;
    Ok((1..=k_max)
        .map(|k| s_poly_from_table(k, params, &table))
        .collect())
}

/// Series `S(x,t) = sum_{k>=1} s_k(x) t^k` from the closed rational form
/// `Q(1/beta - 1, -alpha t, -1/alpha, x/beta - 1) + (1-beta)t/(1-alpha t)
/// - beta(1-beta)t / (beta + alpha(1-beta)t)`.
pub fn s_series_closed(params: &ManovaParams, order: usize) -> Result<TruncatedSeries> {
    let vars = VarSet::new(&["t", "x"]);
    let t = MultiPoly::var(&vars, "t");
    let x = MultiPoly::var(&vars, "x");
    let one = MultiPoly::one(&vars);
    let alpha = params.alpha();
    let beta = params.beta();
    let one_r = BigRational::one();

    let w = MultiPoly::constant(&vars, params.eta());
    let x_img = t.scale(&-alpha.clone());
    let y_img = MultiPoly::constant(&vars, -alpha.recip());
    let z_img = x.scale(&beta.recip()).sub(&one);
    let (num, den) = q_gf_num_den(&vars, &w, &x_img, &y_img, &z_img);
    let q_part = expand_rational(&num, &den, "t", order)?;

    // (1-beta) t / (1 - alpha t)
    let frac1 = expand_rational(
        &t.scale(&(&one_r - beta)),
        &one.sub(&t.scale(alpha)),
        "t",
        order,
    )?;
    // beta (1-beta) t / (beta + alpha(1-beta) t)
    let frac2 = expand_rational(
        &t.scale(&(beta * (&one_r - beta))),
        &one.scale(beta).add(&t.scale(&(alpha * (&one_r - beta)))),
        "t",
        order,
    )?;
    Ok(q_part.add(&frac1).sub(&frac2))
}

/// Series built term by term from the `s_k` polynomials.
pub fn s_series_from_polys(params: &ManovaParams, order: usize) -> Result<TruncatedSeries> {
    let vars = VarSet::new(&["t", "x"]);
    let x = MultiPoly::var(&vars, "x");
    let mut acc = MultiPoly::zero(&vars);
    let t = MultiPoly::var(&vars, "t");
    for (k, s) in s_polys(order, params)?.iter().enumerate() {
        let mut poly = MultiPoly::zero(&vars);
        for (d, c) in s.coeffs().iter().enumerate() {
            poly = poly.add(&x.pow(d as u32).scale(c));
        }
        acc = acc.add(&poly.mul(&t.pow(k as u32 + 1)));
    }
    Ok(TruncatedSeries::from_poly(&acc, "t", order))
}

/// Outcome of checking the series identity between `S` and the
/// orthogonal-polynomial generating function.
#[derive(Clone, Debug)]
pub struct OrthIdentityReport {
    pub holds: bool,
    pub order: usize,
    /// First order where the two sides differ, with both coefficients
    /// rendered for the failure report.
    pub first_mismatch: Option<(usize, String, String)>,
}

/// Check, as truncated series in `t` with exact polynomial coefficients
/// in `x`, that
///
/// `S(x,t) = (F(x, t/beta) - 1) (beta - alpha(1-alpha)(1-beta) t^2) /
/// (beta + alpha(1-2beta) t - alpha^2 (1-beta) t^2)`.
pub fn verify_orth_identity(params: &ManovaParams, order: usize) -> Result<OrthIdentityReport> {
    require_de_domain(params)?;
    if order > 12 {
        return Err(Error::InvalidParameter(
            "identity check supported through order 12".into(),
        ));
    }
    let lhs = s_series_from_polys(params, order)?;

    let vars = VarSet::new(&["t", "x"]);
    let t = MultiPoly::var(&vars, "t");
    let one = MultiPoly::one(&vars);
    let alpha = params.alpha();
    let beta = params.beta();
    let one_r = BigRational::one();

    let f_shifted = de_gf_series(params, order, &beta.recip())?;
    let f_minus_one = f_shifted.sub(&TruncatedSeries::one(&vars, "t", order));

    let num = one
        .scale(beta)
        .sub(&t.pow(2).scale(&(alpha * (&one_r - alpha) * (&one_r - beta))));
    let den = one
        .scale(beta)
        .add(&t.scale(&(alpha * (&one_r - rat_int(2) * beta))))
        .sub(&t.pow(2).scale(&(alpha * alpha * (&one_r - beta))));
    let ratio = expand_rational(&num, &den, "t", order)?;
    let rhs = f_minus_one.mul(&ratio);

    for k in 0..=order {
        if lhs.coeff(k) != rhs.coeff(k) {
            return Ok(OrthIdentityReport {
                holds: false,
                order,
                first_mismatch: Some((
                    k,
                    format!("{:?}", lhs.coeff(k)),
                    format!("{:?}", rhs.coeff(k)),
                )),
            });
        }
    }
    Ok(OrthIdentityReport {
        holds: true,
        order,
        first_mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::genfunc::chebyshev::chebyshev_u;

    fn params(an: i64, ad: i64, bn: i64, bd: i64) -> ManovaParams {
        ManovaParams::new(rat(an, ad), rat(bn, bd)).unwrap()
    }

    #[test]
    fn f0_and_f1() {
        let p = params(1, 4, 1, 2);
        let seq = de_orth_polys(&p, 4).unwrap();
        assert_eq!(seq.polys[0], RatPolynomial::one());
        assert_eq!(seq.polys[1], RatPolynomial::x_minus(&rat(1, 2)));
    }

    #[test]
    fn monic_of_correct_degree() {
        let p = params(1, 5, 2, 5);
        let seq = de_orth_polys(&p, 8).unwrap();
        for (n, f) in seq.polys.iter().enumerate() {
            if n == 0 {
                assert_eq!(f, &RatPolynomial::one());
            } else {
                assert_eq!(f.degree(), Some(n));
                assert_eq!(f.leading_coeff(), BigRational::one());
            }
        }
    }

    #[test]
    fn domain_enforced() {
        assert!(de_orth_polys(&params(1, 2, 1, 4), 4).is_err());
        assert!(de_orth_polys(&params(3, 4, 1, 2), 4).is_err());
    }

    #[test]
    fn radical_parts_cancel() {
        // expand f_n directly through the Chebyshev coefficients,
        // tracking powers of sigma: odd powers must never appear.
        let p = params(1, 4, 1, 2);
        let n_max = 7;
        let sigma2 = sigma_squared(&p);
        let m = shifted_x(&p);
        for n in 1..=n_max {
            // sigma^{n-1} U_{n-1}(m / 2 sigma): term j of U_{n-1} gives
            // sigma^{n-1-j} (m/2)^j, and n-1-j is even iff j has the
            // parity of n-1, which the Chebyshev polynomial guarantees
            // for its nonzero coefficients.
            let u = chebyshev_u(n - 1);
            for (j, c) in u.coeffs().iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    assert_eq!((n - 1 - j) % 2, 0, "odd radical power at n={n} j={j}");
                }
            }
            let _ = (&m, &sigma2);
        }
    }

    #[test]
    fn generating_function_matches_recurrence() {
        for p in [params(1, 4, 1, 2), params(1, 5, 2, 5)] {
            let n_max = 8;
            let seq = de_orth_polys(&p, n_max).unwrap();
            let series = de_gf_series(&p, n_max, &BigRational::one()).unwrap();
            let vars = series.vars().clone();
            let x = MultiPoly::var(&vars, "x");
            for (n, f) in seq.polys.iter().enumerate() {
                let mut expect = MultiPoly::zero(&vars);
                for (d, c) in f.coeffs().iter().enumerate() {
                    expect = expect.add(&x.pow(d as u32).scale(c));
                }
                assert_eq!(series.coeff(n), &expect, "f_{n}");
            }
        }
    }

    #[test]
    fn s_poly_leading_coefficient_is_beta_to_minus_k() {
        let p = params(1, 4, 1, 2);
        for k in 1..=6usize {
            let s = s_poly(k, &p).unwrap();
            assert_eq!(s.degree(), Some(k));
            let mut want = BigRational::one();
            for _ in 0..k {
                want /= p.beta();
            }
            assert_eq!(s.leading_coeff(), want);
        }
    }

    #[test]
    fn s_series_closed_matches_term_by_term() {
        for p in [params(1, 4, 1, 2), params(1, 5, 2, 5), params(1, 3, 1, 2)] {
            let closed = s_series_closed(&p, 10).unwrap();
            let direct = s_series_from_polys(&p, 10).unwrap();
            assert_eq!(closed, direct);
        }
    }

    #[test]
    fn orth_identity_order_zero_is_trivial() {
        let p = params(1, 4, 1, 2);
        let r = verify_orth_identity(&p, 0).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn orth_identity_holds_at_two_parameter_points() {
        for p in [params(1, 4, 1, 2), params(1, 5, 2, 5)] {
            let r = verify_orth_identity(&p, 8).unwrap();
            assert!(r.holds, "mismatch: {:?}", r.first_mismatch);
        }
    }
}
