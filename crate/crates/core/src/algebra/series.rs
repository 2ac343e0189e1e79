//! Power series in one designated main variable, truncated at a fixed
//! order, with exact multivariate-polynomial coefficients in the remaining
//! variables.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{MultiPoly, VarSet};
use crate::error::{Error, Result};

/// Truncated power series `sum_{k=0}^{order} c_k * main^k` where each
/// `c_k` is a [`MultiPoly`] with zero exponent in the main variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    vars: VarSet,
    main: usize,
    order: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    /// Split a polynomial by powers of the main variable.
    pub fn from_poly(p: &MultiPoly, main_var: &str, order: usize) -> Self {
        let vars = p.vars().clone();
        let main = vars
            .index_of(main_var)
            .unwrap_or_else(|| panic!("unknown main variable {main_var:?}"));
        let mut coeffs = vec![MultiPoly::zero(&vars); order + 1];
        for (exps, c) in p.terms() {
            let k = exps[main] as usize;
            if k <= order {
                let mut reduced = exps.to_vec();
                reduced[main] = 0;
                coeffs[k] = coeffs[k].add(&MultiPoly::from_terms(
                    &vars,
                    &[(c.clone(), reduced)],
                ));
            }
        }
        TruncatedSeries {
            vars,
            main,
            order,
            coeffs,
        }
    }

    pub fn zero(vars: &VarSet, main_var: &str, order: usize) -> Self {
        Self::from_poly(&MultiPoly::zero(vars), main_var, order)
    }

    pub fn one(vars: &VarSet, main_var: &str, order: usize) -> Self {
        Self::from_poly(&MultiPoly::one(vars), main_var, order)
    }

    /// Univariate series from rational coefficients (no auxiliary
    /// variables), coefficient of `main^k` at index `k`.
    pub fn univariate(main_var: &str, order: usize, coeffs: &[BigRational]) -> Self {
        assert!(coeffs.len() <= order + 1);
        let vars = VarSet::new(&[main_var]);
        let mut series = Self::zero(&vars, main_var, order);
        for (k, c) in coeffs.iter().enumerate() {
            series.coeffs[k] = MultiPoly::constant(&vars, c.clone());
        }
        series
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn main_var(&self) -> &str {
        &self.vars.names()[self.main]
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Coefficient of `main^k` as a polynomial in the other variables.
    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    /// Coefficient of `main^k` for a series whose coefficients are
    /// constants.
    pub fn coeff_rat(&self, k: usize) -> BigRational {
        self.coeffs[k]
            .as_constant()
            .expect("series coefficient is not a constant")
    }

    fn assert_compatible(&self, rhs: &Self) {
        assert!(
            self.vars == rhs.vars && self.main == rhs.main && self.order == rhs.order,
            "series over different variables or truncation orders"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        TruncatedSeries {
            coeffs,
            ..self.clone()
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut coeffs = vec![MultiPoly::zero(&self.vars); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        TruncatedSeries {
            coeffs,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// Series division. The divisor's constant term must be a nonzero
    /// scalar so the quotient stays polynomial in the auxiliary variables.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.assert_compatible(rhs);
        let lead = rhs.coeffs[0].as_constant().ok_or_else(|| {
            Error::NonInvertible(format!(
                "constant term {:?} is not a scalar",
                rhs.coeffs[0]
            ))
        })?;
        if lead.is_zero() {
            return Err(Error::NonInvertible(format!(
                "denominator has zero constant term in {}",
                self.main_var()
            )));
        }
        let inv = BigRational::one() / lead;
        let mut coeffs = vec![MultiPoly::zero(&self.vars); self.order + 1];
        for k in 0..=self.order {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                if !rhs.coeffs[i].is_zero() && !coeffs[k - i].is_zero() {
                    acc = acc.sub(&rhs.coeffs[i].mul(&coeffs[k - i]));
                }
            }
            coeffs[k] = acc.scale(&inv);
        }
        Ok(TruncatedSeries {
            coeffs,
            ..self.clone()
        })
    }

    /// Square root of a series with constant term exactly 1.
    pub fn sqrt(&self) -> Result<Self> {
        let lead = self.coeffs[0].as_constant();
        if lead != Some(BigRational::one()) {
            return Err(Error::NonInvertible(
                "series square root requires constant term 1".into(),
            ));
        }
        let half = super::rat(1, 2);
        let mut coeffs = vec![MultiPoly::zero(&self.vars); self.order + 1];
        coeffs[0] = MultiPoly::one(&self.vars);
        for k in 1..=self.order {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc.sub(&coeffs[i].mul(&coeffs[k - i]));
            }
            coeffs[k] = acc.scale(&half);
        }
        Ok(TruncatedSeries {
            coeffs,
            ..self.clone()
        })
    }

    /// Divide by the main variable; the constant term must vanish.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonInvertible(format!(
                "cannot divide by {}: nonzero constant term",
                self.main_var()
            )));
        }
        let mut coeffs: Vec<MultiPoly> = self.coeffs[1..].to_vec();
        coeffs.push(MultiPoly::zero(&self.vars));
        Ok(TruncatedSeries {
            coeffs,
            ..self.clone()
        })
    }

    /// Composition `self(main <- inner)` for `inner` with zero constant
    /// term, by Horner's scheme through the truncation order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        inner.assert_compatible(self);
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonInvertible(
                "series composition requires inner constant term 0".into(),
            ));
        }
        let mut acc = Self::zero(&self.vars, self.main_var(), self.order);
        for k in (0..=self.order).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Truncated power `self^n`.
    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(&self.vars, self.main_var(), self.order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate all coefficients at a rational point of the auxiliary
    /// variables (the main variable's coordinate is ignored).
    pub fn coeff_values(&self, point: &[BigRational]) -> Vec<BigRational> {
        let mut point = point.to_vec();
        point[self.main] = BigRational::zero();
        self.coeffs.iter().map(|c| c.eval(&point)).collect()
    }
}

/// Expand the rational function `numerator / denominator` as a series in
/// `main_var` through the given order. Fails when the denominator's
/// constant term in the main variable is not an invertible scalar.
pub fn expand_rational(
    numerator: &MultiPoly,
    denominator: &MultiPoly,
    main_var: &str,
    order: usize,
) -> Result<TruncatedSeries> {
    let num = TruncatedSeries::from_poly(numerator, main_var, order);
    let den = TruncatedSeries::from_poly(denominator, main_var, order);
    num.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    fn univar(name: &str) -> (VarSet, MultiPoly) {
        let vars = VarSet::new(&[name]);
        let x = MultiPoly::var(&vars, name);
        (vars, x)
    }

    #[test]
    fn geometric_series() {
        let (vars, x) = univar("x");
        let one = MultiPoly::one(&vars);
        let s = expand_rational(&one, &one.sub(&x), "x", 3).unwrap();
        for k in 0..=3 {
            assert_eq!(s.coeff_rat(k), rat_int(1));
        }
    }

    #[test]
    fn derivative_of_geometric_series() {
        // x / (1-x)^2 = x + 2x^2 + 3x^3 + ...
        let (vars, x) = univar("x");
        let one = MultiPoly::one(&vars);
        let den = one.sub(&x).pow(2);
        let s = expand_rational(&x, &den, "x", 3).unwrap();
        assert_eq!(s.coeff_rat(0), rat_int(0));
        assert_eq!(s.coeff_rat(1), rat_int(1));
        assert_eq!(s.coeff_rat(2), rat_int(2));
        assert_eq!(s.coeff_rat(3), rat_int(3));
    }

    #[test]
    fn chebyshev_generating_function() {
        // 1 / (1 - 2tx + t^2) = U_0(x) + U_1(x) t + U_2(x) t^2 + ...
        let vars = VarSet::new(&["t", "x"]);
        let t = MultiPoly::var(&vars, "t");
        let x = MultiPoly::var(&vars, "x");
        let one = MultiPoly::one(&vars);
        let den = one
            .sub(&t.mul(&x).scale(&rat_int(2)))
            .add(&t.pow(2));
        let s = expand_rational(&one, &den, "t", 2).unwrap();
        assert_eq!(s.coeff(0), &MultiPoly::one(&vars)); // U_0 = 1
        assert_eq!(s.coeff(1), &x.scale(&rat_int(2))); // U_1 = 2x
        let u2 = x.pow(2).scale(&rat_int(4)).sub(&MultiPoly::one(&vars)); // U_2 = 4x^2 - 1
        assert_eq!(s.coeff(2), &u2);
    }

    #[test]
    fn division_requires_invertible_constant_term() {
        let (vars, x) = univar("x");
        let one = MultiPoly::one(&vars);
        let err = expand_rational(&one, &x, "x", 3);
        assert!(err.is_err());
        let _ = vars;
    }

    #[test]
    fn sqrt_of_one_plus_4z_matches_central_binomials() {
        // 1/sqrt(1+4z) = sum_n binom(2n,n) (-z)^n
        let (vars, z) = univar("z");
        let one = TruncatedSeries::one(&vars, "z", 6);
        let arg = one.add(&TruncatedSeries::from_poly(
            &z.scale(&rat_int(4)),
            "z",
            6,
        ));
        let s = one.div(&arg.sqrt().unwrap()).unwrap();
        let want = [1i64, -2, 6, -20, 70, -252, 924];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(s.coeff_rat(n), rat_int(*w));
        }
    }

    #[test]
    fn compose_with_shift() {
        // 1/(1-z) composed with z/(1-z) gives 1 + z/(1-z) + ... = (1-z)/(1-2z)
        let (vars, z) = univar("z");
        let one = MultiPoly::one(&vars);
        let outer = expand_rational(&one, &one.sub(&z), "z", 5).unwrap();
        let inner = expand_rational(&z, &one.sub(&z), "z", 5).unwrap();
        let composed = outer.compose(&inner).unwrap();
        let two_z = z.scale(&rat_int(2));
        let expect = expand_rational(&one.sub(&z), &one.sub(&two_z), "z", 5).unwrap();
        assert_eq!(composed, expect);
    }

    #[test]
    fn series_mul_matches_product_of_rational_forms() {
        // (1/(1-x)) * (1/(1-2x)) == 1 / ((1-x)(1-2x)) through the order
        let (vars, x) = univar("x");
        let one = MultiPoly::one(&vars);
        let a = expand_rational(&one, &one.sub(&x), "x", 8).unwrap();
        let b = expand_rational(&one, &one.sub(&x.scale(&rat_int(2))), "x", 8).unwrap();
        let den = one.sub(&x).mul(&one.sub(&x.scale(&rat_int(2))));
        let c = expand_rational(&one, &den, "x", 8).unwrap();
        assert_eq!(a.mul(&b), c);
    }

    #[test]
    fn shift_down() {
        let (vars, x) = univar("x");
        let s = TruncatedSeries::from_poly(&x.pow(2).add(&x), "x", 4);
        let shifted = s.shift_down().unwrap();
        assert_eq!(shifted.coeff_rat(0), rat_int(1));
        assert_eq!(shifted.coeff_rat(1), rat_int(1));
        assert_eq!(shifted.coeff_rat(2), rat_int(0));
        let bad = TruncatedSeries::one(&vars, "x", 4).shift_down();
        assert!(bad.is_err());
    }

    #[test]
    fn rational_round_trip_through_strings() {
        let values = [rat(22, 7), rat(-3, 8), rat_int(0), rat(10_000_001, 999_983)];
        for v in &values {
            let s = v.to_string();
            let back: BigRational = s.parse().unwrap();
            assert_eq!(&back, v);
        }
    }
}
