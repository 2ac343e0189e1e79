//! Riordan arrays: lower-triangular matrices whose column generating
//! functions are `g f^k`, with multiplication acting by composition of
//! parameters, plus the interleaved Lucas-triangle / signed-binomial
//! inverse pair used by the Kesten-McKay error analysis.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{binomial, expand_rational, MultiPoly, TruncatedSeries, VarSet};
use crate::error::{Error, Result};

use super::qpoly::lucas_t;

/// Square lower-triangular matrix built from Riordan parameters
/// `(g, f)`: entry `(n, k)` is the coefficient of `z^n` in `g f^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RiordanArray {
    g: TruncatedSeries,
    f: TruncatedSeries,
    size: usize,
    entries: Vec<Vec<BigRational>>,
}

impl RiordanArray {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn entry(&self, n: usize, k: usize) -> &BigRational {
        &self.entries[n][k]
    }

    /// Identity array, parameters `(1, z)`.
    pub fn identity(size: usize) -> Self {
        let vars = VarSet::new(&["z"]);
        let one = TruncatedSeries::one(&vars, "z", size - 1);
        let z = TruncatedSeries::from_poly(&MultiPoly::var(&vars, "z"), "z", size - 1);
        riordan_from_params(&one, &z, size).expect("identity parameters are proper")
    }
}

/// Build the array from parameter series. Requires `f(0) = 0` with a
/// nonzero linear coefficient and `g(0) != 0`, so the result is lower
/// triangular with nonzero diagonal.
pub fn riordan_from_params(
    g: &TruncatedSeries,
    f: &TruncatedSeries,
    size: usize,
) -> Result<RiordanArray> {
    if size == 0 {
        return Err(Error::InvalidParameter("size must be at least 1".into()));
    }
    let order = size - 1;
    if g.order() < order || f.order() < order {
        return Err(Error::InvalidParameter(
            "parameter series truncated below the requested size".into(),
        ));
    }
    let g = truncate(g, order);
    let f = truncate(f, order);
    let f0 = f.coeff_rat(0);
    let g0 = g.coeff_rat(0);
    if !f0.is_zero() || g0.is_zero() || (order >= 1 && f.coeff_rat(1).is_zero()) {
        return Err(Error::InvalidParameter(
            "not a proper Riordan array: need f(0) = 0, f'(0) != 0, g(0) != 0".into(),
        ));
    }
    let mut entries = vec![vec![BigRational::zero(); size]; size];
    let mut col = g.clone();
    for k in 0..size {
        for (n, row) in entries.iter_mut().enumerate() {
            row[k] = col.coeff_rat(n);
        }
        if k + 1 < size {
            col = col.mul(&f);
        }
    }
    Ok(RiordanArray {
        g,
        f,
        size,
        entries,
    })
}

fn truncate(s: &TruncatedSeries, order: usize) -> TruncatedSeries {
    if s.order() == order {
        return s.clone();
    }
    let coeffs: Vec<BigRational> = (0..=order).map(|k| s.coeff_rat(k)).collect();
    TruncatedSeries::univariate(s.main_var(), order, &coeffs)
}

/// Multiply two Riordan arrays. The entries are multiplied as matrices
/// and the parameters are composed as `(g G(f), F(f))`; both routes are
/// computed and must agree.
pub fn riordan_multiply(a: &RiordanArray, b: &RiordanArray) -> Result<RiordanArray> {
    if a.size != b.size {
        return Err(Error::InvalidParameter(format!(
            "size mismatch: {} vs {}",
            a.size, b.size
        )));
    }
    let composed_g = a.g.mul(&b.g.compose(&a.f)?);
    let composed_f = b.f.compose(&a.f)?;
    let product = riordan_from_params(&composed_g, &composed_f, a.size)?;
    let direct = mat_mul(&a.entries, &b.entries);
    if direct != product.entries {
        return Err(Error::Numerical(
            "Riordan product entries disagree with composed parameters".into(),
        ));
    }
    Ok(product)
}

/// Plain matrix product of square rational matrices.
pub fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

/// Identity matrix as rationals.
pub fn mat_identity(n: usize) -> Vec<Vec<BigRational>> {
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    out
}

fn univar_z() -> (VarSet, MultiPoly, MultiPoly) {
    let vars = VarSet::new(&["z"]);
    let z = MultiPoly::var(&vars, "z");
    let one = MultiPoly::one(&vars);
    (vars, z, one)
}

/// Even-index Lucas-triangle array: entries `T(l + b, l - b)`, parameters
/// `((1+z)/(1-z), z/(1-z)^2)`.
pub fn lucas_array_even(size: usize) -> Result<RiordanArray> {
    let order = size - 1;
    let (_, z, one) = univar_z();
    let g = expand_rational(&one.add(&z), &one.sub(&z), "z", order)?;
    let f = expand_rational(&z, &one.sub(&z).pow(2), "z", order)?;
    riordan_from_params(&g, &f, size)
}

/// Odd-index Lucas-triangle array: entries `T(l + b + 1, l - b)`,
/// parameters `((1+z)/(1-z)^2, z/(1-z)^2)`.
pub fn lucas_array_odd(size: usize) -> Result<RiordanArray> {
    let order = size - 1;
    let (_, z, one) = univar_z();
    let g = expand_rational(&one.add(&z), &one.sub(&z).pow(2), "z", order)?;
    let f = expand_rational(&z, &one.sub(&z).pow(2), "z", order)?;
    riordan_from_params(&g, &f, size)
}

// Dividing by z costs one order of precision, so the square-root
// parameter series are built one order above the requested size and
// truncated back inside riordan_from_params.
fn sqrt_one_plus_4z(order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let (vars, z, _) = univar_z();
    let one = TruncatedSeries::one(&vars, "z", order + 1);
    let arg = one.add(&TruncatedSeries::from_poly(
        &z.scale(&crate::algebra::rat_int(4)),
        "z",
        order + 1,
    ));
    Ok((one, arg.sqrt()?))
}

/// Even-index signed central-binomial array: entries
/// `(-1)^{l+b} binom(2l, l+b)`, parameters
/// `(1/sqrt(1+4z), 1 + (1 - sqrt(1+4z))/(2z))`.
pub fn signed_binomial_array_even(size: usize) -> Result<RiordanArray> {
    let order = size - 1;
    let (one, root) = sqrt_one_plus_4z(order)?;
    let g = one.div(&root)?;
    let f = one.add(&one.sub(&root).shift_down()?.scale(&crate::algebra::rat(1, 2)));
    riordan_from_params(&g, &f, size)
}

/// Odd-index signed central-binomial array: entries
/// `(-1)^{l+b} binom(2l+1, l+b+1)`, parameters
/// `((-1 + sqrt(1+4z)) / (2z sqrt(1+4z)), 1 + (1 - sqrt(1+4z))/(2z))`.
pub fn signed_binomial_array_odd(size: usize) -> Result<RiordanArray> {
    let order = size - 1;
    let (one, root) = sqrt_one_plus_4z(order)?;
    let g = root
        .sub(&one)
        .shift_down()?
        .scale(&crate::algebra::rat(1, 2))
        .div(&root)?;
    let f = one.add(&one.sub(&root).shift_down()?.scale(&crate::algebra::rat(1, 2)));
    riordan_from_params(&g, &f, size)
}

/// The pair `(X, Y)` of parity-interleaved triangular matrices
///
/// * `X[k][a] = T((k+a)/2, (k-a)/2)` on `a <= k`, `a ≡ k (mod 2)`,
/// * `Y[k][a] = (-1)^{(k-a)/2} binom(k, (k+a)/2)` on the same support,
///
/// which are exact two-sided inverses of each other. `X` interleaves the
/// even and odd Lucas-triangle arrays and `Y` the signed central-binomial
/// arrays.
pub fn km_triangle_pair(size: usize) -> Result<(Vec<Vec<BigRational>>, Vec<Vec<BigRational>>)> {
    if size == 0 {
        return Err(Error::InvalidParameter("size must be at least 1".into()));
    }
    let mut x = vec![vec![BigRational::zero(); size]; size];
    let mut y = vec![vec![BigRational::zero(); size]; size];
    for k in 0..size {
        for a in 0..=k {
            if a % 2 != k % 2 {
                continue;
            }
            let t = lucas_t(((k + a) / 2) as u64, ((k - a) / 2) as u64)?;
            x[k][a] = BigRational::from(t);
            let mut b = BigRational::from(binomial(k as u64, ((k + a) / 2) as u64));
            if (k - a) / 2 % 2 == 1 {
                b = -b;
            }
            y[k][a] = b;
        }
    }
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_int, rat};

    #[test]
    fn identity_array() {
        let id = RiordanArray::identity(4);
        assert_eq!(id.entries, mat_identity(4));
    }

    #[test]
    fn lucas_even_entries() {
        // rows [1], [2, 1], [2, 4, 1] cross-checked against T(l+b, l-b)
        let arr = lucas_array_even(3).unwrap();
        assert_eq!(arr.entry(0, 0), &rat_int(1));
        assert_eq!(arr.entry(1, 0), &rat_int(2));
        assert_eq!(arr.entry(1, 1), &rat_int(1));
        assert_eq!(arr.entry(2, 0), &rat_int(2));
        assert_eq!(arr.entry(2, 1), &rat_int(4));
        assert_eq!(arr.entry(2, 2), &rat_int(1));
        for l in 0..3usize {
            for b in 0..=l {
                let t = lucas_t((l + b) as u64, (l - b) as u64).unwrap();
                assert_eq!(arr.entry(l, b), &BigRational::from(t));
            }
        }
    }

    #[test]
    fn lucas_odd_entries() {
        let arr = lucas_array_odd(6).unwrap();
        for l in 0..6usize {
            for b in 0..=l {
                let t = lucas_t((l + b + 1) as u64, (l - b) as u64).unwrap();
                assert_eq!(arr.entry(l, b), &BigRational::from(t));
            }
        }
    }

    #[test]
    fn signed_binomial_entries() {
        let even = signed_binomial_array_even(6).unwrap();
        let odd = signed_binomial_array_odd(6).unwrap();
        for l in 0..6usize {
            for b in 0..=l {
                let sign = if (l + b) % 2 == 0 { 1 } else { -1 };
                let e = BigRational::from(binomial(2 * l as u64, (l + b) as u64) * sign);
                assert_eq!(even.entry(l, b), &e, "even l={l} b={b}");
                let o = BigRational::from(binomial(2 * l as u64 + 1, (l + b + 1) as u64) * sign);
                assert_eq!(odd.entry(l, b), &o, "odd l={l} b={b}");
            }
        }
    }

    #[test]
    fn lucas_and_signed_binomial_are_inverse_pairs() {
        for size in [4usize, 8] {
            let prod_even = riordan_multiply(
                &lucas_array_even(size).unwrap(),
                &signed_binomial_array_even(size).unwrap(),
            )
            .unwrap();
            assert_eq!(prod_even.entries, mat_identity(size));
            let prod_odd = riordan_multiply(
                &lucas_array_odd(size).unwrap(),
                &signed_binomial_array_odd(size).unwrap(),
            )
            .unwrap();
            assert_eq!(prod_odd.entries, mat_identity(size));
        }
    }

    #[test]
    fn multiply_by_identity() {
        let arr = lucas_array_even(5).unwrap();
        let id = RiordanArray::identity(5);
        let prod = riordan_multiply(&id, &arr).unwrap();
        assert_eq!(prod.entries, arr.entries);
    }

    #[test]
    fn multiply_is_associative() {
        let a = lucas_array_even(5).unwrap();
        let b = lucas_array_odd(5).unwrap();
        let c = signed_binomial_array_even(5).unwrap();
        let ab_c = riordan_multiply(&riordan_multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = riordan_multiply(&a, &riordan_multiply(&b, &c).unwrap()).unwrap();
        assert_eq!(ab_c.entries, a_bc.entries);
    }

    #[test]
    fn km_pair_small_entries() {
        let (x, y) = km_triangle_pair(2).unwrap();
        assert_eq!(x[0][0], rat_int(1)); // T(0,0) = 1 by convention
        assert_eq!(y[0][0], rat_int(1));
        assert_eq!(x[1], vec![rat_int(0), rat_int(1)]); // T(1,0) = 1
        assert_eq!(y[1], vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn km_pair_inverse_16() {
        let (x, y) = km_triangle_pair(16).unwrap();
        assert_eq!(mat_mul(&x, &y), mat_identity(16));
        assert_eq!(mat_mul(&y, &x), mat_identity(16));
    }

    #[test]
    fn improper_parameters_rejected() {
        let vars = VarSet::new(&["z"]);
        let one = TruncatedSeries::one(&vars, "z", 3);
        let z = TruncatedSeries::from_poly(&MultiPoly::var(&vars, "z"), "z", 3);
        // f with nonzero constant term
        assert!(riordan_from_params(&one, &one, 4).is_err());
        // g with zero constant term
        assert!(riordan_from_params(&z, &z, 4).is_err());
        let _ = rat(1, 2);
    }
}
