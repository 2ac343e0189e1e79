//! The integer-coefficient polynomial family `q_{k,j,a}(x)` indexing the
//! coefficients of the projection trace recursion, the modified Lucas
//! triangle, and the closed form taken by the alternating `j`-sums when
//! the recursion parameter is `x = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{binomial, IntPolynomial};
use crate::error::{Error, Result};

use super::partition::{induced_partition, subsets_of_size};

/// `q_{k,j,a}(x)` by direct enumeration over subsets `S` of `{1..k}` of
/// size `j` and `A` of `{1..j}` of size `a`. Each factor of the inner
/// product is the alternating geometric polynomial of the induced part
/// `p_i(S)`, with a parity-sign constant added when `i` is outside `A`.
///
/// `q_{k,0,0} = 0` by convention; cost grows like `3^k`, so large orders
/// should go through the generating function instead.
pub fn q_poly(k: usize, j: usize, a: usize) -> Result<IntPolynomial> {
    if j > k || a > j {
        return Err(Error::InvalidParameter(format!(
            "q indices need a <= j <= k, got k={k} j={j} a={a}"
        )));
    }
    if j == 0 {
        return Ok(IntPolynomial::zero());
    }
    // Alternating geometric factors depend only on the part size, so
    // precompute both variants (i in A / i not in A) per size.
    let mut factor_in_a = vec![IntPolynomial::zero(); k + 1];
    let mut factor_not_in_a = vec![IntPolynomial::zero(); k + 1];
    for (p, item) in factor_in_a.iter_mut().enumerate().skip(1) {
        let mut coeffs = vec![BigInt::zero(); p];
        for (b, c) in coeffs.iter_mut().enumerate() {
            *c = if (p - 1 - b) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
        }
        *item = IntPolynomial::new(coeffs);
        let sign = IntPolynomial::constant(if p % 2 == 0 { 1 } else { -1 });
        factor_not_in_a[p] = &*item + &sign;
    }

    let mut total = IntPolynomial::zero();
    for s in subsets_of_size(k, j) {
        let parts = induced_partition(&s, k)?;
        for a_set in subsets_of_size(j, a) {
            let mut in_a = vec![false; j + 1];
            for &i in &a_set {
                in_a[i] = true;
            }
            let mut prod = IntPolynomial::constant(1);
            for (i, &p) in parts.iter().enumerate() {
                let factor = if in_a[i + 1] {
                    &factor_in_a[p]
                } else {
                    &factor_not_in_a[p]
                };
                if factor.is_zero() {
                    prod = IntPolynomial::zero();
                    break;
                }
                prod = &prod * factor;
            }
            total = &total + &prod;
        }
    }
    Ok(total)
}

/// Modified Lucas triangle `T(n, j) = binom(n-1, j) + 2 binom(n-1, j-1)`
/// for `n >= 1`, with the deliberate convention `T(0, 0) = 1` (not the
/// standard `T(0, 0) = 2`).
pub fn lucas_t(n: u64, j: u64) -> Result<BigInt> {
    if j > n {
        return Err(Error::InvalidParameter(format!(
            "lucas triangle needs j <= n, got n={n} j={j}"
        )));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let first = binomial(n - 1, j);
    let second = if j == 0 {
        BigInt::zero()
    } else {
        binomial(n - 1, j - 1)
    };
    Ok(first + BigInt::from(2) * second)
}

/// The alternating sum `sum_{j=1}^{k} (-alpha)^{k-j} q_{k,j,a}(x)` by
/// direct evaluation of the enumerated polynomials.
pub fn q_sum_direct(k: usize, a: usize, alpha: &BigRational, x: &BigRational) -> Result<BigRational> {
    if k == 0 || a > k {
        return Err(Error::InvalidParameter(format!(
            "q sum needs k >= 1 and a <= k, got k={k} a={a}"
        )));
    }
    let mut total = BigRational::zero();
    for j in 1..=k {
        if a > j {
            continue;
        }
        let q = q_poly(k, j, a)?;
        let mut term = q.eval(x);
        for _ in 0..(k - j) {
            term *= -alpha;
        }
        total += term;
    }
    Ok(total)
}

/// Closed form of the alternating `j`-sum at `x = 1`, in terms of the
/// modified Lucas triangle:
///
/// * `T(k/2, k/2) (alpha(alpha-1))^{k/2} - 2 alpha^k`   when `a = 0` and `k` even,
/// * `T((k+a)/2, (k-a)/2) (alpha(alpha-1))^{(k-a)/2}`    when `0 < a ≡ k (mod 2)`,
/// * `0` otherwise.
pub fn q_sum_km_closed_form(k: usize, a: usize, alpha: &BigRational) -> Result<BigRational> {
    if k == 0 || a > k {
        return Err(Error::InvalidParameter(format!(
            "q sum needs k >= 1 and a <= k, got k={k} a={a}"
        )));
    }
    if a % 2 != k % 2 {
        return Ok(BigRational::zero());
    }
    let t = lucas_t(((k + a) / 2) as u64, ((k - a) / 2) as u64)?;
    let base = alpha * (alpha - BigRational::one());
    let mut value = BigRational::from(t);
    for _ in 0..(k - a) / 2 {
        value *= &base;
    }
    if a == 0 {
        let mut alpha_k = BigRational::one();
        for _ in 0..k {
            alpha_k *= alpha;
        }
        value -= BigRational::from(BigInt::from(2)) * alpha_k;
    }
    Ok(value)
}

/// The alternating `j`-sum at `x = 1`, computed from the enumerated
/// polynomials and checked against the closed form before returning.
pub fn q_sum_km(k: usize, a: usize, alpha: &BigRational) -> Result<BigRational> {
    let direct = q_sum_direct(k, a, alpha, &BigRational::one())?;
    let closed = q_sum_km_closed_form(k, a, alpha)?;
    if direct != closed {
        return Err(Error::Numerical(format!(
            "q-sum closed form mismatch at k={k} a={a}: direct {direct} vs closed {closed}"
        )));
    }
    Ok(direct)
}
