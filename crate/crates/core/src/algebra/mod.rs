//! Exact arithmetic kernel: arbitrary-precision rationals, integer and
//! rational polynomials, multivariate polynomials, and truncated power
//! series expansions of rational functions.
//!
//! Everything here is immutable after construction and exact; floating
//! point never enters this module.

mod multipoly;
mod poly;
mod series;

pub use multipoly::{MultiPoly, VarSet};
pub use poly::{IntPolynomial, RatPolynomial};
pub use series::{expand_rational, TruncatedSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an exact rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Binomial coefficient with the usual convention that out-of-range `k`
/// gives zero.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut value = BigInt::one();
    for i in 0..k {
        value = value * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    value
}

/// Falling factorial `x (x-1) ... (x-k+1)` over the rationals.
pub fn falling_factorial(x: &BigRational, k: u64) -> BigRational {
    let mut value = BigRational::one();
    for i in 0..k {
        value *= x - rat_int(i as i64);
    }
    value
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut value = BigInt::one();
    for i in 2..=n {
        value *= BigInt::from(i);
    }
    value
}

/// Double factorial `n!! = n (n-2) (n-4) ...` with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: u64) -> BigInt {
    let mut value = BigInt::one();
    let mut i = n;
    while i >= 2 {
        value *= BigInt::from(i);
        i -= 2;
    }
    value
}

/// Catalan number `Cat(n) = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Nearest-rational approximation of `x` with denominator at most
/// `max_den`, via continued fractions. Used when decimal CLI input has to
/// enter an exact identity path.
pub fn rational_from_f64(x: f64, max_den: u64) -> BigRational {
    assert!(x.is_finite(), "cannot approximate a non-finite float");
    let negative = x < 0.0;
    let mut x = x.abs();
    // Convergents p/q of the continued fraction of x.
    let (mut p0, mut q0, mut p1, mut q1) = (0u128, 1u128, 1u128, 0u128);
    for _ in 0..64 {
        let a = x.floor();
        if a >= u128::MAX as f64 {
            break;
        }
        let a_int = a as u128;
        let p2 = a_int.saturating_mul(p1).saturating_add(p0);
        let q2 = a_int.saturating_mul(q1).saturating_add(q0);
        if q2 > max_den as u128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = x - a;
        if frac < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    let mut value = BigRational::new(BigInt::from(p1), BigInt::from(q1.max(1)));
    if negative {
        value = -value;
    }
    value
}

/// Exact rational to `f64`.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().expect("rational out of f64 range")
}
