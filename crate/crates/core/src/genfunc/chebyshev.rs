//! Chebyshev polynomials of the second kind.

use crate::algebra::IntPolynomial;

/// `U_n` by the recurrence `U_n = 2x U_{n-1} - U_{n-2}`, with
/// `U_{-1} = 0` represented by calling this only for `n >= 0`.
pub fn chebyshev_u(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::zero(); // U_{-1}
    let mut curr = IntPolynomial::constant(1); // U_0
    let two_x = IntPolynomial::monomial(2, 1);
    for _ in 0..n {
        let next = &(&two_x * &curr) - &prev;
        prev = curr;
        curr = next;
    }
    curr
}
