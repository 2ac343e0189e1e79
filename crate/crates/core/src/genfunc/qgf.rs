//! Fully symbolic expansion of the four-variable generating function of
//! the `q_{k,j,a}` polynomials.

use crate::algebra::{expand_rational, MultiPoly, TruncatedSeries, VarSet};
use crate::combinatorics::q_poly;
use crate::error::{Error, Result};

/// Expand `Q(w, x, y, z)` as a series in `x` through `x^order_k`, with
/// polynomial coefficients in `(w, y, z)`. The coefficient of
/// `x^k y^j z^a` is `q_{k,j,a}(w)`.
pub fn q_gf_expand(order_k: usize) -> Result<TruncatedSeries> {
    if order_k > 10 {
        return Err(Error::InvalidParameter(
            "symbolic q expansion supported through order 10".into(),
        ));
    }
    let vars = VarSet::new(&["w", "x", "y", "z"]);
    let w = MultiPoly::var(&vars, "w");
    let x = MultiPoly::var(&vars, "x");
    let y = MultiPoly::var(&vars, "y");
    let z = MultiPoly::var(&vars, "z");
    let (num, den) = super::closed_forms::q_gf_num_den(&vars, &w, &x, &y, &z);
    expand_rational(&num, &den, "x", order_k)
}

/// Extract the coefficient of `x^k y^j z^a` from the expansion as a
/// univariate polynomial in `w`, and compare it with the enumerated
/// `q_{k,j,a}`.
pub fn q_gf_coefficient_matches(
    series: &TruncatedSeries,
    k: usize,
    j: usize,
    a: usize,
) -> Result<bool> {
    let expected = q_poly(k, j, a)?;
    let coeff = series.coeff(k);
    let vars = series.vars();
    let w_idx = vars.index_of("w").expect("series has w");
    let y_idx = vars.index_of("y").expect("series has y");
    let z_idx = vars.index_of("z").expect("series has z");
    // collect the w-polynomial sitting at y^j z^a
    let mut got = vec![num_rational::BigRational::from_integer(0.into()); coeff.degree_in(w_idx) as usize + 1];
    for (exps, c) in coeff.terms() {
        if exps[y_idx] as usize == j && exps[z_idx] as usize == a {
            got[exps[w_idx] as usize] += c;
        }
    }
    let got_poly = crate::algebra::RatPolynomial::new(got);
    Ok(got_poly == expected.to_rational())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_coefficients() {
        let s = q_gf_expand(3).unwrap();
        // x^1 y^1 z^1 -> q_{1,1,1} = 1
        assert!(q_gf_coefficient_matches(&s, 1, 1, 1).unwrap());
        // x^2 y^1 z^0 -> q_{2,1,0} = 2w
        assert!(q_gf_coefficient_matches(&s, 2, 1, 0).unwrap());
        // x^2 y^2 z^1 -> q_{2,2,1} = 0
        assert!(q_gf_coefficient_matches(&s, 2, 2, 1).unwrap());
    }

    #[test]
    fn expansion_matches_enumeration_through_order_6() {
        let s = q_gf_expand(6).unwrap();
        for k in 1..=6usize {
            for j in 0..=k {
                for a in 0..=j {
                    assert!(
                        q_gf_coefficient_matches(&s, k, j, a).unwrap(),
                        "mismatch at k={k} j={j} a={a}"
                    );
                }
            }
        }
    }

    #[test]
    fn no_stray_monomials() {
        // every monomial of the x^k coefficient has y-degree <= k and
        // z-degree <= y-degree, matching the index constraints
        let s = q_gf_expand(5).unwrap();
        let vars = s.vars();
        let (yi, zi) = (vars.index_of("y").unwrap(), vars.index_of("z").unwrap());
        for k in 1..=5 {
            for (exps, _) in s.coeff(k).terms() {
                assert!(exps[yi] as usize <= k);
                assert!(exps[zi] <= exps[yi]);
            }
        }
    }
}
