//! Closed rational forms of the generating functions used throughout the
//! exact half of the library, constructed over caller-chosen variable
//! images so the same formulas serve the fully symbolic expansions, the
//! per-parameter coupling tables, and the orthogonal-polynomial identity.

use num_rational::BigRational;

use crate::algebra::{expand_rational, MultiPoly, VarSet};
use crate::error::Result;

/// Numerator and denominator of the cyclic-runs generating function
///
/// `R(x, y, z) = (2x^2yz + xy(1-x) + x(1-xy)) / ((1-xy)(1-x) - x^2yz)`
///
/// with the three variables substituted by the given images.
pub fn runs_gf_num_den(
    target: &VarSet,
    x: &MultiPoly,
    y: &MultiPoly,
    z: &MultiPoly,
) -> (MultiPoly, MultiPoly) {
    let scratch = VarSet::new(&["x", "y", "z"]);
    let sx = MultiPoly::var(&scratch, "x");
    let sy = MultiPoly::var(&scratch, "y");
    let sz = MultiPoly::var(&scratch, "z");
    let one = MultiPoly::one(&scratch);
    let two = MultiPoly::constant(&scratch, crate::algebra::rat_int(2));

    let num = two
        .mul(&sx.pow(2))
        .mul(&sy)
        .mul(&sz)
        .add(&sx.mul(&sy).mul(&one.sub(&sx)))
        .add(&sx.mul(&one.sub(&sx.mul(&sy))));
    let den = one
        .sub(&sx.mul(&sy))
        .mul(&one.sub(&sx))
        .sub(&sx.pow(2).mul(&sy).mul(&sz));

    let images = [x.clone(), y.clone(), z.clone()];
    (
        num.substitute(target, &images),
        den.substitute(target, &images),
    )
}

/// Numerator and denominator of the four-variable generating function of
/// the `q_{k,j,a}` polynomials,
///
/// `Q(w, x, y, z) = xy(-w^2x^2 + wx^2z + wx^2 + 2wx + z)
///               / ((wx^2y + wx^2 + xyz + wx - x - 1)(wx - 1)(x + 1))`,
///
/// with the four variables substituted by the given images.
pub fn q_gf_num_den(
    target: &VarSet,
    w: &MultiPoly,
    x: &MultiPoly,
    y: &MultiPoly,
    z: &MultiPoly,
) -> (MultiPoly, MultiPoly) {
    let scratch = VarSet::new(&["w", "x", "y", "z"]);
    let sw = MultiPoly::var(&scratch, "w");
    let sx = MultiPoly::var(&scratch, "x");
    let sy = MultiPoly::var(&scratch, "y");
    let sz = MultiPoly::var(&scratch, "z");
    let one = MultiPoly::one(&scratch);
    let two = MultiPoly::constant(&scratch, crate::algebra::rat_int(2));

    let num = sx.mul(&sy).mul(
        &sw.pow(2)
            .mul(&sx.pow(2))
            .neg()
            .add(&sw.mul(&sx.pow(2)).mul(&sz))
            .add(&sw.mul(&sx.pow(2)))
            .add(&two.mul(&sw).mul(&sx))
            .add(&sz),
    );
    let factor1 = sw
        .mul(&sx.pow(2))
        .mul(&sy)
        .add(&sw.mul(&sx.pow(2)))
        .add(&sx.mul(&sy).mul(&sz))
        .add(&sw.mul(&sx))
        .sub(&sx)
        .sub(&one);
    let factor2 = sw.mul(&sx).sub(&one);
    let factor3 = sx.add(&one);
    let den = factor1.mul(&factor2).mul(&factor3);

    let images = [w.clone(), x.clone(), y.clone(), z.clone()];
    (
        num.substitute(target, &images),
        den.substitute(target, &images),
    )
}

/// Table of the alternating coupling sums
///
/// `phi[k][a] = sum_{j=1}^{k} (-alpha)^{k-j} q_{k,j,a}(eta)`
///
/// for all `1 <= k <= k_max`, `0 <= a <= k`, extracted from the expansion
/// of `Q(eta, -alpha t, -1/alpha, z)` in `t`; `phi[0]` is unused. This is
/// the fast exact route for orders where enumerating the `q` polynomials
/// is hopeless.
pub fn coupling_table(
    k_max: usize,
    alpha: &BigRational,
    eta: &BigRational,
) -> Result<Vec<Vec<BigRational>>> {
    let target = VarSet::new(&["t", "z"]);
    let t = MultiPoly::var(&target, "t");
    let z = MultiPoly::var(&target, "z");
    let w = MultiPoly::constant(&target, eta.clone());
    let x = t.scale(&-alpha.clone());
    let y = MultiPoly::constant(&target, -alpha.recip());
    let (num, den) = q_gf_num_den(&target, &w, &x, &y, &z);
    let series = expand_rational(&num, &den, "t", k_max)?;
    let mut table = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let coeff = series.coeff(k);
        let row: Vec<BigRational> = (0..=k as u32)
            .map(|a| coeff.coeff_named(&[("z", a)]))
            .collect();
        table.push(row);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::combinatorics::q_sum_direct;

    #[test]
    fn coupling_table_matches_direct_enumeration() {
        let alpha = rat(1, 3);
        for (beta, label) in [(rat(1, 2), "eta=1"), (rat(1, 4), "eta=3")] {
            let eta = beta.recip() - rat(1, 1);
            let table = coupling_table(7, &alpha, &eta).unwrap();
            for k in 1..=7usize {
                for a in 0..=k {
                    let direct = q_sum_direct(k, a, &alpha, &eta).unwrap();
                    assert_eq!(table[k][a], direct, "{label} k={k} a={a}");
                }
            }
        }
    }
}
