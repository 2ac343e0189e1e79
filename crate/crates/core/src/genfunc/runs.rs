//! Cyclic runs of a subset of the `n`-cycle and their generating
//! function, checked by exhaustive enumeration.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{expand_rational, MultiPoly, VarSet};
use crate::error::{Error, Result};

/// A subset `T` of the vertices of the `n`-cycle together with its number
/// of runs: connected components of the induced subgraph, with the
/// deliberate conventions `runs(empty) = runs(full) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunsStatistic {
    pub n: usize,
    pub subset: Vec<usize>,
    pub runs: usize,
}

impl RunsStatistic {
    pub fn new(n: usize, subset: &[usize]) -> Result<Self> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len()
            || sorted.iter().any(|&x| x < 1 || x > n)
        {
            return Err(Error::InvalidParameter(format!(
                "{subset:?} is not a subset of 1..{n}"
            )));
        }
        let runs = runs_count(n, &sorted);
        Ok(RunsStatistic {
            n,
            subset: sorted,
            runs,
        })
    }
}

/// Number of runs of a sorted subset of `{1..n}` on the `n`-cycle.
fn runs_count(n: usize, sorted: &[usize]) -> usize {
    if sorted.is_empty() || sorted.len() == n {
        return 0;
    }
    let mut member = vec![false; n];
    for &x in sorted {
        member[x - 1] = true;
    }
    (0..n)
        .filter(|&i| member[i] && !member[(i + n - 1) % n])
        .count()
}

/// For each `n = 1..n_max`, the value `sum_{T subset of [n]} y^{|T|}
/// z^{runs(T)}`, computed both by enumeration and as the `x^n`
/// coefficient of the closed rational form, with equality asserted.
pub fn runs_enumeration_gf(
    n_max: usize,
    y: &BigRational,
    z: &BigRational,
) -> Result<Vec<BigRational>> {
    if n_max == 0 || n_max > 14 {
        return Err(Error::InvalidParameter(
            "runs generating function supported for 1 <= n_max <= 14".into(),
        ));
    }
    // route 1: enumeration over all subsets as bitmasks
    let mut by_enumeration = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut total = BigRational::zero();
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let runs = runs_count(n, &subset);
            let mut term = BigRational::one();
            for _ in 0..subset.len() {
                term *= y;
            }
            for _ in 0..runs {
                term *= z;
            }
            total += term;
        }
        by_enumeration.push(total);
    }

    // route 2: series expansion of the closed form at (y, z)
    let target = VarSet::new(&["x"]);
    let x = MultiPoly::var(&target, "x");
    let yc = MultiPoly::constant(&target, y.clone());
    let zc = MultiPoly::constant(&target, z.clone());
    let (num, den) = super::closed_forms::runs_gf_num_den(&target, &x, &yc, &zc);
    let series = expand_rational(&num, &den, "x", n_max)?;
    for (n, expected) in by_enumeration.iter().enumerate() {
        let got = series.coeff_rat(n + 1);
        if &got != expected {
            return Err(Error::Numerical(format!(
                "runs generating function mismatch at n = {}: enumeration {expected}, expansion {got}",
                n + 1
            )));
        }
    }
    Ok(by_enumeration)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};

    #[test]
    fn runs_conventions() {
        assert_eq!(RunsStatistic::new(4, &[]).unwrap().runs, 0);
        assert_eq!(RunsStatistic::new(4, &[1, 2, 3, 4]).unwrap().runs, 0);
        assert_eq!(RunsStatistic::new(4, &[1, 3]).unwrap().runs, 2);
        assert_eq!(RunsStatistic::new(4, &[4, 1]).unwrap().runs, 1); // wraps
        assert_eq!(RunsStatistic::new(6, &[1, 2, 4]).unwrap().runs, 2);
        assert!(RunsStatistic::new(3, &[5]).is_err());
    }

    #[test]
    fn gf_small_values() {
        // n = 1, y = z = 1: subsets {} and {1}, both zero runs
        let v = runs_enumeration_gf(1, &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(v[0], rat_int(2));
        // n = 2, y = 2, z = 3: 1 + 2*(2*3) + 4 = 17
        let v = runs_enumeration_gf(2, &rat_int(2), &rat_int(3)).unwrap();
        assert_eq!(v[1], rat_int(17));
        // n = 2, y = 1, z = 0 keeps only runs-free subsets {} and {1,2}
        let v = runs_enumeration_gf(2, &rat_int(1), &rat_int(0)).unwrap();
        assert_eq!(v[1], rat_int(2));
    }

    #[test]
    fn gf_matches_enumeration_at_random_rational_points() {
        let points = [
            (rat(1, 2), rat(2, 3)),
            (rat(3, 5), rat(-1, 2)),
            (rat(-2, 7), rat(5, 3)),
            (rat(7, 4), rat(1, 6)),
            (rat(1, 9), rat(-4, 5)),
        ];
        for (y, z) in points {
            // the equality is asserted inside; n up to 12
            runs_enumeration_gf(12, &y, &z).unwrap();
        }
    }
}
