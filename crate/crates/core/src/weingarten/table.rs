//! The unitary Weingarten function at small order, by exact rational
//! inversion of the cycle-count Gram matrix.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{
    all_permutations, class_representative, integer_partitions, Permutation,
};
use crate::error::{Error, Result};

/// Weingarten values of one `(k, N)` pair, stored per cycle type.
#[derive(Clone, Debug)]
pub struct WeingartenTable {
    k: usize,
    n: u64,
    values: HashMap<Vec<usize>, BigRational>,
}

impl WeingartenTable {
    pub fn order(&self) -> usize {
        self.k
    }

    pub fn dimension(&self) -> u64 {
        self.n
    }

    /// Value on a cycle type (a partition of `k`, any order).
    pub fn value_of_type(&self, cycle_type: &[usize]) -> &BigRational {
        let mut key = cycle_type.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.values
            .get(&key)
            .unwrap_or_else(|| panic!("{key:?} is not a cycle type of S_{}", self.k))
    }

    /// Value on a permutation.
    pub fn value(&self, sigma: &Permutation) -> &BigRational {
        self.value_of_type(&sigma.cycle_type())
    }

    pub fn cycle_types(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.values.iter()
    }
}

/// Solve a dense rational linear system by Gaussian elimination with
/// partial (largest-entry) pivoting.
pub(crate) fn solve_rational(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Result<Vec<BigRational>> {
    let n = a.len();
    for col in 0..n {
        let pivot_row = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r, &s| {
                // compare |a[r][col]| and |a[s][col]| without cloning big values
                let x = &a[r][col];
                let y = &a[s][col];
                (x * x).partial_cmp(&(y * y)).expect("rational ordering")
            })
            .ok_or_else(|| Error::Numerical("singular Gram matrix".into()))?;
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &pivot;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[row][c] -= sub;
            }
            let sub = &factor * &b[col];
            b[row] -= sub;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for c in row + 1..n {
            acc -= &a[row][c] * &x[c];
        }
        x[row] = acc / &a[row][row];
    }
    Ok(x)
}

fn n_pow(n: u64, e: usize) -> BigRational {
    let mut v = BigInt::one();
    for _ in 0..e {
        v *= BigInt::from(n);
    }
    BigRational::from(v)
}

/// Build the Weingarten table for order `k` and dimension `N >= k`.
///
/// For `k <= 5` the full `k! x k!` Gram system `G w = e_id` with
/// `G[s][t] = N^{cyc(s^-1 t)}` is solved outright and the class-function
/// property of the solution is asserted rather than assumed. For
/// `k = 6, 7` the system is collapsed onto conjugacy classes first; the
/// defining orthogonality relation is then re-verified on class
/// representatives against a sum over the whole group, which pins the
/// unique solution of the full system.
pub fn weingarten_table(k: usize, n: u64) -> Result<WeingartenTable> {
    if k == 0 || k > 7 {
        return Err(Error::InvalidParameter(
            "Weingarten table supported for 1 <= k <= 7".into(),
        ));
    }
    if n < k as u64 {
        return Err(Error::InvalidParameter(format!(
            "Gram matrix may be singular below order: need N >= {k}, got {n}"
        )));
    }
    let values = if k <= 5 {
        full_gram_solve(k, n)?
    } else {
        collapsed_gram_solve(k, n)?
    };
    let table = WeingartenTable { k, n, values };
    verify_orthogonality(&table)?;
    Ok(table)
}

fn full_gram_solve(k: usize, n: u64) -> Result<HashMap<Vec<usize>, BigRational>> {
    let group = all_permutations(k);
    let size = group.len();
    let id_index = group
        .iter()
        .position(|p| *p == Permutation::identity(k))
        .expect("identity is enumerated");
    let mut gram = vec![vec![BigRational::zero(); size]; size];
    for (i, s) in group.iter().enumerate() {
        let s_inv = s.inverse();
        for (j, t) in group.iter().enumerate() {
            gram[i][j] = n_pow(n, s_inv.compose(t).cycle_count());
        }
    }
    let mut rhs = vec![BigRational::zero(); size];
    rhs[id_index] = BigRational::one();
    let w = solve_rational(gram, rhs)?;

    // compress per cycle type, asserting the class-function property
    let mut values: HashMap<Vec<usize>, BigRational> = HashMap::new();
    for (p, v) in group.iter().zip(&w) {
        let key = p.cycle_type();
        match values.get(&key) {
            None => {
                values.insert(key, v.clone());
            }
            Some(existing) => {
                if existing != v {
                    return Err(Error::Numerical(format!(
                        "Gram inverse is not a class function at type {key:?}"
                    )));
                }
            }
        }
    }
    Ok(values)
}

fn collapsed_gram_solve(k: usize, n: u64) -> Result<HashMap<Vec<usize>, BigRational>> {
    let types = integer_partitions(k);
    let reps: Vec<Permutation> = types.iter().map(|t| class_representative(t)).collect();
    let group = enumerate_sk(k);
    // coefficient of class c' in the equation of representative c:
    // sum over tau in c' of N^{cyc(rep_c^-1 tau)}
    let type_index: HashMap<Vec<usize>, usize> =
        types.iter().cloned().zip(0..).collect();
    let mut gram = vec![vec![BigRational::zero(); types.len()]; types.len()];
    for (ci, rep) in reps.iter().enumerate() {
        let rep_inv = rep.inverse();
        for tau in &group {
            let cj = type_index[&tau.cycle_type()];
            let add = n_pow(n, rep_inv.compose(tau).cycle_count());
            gram[ci][cj] += add;
        }
    }
    let id_class = type_index[&vec![1usize; k]];
    let mut rhs = vec![BigRational::zero(); types.len()];
    rhs[id_class] = BigRational::one();
    let w = solve_rational(gram, rhs)?;
    Ok(types.into_iter().zip(w).collect())
}

// S_6 and S_7 exceed the shared enumeration cap used by the brute-force
// oracles, so the table builder has its own plain generator.
fn enumerate_sk(k: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let k = used.len();
        if prefix.len() == k {
            out.push(Permutation::from_images(prefix).expect("valid images"));
            return;
        }
        for v in 1..=k {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Re-verify the defining relation
/// `sum_tau W(sigma tau^-1) N^{cyc(tau)} = [sigma = id]`.
/// For `k <= 5` every `sigma` in the group is checked; for larger `k`
/// one representative per class (the summand is a class function of
/// `sigma` once `W` is).
fn verify_orthogonality(table: &WeingartenTable) -> Result<()> {
    let k = table.k;
    let group = enumerate_sk(k);
    let sigmas: Vec<Permutation> = if k <= 5 {
        group.clone()
    } else {
        integer_partitions(k)
            .iter()
            .map(|t| class_representative(t))
            .collect()
    };
    let id = Permutation::identity(k);
    for sigma in &sigmas {
        let mut acc = BigRational::zero();
        for tau in &group {
            let w = table.value(&sigma.compose(&tau.inverse()));
            acc += w * n_pow(table.n, tau.cycle_count());
        }
        let expect = if *sigma == id {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        if acc != expect {
            return Err(Error::Numerical(format!(
                "orthogonality relation fails at sigma of type {:?}",
                sigma.cycle_type()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;
    use crate::combinatorics::class_size;

    fn r(v: i64) -> BigRational {
        rat_int(v)
    }

    #[test]
    fn order_one() {
        let t = weingarten_table(1, 5).unwrap();
        assert_eq!(t.value_of_type(&[1]), &(r(1) / r(5)));
    }

    #[test]
    fn order_two_matches_gram_inverse() {
        // [[N^2, N], [N, N^2]]^-1 applied to e_id
        for n in [2u64, 4, 9] {
            let t = weingarten_table(2, n).unwrap();
            let nn = r(n as i64);
            let want_id = r(1) / (&nn * &nn - r(1));
            let want_swap = -r(1) / (&nn * (&nn * &nn - r(1)));
            assert_eq!(t.value_of_type(&[1, 1]), &want_id);
            assert_eq!(t.value_of_type(&[2]), &want_swap);
        }
    }

    #[test]
    fn order_three_known_values() {
        let n = 7u64;
        let t = weingarten_table(3, n).unwrap();
        let nn = r(n as i64);
        let denom = &nn * (&nn * &nn - r(1)) * (&nn * &nn - r(4));
        assert_eq!(
            t.value_of_type(&[1, 1, 1]),
            &((&nn * &nn - r(2)) / &denom)
        );
        assert_eq!(t.value_of_type(&[2, 1]), &(-&nn / &denom));
        assert_eq!(t.value_of_type(&[3]), &(r(2) / &denom));
    }

    #[test]
    fn collapsed_route_agrees_with_full_route_at_order_five() {
        let n = 11u64;
        let full = full_gram_solve(5, n).unwrap();
        let collapsed = collapsed_gram_solve(5, n).unwrap();
        assert_eq!(full.len(), collapsed.len());
        for (key, v) in &full {
            assert_eq!(collapsed.get(key), Some(v), "type {key:?}");
        }
    }

    #[test]
    fn order_six_collapsed_solve() {
        let t = weingarten_table(6, 8).unwrap();
        assert_eq!(t.cycle_types().count(), 11); // partitions of 6
    }

    #[test]
    fn dimension_below_order_is_refused() {
        assert!(weingarten_table(3, 2).is_err());
        assert!(weingarten_table(8, 20).is_err());
    }

    #[test]
    fn class_sizes_weighted_sum_is_first_row_of_inverse_times_gram() {
        // sum over all sigma of W(sigma) N^{cyc(sigma)} = 1 (the identity
        // equation of the defining system)
        let k = 4;
        let n = 6u64;
        let t = weingarten_table(k, n).unwrap();
        let mut acc = BigRational::zero();
        for ty in integer_partitions(k) {
            let w = t.value_of_type(&ty);
            acc += w * n_pow(n, ty.len()) * r(class_size(&ty) as i64);
        }
        assert_eq!(acc, r(1));
    }
}
