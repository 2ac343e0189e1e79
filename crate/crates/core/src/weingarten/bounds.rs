//! Non-asymptotic bounds: the Catalan-product envelope on Weingarten
//! values, the compatible-tuple expectation sums with their growth
//! envelope, and the cycle-sum estimate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{catalan, double_factorial, factorial, falling_factorial, rat_to_f64};
use crate::combinatorics::{
    all_full_cycles, integer_partitions, partitions_coarser_than_cycles, Permutation,
};
use crate::error::{Error, Result};

use super::table::weingarten_table;

/// Exact check of `N > sqrt(6) k^{7/4}`, squared twice to clear both
/// radicals: `N^4 > 36 k^7`.
pub fn bound_precondition_holds(k: usize, n: u64) -> bool {
    let n4 = BigInt::from(n).pow(4);
    let k7 = BigInt::from(k as u64).pow(7) * BigInt::from(36);
    n4 > k7
}

/// One cycle type's bound comparison.
#[derive(Clone, Debug)]
pub struct BoundLine {
    pub cycle_type: Vec<usize>,
    pub weingarten: BigRational,
    /// `|W| N^{k + |sigma|} / prod Cat(|C| - 1)`, to compare against
    /// `(1 - 6 k^{7/2} / N^2)^{-1}`.
    pub catalan_ratio: BigRational,
    pub catalan_pass: bool,
    /// Same with the weaker `4^{|sigma|}` envelope.
    pub power_pass: bool,
}

/// Report for all cycle types of one `(k, N)` pair.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub k: usize,
    pub n: u64,
    pub lines: Vec<BoundLine>,
    pub all_pass: bool,
}

/// `x <= (1 - 6 k^{7/2}/N^2)^{-1}` decided exactly for rational `x > 0`:
/// equivalent to `N^4 (1 - 1/x)^2 <= 36 k^7` when `x >= 1`, always true
/// when `x <= 1`.
fn below_inverse_gap(x: &BigRational, k: usize, n: u64) -> bool {
    let one = BigRational::one();
    if x <= &one {
        return true;
    }
    // 1 - 6k^{7/2}/N^2 <= 1/x  <=>  1 - 1/x <= 6 k^{3} sqrt(k) / N^2
    let lhs = &one - &one / x; // in (0, 1)
    let n2 = BigRational::from(BigInt::from(n).pow(2));
    let scaled = lhs * n2; // compare with 6 k^3 sqrt(k)
    if scaled.is_negative() || scaled.is_zero() {
        return true;
    }
    // scaled <= 6 k^{7/2}  <=>  scaled^2 <= 36 k^7
    &scaled * &scaled <= BigRational::from(BigInt::from(k as u64).pow(7) * BigInt::from(36))
}

/// Check `|W_N(sigma)| <= (1 - 6k^{7/2}/N^2)^{-1} N^{-k-|sigma|}
/// prod_C Cat(|C|-1)` and the weaker `4^{|sigma|}` variant for every
/// cycle type of the symmetric group of order `k`, all comparisons
/// exact.
pub fn bound_check(k: usize, n: u64) -> Result<BoundReport> {
    if !bound_precondition_holds(k, n) {
        // smallest admissible N: the least integer with N^4 > 36 k^7
        let mut min_n = k as u64;
        while !bound_precondition_holds(k, min_n) {
            min_n += 1;
        }
        return Err(Error::InvalidParameter(format!(
            "bound requires N > sqrt(6) k^{{7/4}}; for k = {k} the smallest admissible N is {min_n}, got {n}"
        )));
    }
    let table = weingarten_table(k, n)?;
    let mut lines = Vec::new();
    let mut all_pass = true;
    for cycle_type in integer_partitions(k) {
        let w = table.value_of_type(&cycle_type).clone();
        let weight = k - cycle_type.len(); // |sigma| = k - #cycles
        let mut n_pow = BigRational::one();
        for _ in 0..k + weight {
            n_pow *= BigRational::from(BigInt::from(n));
        }
        let cat_prod: BigInt = cycle_type
            .iter()
            .map(|&c| catalan(c as u64 - 1))
            .product();
        let catalan_ratio = w.abs() * &n_pow / BigRational::from(cat_prod);
        let catalan_pass = below_inverse_gap(&catalan_ratio, k, n);
        let four_pow = BigRational::from(BigInt::from(4u64).pow(weight as u32));
        let power_ratio = w.abs() * &n_pow / four_pow;
        let power_pass = below_inverse_gap(&power_ratio, k, n);
        all_pass &= catalan_pass && power_pass;
        lines.push(BoundLine {
            cycle_type,
            weingarten: w,
            catalan_ratio,
            catalan_pass,
            power_pass,
        });
    }
    Ok(BoundReport {
        k,
        n,
        lines,
        all_pass,
    })
}

/// `E[(a - alpha)^m]` for `a ~ Ber(alpha)`: the unnormalized central
/// moment `alpha (1-alpha)^m + (1-alpha)(-alpha)^m`.
fn central_bernoulli_moment(m: usize, alpha: &BigRational) -> BigRational {
    let one = BigRational::one();
    let q = &one - alpha;
    let mut q_pow = BigRational::one();
    let mut neg_a_pow = BigRational::one();
    for _ in 0..m {
        q_pow *= &q;
        neg_a_pow *= -alpha.clone();
    }
    alpha * q_pow + q * neg_a_pow
}

/// The scaled compatible-tuple sum
///
/// `w(alpha)^k f_alpha(sigma) = sum over partitions rho of the cycles of
/// sigma of  N (N-1) ... (N-|rho|+1) * prod_blocks E[(a-alpha)^{size}]`
///
/// where each block's size is the total length of the cycles it merges.
/// Blocks of total size 1 vanish because the variables are centered.
/// This is the signed sum; the growth lemma takes its absolute value.
pub fn f_alpha_scaled(sigma: &Permutation, n: u64, alpha: &BigRational) -> Result<BigRational> {
    let k = sigma.len();
    if k > 8 {
        return Err(Error::InvalidParameter(
            "compatible-tuple sums supported for k <= 8".into(),
        ));
    }
    let n_rat = BigRational::from(BigInt::from(n));
    let mut total = BigRational::zero();
    for rho in partitions_coarser_than_cycles(sigma) {
        let mut term = falling_factorial(&n_rat, rho.len() as u64);
        if term.is_zero() {
            continue;
        }
        for block in rho.blocks() {
            term *= central_bernoulli_moment(block.len(), alpha);
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    Ok(total)
}

/// `f_alpha(sigma)` as a float: the scaled sum divided by `w(alpha)^k`.
pub fn f_alpha(sigma: &Permutation, n: u64, alpha: &BigRational) -> Result<f64> {
    let scaled = f_alpha_scaled(sigma, n, alpha)?;
    let w = (rat_to_f64(alpha) * (1.0 - rat_to_f64(alpha))).sqrt();
    Ok(rat_to_f64(&scaled) / w.powi(sigma.len() as i32))
}

/// Monitored growth envelope for `f_alpha`: the ratio of `|f_alpha|` to
///
/// `k e^{k^{3/4}} w^{-sum_{a>=3}(a-2)|cyc_a|} (|cyc_1|)!!
///  N^{|cyc_1|/2 + |cyc_{>=2}|}`,
///
/// reported per permutation; the stated estimate hides an absolute
/// constant, so callers assert a candidate ceiling rather than 1.
pub fn f_alpha_envelope_ratio(
    sigma: &Permutation,
    n: u64,
    alpha: &BigRational,
) -> Result<f64> {
    let k = sigma.len();
    let value = f_alpha(sigma, n, alpha)?.abs();
    let w = (rat_to_f64(alpha) * (1.0 - rat_to_f64(alpha))).sqrt();
    let fixed = sigma.cycles_of_len(1);
    let longer = sigma.cycle_count() - fixed;
    let mut w_exponent = 0i64;
    for a in 3..=k {
        w_exponent += (a as i64 - 2) * sigma.cycles_of_len(a) as i64;
    }
    let envelope = k as f64
        * (k as f64).powf(0.75).exp()
        * w.powi(-w_exponent as i32)
        * rat_to_f64(&BigRational::from(double_factorial(fixed as u64)))
        * (n as f64).powf(fixed as f64 / 2.0 + longer as f64);
    Ok(value / envelope)
}

/// Exact cycle-sum comparison: for `x > 2k^2`,
///
/// `sum over k-cycles rho of x^{-|sigma rho^-1|}
///  <= 2 (k-1)!/(k - m + 1)! k^m x^{-m+1}`  with `m = #cycles(sigma)`.
#[derive(Clone, Debug)]
pub struct CycleSumCheck {
    pub sum: BigRational,
    pub bound: BigRational,
    pub pass: bool,
}

pub fn cycle_sum_check(sigma: &Permutation, x: &BigRational) -> Result<CycleSumCheck> {
    let k = sigma.len();
    if k == 0 || k > 7 {
        return Err(Error::InvalidParameter(
            "cycle sums supported for 1 <= k <= 7".into(),
        ));
    }
    let two_k_sq = BigRational::from(BigInt::from(2 * (k as u64) * (k as u64)));
    if x <= &two_k_sq {
        return Err(Error::InvalidParameter(format!(
            "cycle-sum bound needs x > 2k^2 = {two_k_sq}, got {x}"
        )));
    }
    let x_inv = x.recip();
    let mut sum = BigRational::zero();
    for rho in all_full_cycles(k) {
        let dist = sigma.compose(&rho.inverse()).cayley_weight();
        let mut term = BigRational::one();
        for _ in 0..dist {
            term *= &x_inv;
        }
        sum += term;
    }
    let m = sigma.cycle_count();
    let mut bound = BigRational::from(BigInt::from(2) * factorial(k as u64 - 1))
        / BigRational::from(factorial((k - m + 1) as u64));
    for _ in 0..m {
        bound *= BigRational::from(BigInt::from(k as u64));
    }
    for _ in 0..m - 1 {
        bound *= &x_inv;
    }
    let pass = sum <= bound;
    Ok(CycleSumCheck { sum, bound, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};
    use crate::combinatorics::all_permutations;

    #[test]
    fn precondition_arithmetic() {
        // k = 5: sqrt(6) 5^{7/4} ~ 40.96, so 41 passes and 40 fails
        assert!(bound_precondition_holds(5, 41));
        assert!(!bound_precondition_holds(5, 40));
        // k = 1 needs N > sqrt(6) ~ 2.449
        assert!(bound_precondition_holds(1, 3));
        assert!(!bound_precondition_holds(1, 2));
    }

    #[test]
    fn order_one_bound() {
        // |1/N| <= (1 - 6/N^2)^{-1} / N with Cat(0) = 1
        let report = bound_check(1, 3).unwrap();
        assert!(report.all_pass);
    }

    #[test]
    fn order_three_bounds_pass() {
        let report = bound_check(3, 20).unwrap();
        assert_eq!(report.lines.len(), 3);
        assert!(report.all_pass);
    }

    #[test]
    fn order_five_bounds_pass_at_smallest_admissible_n() {
        let report = bound_check(5, 41).unwrap();
        assert_eq!(report.lines.len(), 7);
        assert!(report.all_pass);
        let double = bound_check(5, 82).unwrap();
        assert!(double.all_pass);
    }

    #[test]
    fn precondition_violation_names_minimum() {
        let err = bound_check(5, 30).unwrap_err().to_string();
        assert!(err.contains("41"), "{err}");
    }

    #[test]
    fn f_alpha_base_cases() {
        let alpha = rat(1, 4);
        // centered single variable sums to zero
        let id1 = Permutation::identity(1);
        assert_eq!(f_alpha_scaled(&id1, 10, &alpha).unwrap(), rat_int(0));
        // sigma = (12): N * E[(a-alpha)^2] = N w^2, so f = N
        let swap = Permutation::transposition(2, 1, 2);
        let w2 = &alpha * (BigRational::one() - &alpha);
        assert_eq!(
            f_alpha_scaled(&swap, 10, &alpha).unwrap(),
            rat_int(10) * &w2
        );
        assert!((f_alpha(&swap, 10, &alpha).unwrap() - 10.0).abs() < 1e-12);
        // sigma = id in S_2: only the merged block survives independence
        let id2 = Permutation::identity(2);
        assert_eq!(
            f_alpha_scaled(&id2, 10, &alpha).unwrap(),
            rat_int(10) * &w2
        );
    }

    #[test]
    fn f_alpha_brute_force_small() {
        // direct sum over compatible tuples for k = 3, N = 4
        let n = 4usize;
        let alpha = rat(1, 3);
        for sigma in all_permutations(3) {
            let cycles = sigma.cycles();
            let mut direct = BigRational::zero();
            // tuples constant on cycles = one value per cycle
            let m = cycles.len();
            let mut assignment = vec![0usize; m];
            loop {
                // expectation of prod over positions of (a_{v} - alpha)
                let mut mult: std::collections::HashMap<usize, usize> = Default::default();
                for (ci, cy) in cycles.iter().enumerate() {
                    *mult.entry(assignment[ci]).or_insert(0) += cy.len();
                }
                let mut term = BigRational::one();
                for (_, count) in mult {
                    term *= central_bernoulli_moment(count, &alpha);
                }
                direct += term;
                // advance assignment over [N]^m
                let mut pos = 0;
                loop {
                    if pos == m {
                        break;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < n {
                        break;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                }
                if pos == m {
                    break;
                }
            }
            let fast = f_alpha_scaled(&sigma, n as u64, &alpha).unwrap();
            assert_eq!(fast, direct, "sigma {:?}", sigma.cycle_type());
        }
    }

    #[test]
    fn envelope_ratio_is_modest() {
        // k = 4, N = 16 k^4 / w^2 rounded up, alpha = 1/2 -> w^2 = 1/4
        let k = 4;
        let n = (16.0 * (k as f64).powi(4) / 0.25).ceil() as u64;
        let alpha = rat(1, 2);
        for sigma in all_permutations(k) {
            let ratio = f_alpha_envelope_ratio(&sigma, n, &alpha).unwrap();
            assert!(ratio <= 10.0, "ratio {ratio} at {:?}", sigma.cycle_type());
        }
    }

    #[test]
    fn cycle_sum_identity_case() {
        // k = 3, sigma = id, x = 19: two 3-cycles at distance 2
        let sum_check = cycle_sum_check(&Permutation::identity(3), &rat_int(19)).unwrap();
        assert_eq!(sum_check.sum, rat(2, 361));
        assert!(sum_check.pass);
    }

    #[test]
    fn cycle_sum_full_cycle_case() {
        // sigma itself a 3-cycle: the rho = sigma term contributes x^0
        let sigma = Permutation::full_cycle(3);
        let check = cycle_sum_check(&sigma, &rat_int(19)).unwrap();
        assert!(check.sum >= BigRational::one());
        assert!(check.pass);
    }

    #[test]
    fn cycle_sum_all_of_s5() {
        let x = rat_int(51);
        for sigma in all_permutations(5) {
            let check = cycle_sum_check(&sigma, &x).unwrap();
            assert!(check.pass, "fails at {:?}", sigma.cycle_type());
        }
    }

    #[test]
    fn cycle_sum_rejects_small_x() {
        let err = cycle_sum_check(&Permutation::identity(3), &rat_int(18));
        assert!(err.is_err());
    }
}
