//! Joint moments of Haar-unitary entries and the expected normalized
//! mixed trace of the invariant model, both exactly via the Weingarten
//! table and as seeded Monte Carlo estimators.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::rat_to_f64;
use crate::combinatorics::{all_permutations, Permutation};
use crate::ensembles::{bernoulli_diagonal, child_seed, haar_unitary};
use crate::error::{Error, Result};

use super::bounds::f_alpha_scaled;
use super::table::{weingarten_table, WeingartenTable};

/// Index tuples of a joint moment
/// `E[U_{i1 j1} ... U_{ik jk} conj(U_{i'1 j'1}) ... conj(U_{i'k' j'k'})]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexPattern {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub i_prime: Vec<usize>,
    pub j_prime: Vec<usize>,
}

/// Result of a joint-moment evaluation; a length mismatch between the
/// plain and conjugated groups forces the value to zero by phase
/// invariance, recorded in the flag.
#[derive(Clone, Debug)]
pub struct JointMoment {
    pub value: BigRational,
    pub phase_mismatch: bool,
}

fn tuple_action_matches(sigma: &Permutation, tuple: &[usize], target: &[usize]) -> bool {
    // sigma acts by (sigma t)_a = t_{sigma(a)}
    (0..tuple.len()).all(|a| tuple[sigma.apply(a + 1) - 1] == target[a])
}

/// Exact joint moment by the double sum over constrained permutations of
/// Weingarten values.
pub fn joint_moment(pattern: &IndexPattern, n: u64) -> Result<JointMoment> {
    let k = pattern.i.len();
    if pattern.j.len() != k || pattern.i_prime.len() != pattern.j_prime.len() {
        return Err(Error::InvalidParameter(
            "index tuples must come in equal-length (i, j) and (i', j') pairs".into(),
        ));
    }
    if k != pattern.i_prime.len() {
        return Ok(JointMoment {
            value: BigRational::zero(),
            phase_mismatch: true,
        });
    }
    if k == 0 || k > 7 {
        return Err(Error::InvalidParameter(
            "joint moments supported for 1 <= k <= 7".into(),
        ));
    }
    for tuple in [&pattern.i, &pattern.j, &pattern.i_prime, &pattern.j_prime] {
        if tuple.iter().any(|&v| v < 1 || v as u64 > n) {
            return Err(Error::InvalidParameter(format!(
                "index out of range 1..{n}: {tuple:?}"
            )));
        }
    }
    let table = weingarten_table(k, n)?;
    let group = all_permutations(k);
    let sigmas: Vec<&Permutation> = group
        .iter()
        .filter(|s| tuple_action_matches(s, &pattern.i, &pattern.i_prime))
        .collect();
    let taus: Vec<&Permutation> = group
        .iter()
        .filter(|t| tuple_action_matches(t, &pattern.j, &pattern.j_prime))
        .collect();
    let mut value = BigRational::zero();
    for s in &sigmas {
        for t in &taus {
            value += table.value(&s.compose(&t.inverse()));
        }
    }
    Ok(JointMoment {
        value,
        phase_mismatch: false,
    })
}

/// Monte Carlo estimate of the same joint moment over seeded Haar draws;
/// returns `(mean, std_err)` of the real part (the exact value is real
/// for the patterns used in tests).
pub fn joint_moment_mc(
    pattern: &IndexPattern,
    n: usize,
    samples: usize,
    seed: u64,
) -> (f64, f64) {
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for s in 0..samples {
        let u = haar_unitary(n, child_seed(seed, s as u64));
        let mut term = Complex64::new(1.0, 0.0);
        for (&i, &j) in pattern.i.iter().zip(&pattern.j) {
            term *= u.data[(i - 1, j - 1)];
        }
        for (&i, &j) in pattern.i_prime.iter().zip(&pattern.j_prime) {
            term *= u.data[(i - 1, j - 1)].conj();
        }
        sum += term.re;
        sum_sq += term.re * term.re;
    }
    let mean = sum / samples as f64;
    let var = (sum_sq / samples as f64 - mean * mean).max(0.0);
    (mean, (var / samples as f64).sqrt())
}

/// Exact expectation of the normalized mixed trace of the invariant
/// model at order `k`.
#[derive(Clone, Debug)]
pub struct HatTraceExpectation {
    pub k: usize,
    pub n: u64,
    /// `(w(alpha) w(beta))^k * E Tr(A^ U D^ U*)^k`, always rational.
    pub scaled: BigRational,
    /// The normalized expectation itself; exact rational when `k` is
    /// even (the normalization is then rational), float otherwise.
    pub value_exact: Option<BigRational>,
    pub value: f64,
}

/// `E Tr(A^ U D^ U*)^k` for centered normalized Bernoulli diagonals
/// `A^ = (A - alpha I)/w(alpha)`, `D^ = (D - beta I)/w(beta)` conjugated
/// by a Haar unitary: the Weingarten sum
/// `sum_{s,t} W(rho s t^-1) f_alpha(s) f_beta(t)` over the full group
/// pair, with `rho` the forward `k`-cycle and the `f` factors the signed
/// compatible-tuple expectation sums.
pub fn hat_trace_expectation(
    k: usize,
    n: u64,
    alpha: &BigRational,
    beta: &BigRational,
) -> Result<HatTraceExpectation> {
    if k == 0 || k > 5 {
        return Err(Error::InvalidParameter(
            "exact invariant-trace expectation supported for 1 <= k <= 5".into(),
        ));
    }
    let table: WeingartenTable = weingarten_table(k, n)?;
    let group = all_permutations(k);
    let rho = Permutation::full_cycle(k);
    // scaled f values (w^k f) for every permutation, reused across the pair sum
    let f_a: Vec<BigRational> = group
        .iter()
        .map(|s| f_alpha_scaled(s, n, alpha))
        .collect::<Result<_>>()?;
    let f_b: Vec<BigRational> = group
        .iter()
        .map(|t| f_alpha_scaled(t, n, beta))
        .collect::<Result<_>>()?;
    let mut scaled = BigRational::zero();
    for (s, fa) in group.iter().zip(&f_a) {
        if fa.is_zero() {
            continue;
        }
        let rho_s = rho.compose(s);
        for (t, fb) in group.iter().zip(&f_b) {
            if fb.is_zero() {
                continue;
            }
            let w = table.value(&rho_s.compose(&t.inverse()));
            scaled += w * fa * fb;
        }
    }
    // normalization (w(alpha) w(beta))^{-k}
    let one = BigRational::one();
    let var_prod = alpha * (&one - alpha) * beta * (&one - beta);
    let mut norm = BigRational::one();
    for _ in 0..k / 2 {
        norm *= &var_prod;
    }
    let (value_exact, value) = if k % 2 == 0 {
        let exact = &scaled / &norm;
        let v = rat_to_f64(&exact);
        (Some(exact), v)
    } else {
        let denom = rat_to_f64(&norm) * rat_to_f64(&var_prod).sqrt();
        (None, rat_to_f64(&scaled) / denom)
    };
    Ok(HatTraceExpectation {
        k,
        n,
        scaled,
        value_exact,
        value,
    })
}

/// Monte Carlo cross-check of [`hat_trace_expectation`]: `(mean,
/// std_err)` of `Tr(A^ U D^ U*)^k` over seeded draws.
pub fn hat_trace_mc(
    k: usize,
    n: usize,
    alpha: f64,
    beta: f64,
    samples: usize,
    seed: u64,
) -> (f64, f64) {
    let w_a = (alpha * (1.0 - alpha)).sqrt();
    let w_b = (beta * (1.0 - beta)).sqrt();
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for s in 0..samples {
        let trial = child_seed(seed, s as u64);
        let u = haar_unitary(n, child_seed(trial, 0));
        let a = bernoulli_diagonal(n, alpha, child_seed(trial, 1));
        let d = bernoulli_diagonal(n, beta, child_seed(trial, 2));
        let a_hat: Vec<f64> = a
            .iter()
            .map(|&x| ((x as u8 as f64) - alpha) / w_a)
            .collect();
        let d_hat: Vec<f64> = d
            .iter()
            .map(|&x| ((x as u8 as f64) - beta) / w_b)
            .collect();
        // M = A^ U D^ U*
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for l in 0..n {
                    acc += u.data[(r, l)] * d_hat[l] * u.data[(c, l)].conj();
                }
                m[(r, c)] = acc * a_hat[r];
            }
        }
        let mut power = m.clone();
        for _ in 1..k {
            power *= &m;
        }
        let tr: Complex64 = power.diagonal().iter().sum();
        sum += tr.re;
        sum_sq += tr.re * tr.re;
    }
    let mean = sum / samples as f64;
    let var = (sum_sq / samples as f64 - mean * mean).max(0.0);
    (mean, (var / samples as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn single_entry_second_moment() {
        // E |U_11|^2 = 1/N: the only constrained pair is the identity
        let p = IndexPattern {
            i: vec![1],
            j: vec![1],
            i_prime: vec![1],
            j_prime: vec![1],
        };
        let m = joint_moment(&p, 6).unwrap();
        assert_eq!(m.value, rat(1, 6));
        assert!(!m.phase_mismatch);
    }

    #[test]
    fn phase_mismatch_is_zero() {
        let p = IndexPattern {
            i: vec![1],
            j: vec![1],
            i_prime: vec![],
            j_prime: vec![],
        };
        let m = joint_moment(&p, 4).unwrap();
        assert!(m.phase_mismatch);
        assert_eq!(m.value, rat(0, 1));
    }

    #[test]
    fn distinct_rows_and_columns_pin_the_identity() {
        // i = i' = (1,2), j = j' = (1,2) at N = 4: only sigma = tau = id
        // satisfy the constraints, so the moment is W([1,1]) = 1/15
        let p = IndexPattern {
            i: vec![1, 2],
            j: vec![1, 2],
            i_prime: vec![1, 2],
            j_prime: vec![1, 2],
        };
        let m = joint_moment(&p, 4).unwrap();
        assert_eq!(m.value, rat(1, 15));
    }

    #[test]
    fn fourth_absolute_moment() {
        // E |U_11|^4 = 2 W([1,1]) + 2 W([2]) = 2/(N(N+1))
        let p = IndexPattern {
            i: vec![1, 1],
            j: vec![1, 1],
            i_prime: vec![1, 1],
            j_prime: vec![1, 1],
        };
        for n in [2u64, 4, 7] {
            let m = joint_moment(&p, n).unwrap();
            assert_eq!(m.value, rat(2, (n * (n + 1)) as i64));
        }
    }

    #[test]
    fn monte_carlo_agrees_on_fourth_moment() {
        let p = IndexPattern {
            i: vec![1, 1],
            j: vec![1, 1],
            i_prime: vec![1, 1],
            j_prime: vec![1, 1],
        };
        let n = 4;
        let exact = rat_to_f64(&joint_moment(&p, n as u64).unwrap().value);
        let (mean, std_err) = joint_moment_mc(&p, n, 20_000, 71);
        assert!(
            (mean - exact).abs() < 4.0 * std_err,
            "MC {mean} vs exact {exact} (se {std_err})"
        );
    }

    #[test]
    fn hat_trace_first_order_vanishes() {
        let v = hat_trace_expectation(1, 8, &rat(1, 2), &rat(1, 2)).unwrap();
        assert_eq!(v.scaled, rat(0, 1));
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn hat_trace_even_order_is_exact() {
        let v = hat_trace_expectation(2, 8, &rat(1, 2), &rat(1, 2)).unwrap();
        assert!(v.value_exact.is_some());
        assert!(v.value.is_finite());
    }

    #[test]
    fn hat_trace_matches_monte_carlo() {
        let exact = hat_trace_expectation(2, 8, &rat(1, 2), &rat(1, 2)).unwrap();
        let (mean, std_err) = hat_trace_mc(2, 8, 0.5, 0.5, 4_000, 5);
        assert!(
            (mean - exact.value).abs() < 5.0 * std_err.max(1e-3),
            "MC {mean} vs exact {} (se {std_err})",
            exact.value
        );
    }
}
