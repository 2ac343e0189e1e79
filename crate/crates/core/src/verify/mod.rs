//! Structured pass/fail verification suites over the exact identities
//! and the seeded statistical spot checks. The CLI `verify` subcommand
//! and the acceptance tests both run these.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, rat_int, rat_to_f64};
use crate::combinatorics::{
    self, all_permutations, km_triangle_pair, lucas_array_even, lucas_array_odd, mat_identity,
    mat_mul, riordan_multiply, signed_binomial_array_even, signed_binomial_array_odd, stirling,
    stirling_enumerated, stirling_table, StirlingKind,
};
use crate::ensembles::{child_seed, invariant_projection};
use crate::error::Result;
use crate::genfunc;
use crate::manova::{self, ManovaParams};
use crate::necklace::{self, RatMatrix};
use crate::weingarten;

/// One verified claim.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    /// Stable identifier, usable in scripts.
    pub id: String,
    /// What the check claims, in words.
    pub claim: String,
    pub passed: bool,
    /// Measured numbers or the first counterexample.
    pub detail: String,
}

impl Check {
    fn new(id: &str, claim: &str, passed: bool, detail: String) -> Self {
        Check {
            id: id.to_string(),
            claim: claim.to_string(),
            passed,
            detail,
        }
    }
}

/// All checks of one module suite.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport {
            suite: suite.to_string(),
            checks,
            passed,
        }
    }
}

/// Names accepted by [`run_suite`].
pub const SUITE_NAMES: &[&str] = &[
    "combinatorics",
    "genfunc",
    "manova",
    "necklace",
    "weingarten",
    "all",
];

/// Run one named suite, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Result<Vec<SuiteReport>> {
    match name {
        "combinatorics" => Ok(vec![combinatorics_suite()?]),
        "genfunc" => Ok(vec![genfunc_suite()?]),
        "manova" => Ok(vec![manova_suite()?]),
        "necklace" => Ok(vec![necklace_suite()?]),
        "weingarten" => Ok(vec![weingarten_suite()?]),
        "all" => Ok(vec![
            combinatorics_suite()?,
            genfunc_suite()?,
            manova_suite()?,
            necklace_suite()?,
            weingarten_suite()?,
        ]),
        other => Err(crate::Error::InvalidParameter(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?}"
        ))),
    }
}

pub fn combinatorics_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();

    // alternating q-sums against the Lucas-triangle closed form
    {
        let alphas = [rat(1, 7), rat(1, 3), rat(2, 5)];
        let mut failures = Vec::new();
        for k in 1..=10usize {
            for a in 0..=k {
                for alpha in &alphas {
                    let direct = combinatorics::q_sum_direct(k, a, alpha, &BigRational::one())?;
                    let closed = combinatorics::q_sum_km_closed_form(k, a, alpha)?;
                    if direct != closed {
                        failures.push(format!("k={k} a={a} alpha={alpha}"));
                    }
                }
            }
        }
        checks.push(Check::new(
            "qsum-closed-form",
            "alternating q-sum at x=1 equals its Lucas-triangle closed form, k <= 10, three rational alphas",
            failures.is_empty(),
            if failures.is_empty() {
                "exact equality on the full grid".into()
            } else {
                format!("first failures: {failures:?}")
            },
        ));
    }

    // parity-interleaved triangle pair is an exact inverse pair at size 16
    {
        let (x, y) = km_triangle_pair(16)?;
        let ok = mat_mul(&x, &y) == mat_identity(16) && mat_mul(&y, &x) == mat_identity(16);
        checks.push(Check::new(
            "triangle-pair-inverse",
            "interleaved Lucas / signed-binomial triangles multiply to the identity, size 16",
            ok,
            "X Y = Y X = I over exact rationals".into(),
        ));
    }

    // Riordan parameter composition: even and odd array pairs invert
    {
        let even = riordan_multiply(&lucas_array_even(16)?, &signed_binomial_array_even(16)?)?;
        let odd = riordan_multiply(&lucas_array_odd(16)?, &signed_binomial_array_odd(16)?)?;
        let ok = even.entries() == mat_identity(16) && odd.entries() == mat_identity(16);
        checks.push(Check::new(
            "riordan-inverse-pairs",
            "even and odd Riordan array pairs multiply to the identity through size 16",
            ok,
            "parameter composition and matrix product agree".into(),
        ));
    }

    // Stirling recurrences vs enumeration on the overlap
    {
        let mut failures = 0usize;
        for n in 0..=7usize {
            for k in 0..=n {
                for kind in [StirlingKind::First, StirlingKind::Second] {
                    for r in 0..=1u8 {
                        if stirling(kind, r, n, k)? != stirling_enumerated(kind, r, n, k)? {
                            failures += 1;
                        }
                    }
                }
            }
        }
        checks.push(Check::new(
            "stirling-recurrence-vs-enumeration",
            "Stirling recurrences match brute-force counts for n <= 7, both kinds, ordinary and associated",
            failures == 0,
            format!("{failures} mismatches"),
        ));
    }

    // x^n = sum_k S(n,k) x-falling-k as exact polynomial identity
    {
        let mut ok = true;
        let points = [rat(7, 2), rat(-3, 5), rat_int(11)];
        for n in 1..=10usize {
            let table = stirling_table(StirlingKind::Second, 0, n);
            for x in &points {
                let mut lhs = BigRational::one();
                for _ in 0..n {
                    lhs *= x;
                }
                let mut rhs = BigRational::from_integer(0.into());
                for k in 1..=n {
                    rhs += BigRational::from(table[n][k].clone())
                        * crate::algebra::falling_factorial(x, k as u64);
                }
                ok &= lhs == rhs;
            }
        }
        checks.push(Check::new(
            "stirling-falling-factorial",
            "x^n equals the Stirling-weighted falling factorial expansion, n <= 10",
            ok,
            "exact at three rational points per degree".into(),
        ));
    }

    // partition power-sum bound: sum <= e^{l^2/x} x^l for x >= 2l
    {
        let mut ok = true;
        let mut worst = 0.0f64;
        for l in 1..=12usize {
            for factor in [2u64, 4, 8] {
                let x = rat_int((factor * l as u64) as i64);
                let lhs = combinatorics::partition_power_sum(l, &x, 1)?;
                let bound =
                    ((l * l) as f64 / rat_to_f64(&x)).exp() * rat_to_f64(&x).powi(l as i32);
                let ratio = rat_to_f64(&lhs) / bound;
                worst = worst.max(ratio);
                ok &= ratio <= 1.0 + 1e-12;
            }
        }
        checks.push(Check::new(
            "partition-power-sum-bound",
            "partition power sums stay under the e^{l^2/x} x^l envelope for x in {2l, 4l, 8l}, l <= 12",
            ok,
            format!("worst ratio {worst:.6}"),
        ));
    }

    // no-fixed-point / no-singleton power sums under the
    // e^{l^{3/4}} l!! x^{l/2} envelope at x = ceil(16 l^{3/2})
    {
        let mut ok = true;
        let mut worst = 0.0f64;
        for l in 1..=10usize {
            let x_int = (16.0 * (l as f64).powf(1.5)).ceil() as i64;
            let x = rat_int(x_int);
            let envelope = (l as f64).powf(0.75).exp()
                * rat_to_f64(&BigRational::from(crate::algebra::double_factorial(l as u64)))
                * (x_int as f64).powf(l as f64 / 2.0)
                * (1.0 - 1e-9);
            for lhs in [
                combinatorics::permutation_cycle_sum(l, &x, 2)?,
                combinatorics::partition_power_sum(l, &x, 2)?,
            ] {
                let ratio = rat_to_f64(&lhs) / envelope;
                worst = worst.max(ratio);
                ok &= ratio <= 1.0;
            }
        }
        checks.push(Check::new(
            "associated-power-sum-bounds",
            "fixed-point-free cycle and singleton-free block power sums stay under the e^{l^{3/4}} l!! x^{l/2} envelope, l <= 10",
            ok,
            format!("worst ratio {worst:.6}"),
        ));
    }

    Ok(SuiteReport::new("combinatorics", checks))
}

pub fn genfunc_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();

    // cyclic-runs generating function vs enumeration
    {
        let points = [
            (rat(1, 2), rat(2, 3)),
            (rat(3, 5), rat(-1, 2)),
            (rat(-2, 7), rat(5, 3)),
            (rat(7, 4), rat(1, 6)),
            (rat(1, 9), rat(-4, 5)),
        ];
        let mut ok = true;
        for (y, z) in &points {
            ok &= genfunc::runs_enumeration_gf(12, y, z).is_ok();
        }
        checks.push(Check::new(
            "runs-gf-vs-enumeration",
            "cyclic-runs generating function matches subset enumeration through n = 12 at five rational points",
            ok,
            "equality asserted inside the expansion routine".into(),
        ));
    }

    // symbolic q generating function vs enumerated polynomials
    {
        let series = genfunc::q_gf_expand(8)?;
        let mut failures = Vec::new();
        for k in 1..=8usize {
            for j in 0..=k {
                for a in 0..=j {
                    if !genfunc::q_gf_coefficient_matches(&series, k, j, a)? {
                        failures.push(format!("k={k} j={j} a={a}"));
                    }
                }
            }
        }
        checks.push(Check::new(
            "q-gf-vs-enumeration",
            "four-variable q generating function reproduces every enumerated polynomial through order 8",
            failures.is_empty(),
            if failures.is_empty() {
                "exact coefficient equality".into()
            } else {
                format!("mismatches: {failures:?}")
            },
        ));
    }

    // s_k series: closed form vs term-by-term construction
    {
        let pairs = [
            ManovaParams::new(rat(1, 4), rat(1, 2))?,
            ManovaParams::new(rat(1, 5), rat(2, 5))?,
            ManovaParams::new(rat(1, 3), rat(1, 2))?,
        ];
        let mut ok = true;
        for p in &pairs {
            ok &= genfunc::s_series_closed(p, 10)? == genfunc::s_series_from_polys(p, 10)?;
        }
        checks.push(Check::new(
            "s-series-closed-form",
            "recursion polynomial series equals its closed rational form through order 10 at three parameter pairs",
            ok,
            "exact series equality".into(),
        ));
    }

    // the orthogonal-polynomial series identity
    {
        let mut ok = true;
        let mut detail = String::from("exact through order 8");
        for p in [
            ManovaParams::new(rat(1, 4), rat(1, 2))?,
            ManovaParams::new(rat(1, 5), rat(2, 5))?,
        ] {
            let report = genfunc::verify_orth_identity(&p, 8)?;
            if !report.holds {
                ok = false;
                detail = format!("first mismatch: {:?}", report.first_mismatch);
            }
        }
        checks.push(Check::new(
            "orthogonal-series-identity",
            "recursion series S(x,t) factors through the orthogonal-polynomial generating function, order 8, two parameter pairs",
            ok,
            detail,
        ));
    }

    // Chebyshev recurrence vs generating function
    {
        let vars = crate::algebra::VarSet::new(&["t", "x"]);
        let t = crate::algebra::MultiPoly::var(&vars, "t");
        let x = crate::algebra::MultiPoly::var(&vars, "x");
        let one = crate::algebra::MultiPoly::one(&vars);
        let den = one.sub(&t.mul(&x).scale(&rat_int(2))).add(&t.pow(2));
        let series = crate::algebra::expand_rational(&one, &den, "t", 12)?;
        let mut ok = true;
        for n in 0..=12usize {
            let u = genfunc::chebyshev_u(n);
            let mut expect = crate::algebra::MultiPoly::zero(&vars);
            for (d, c) in u.coeffs().iter().enumerate() {
                expect = expect.add(&x.pow(d as u32).scale(&BigRational::from(c.clone())));
            }
            ok &= series.coeff(n) == &expect;
        }
        checks.push(Check::new(
            "chebyshev-recurrence-vs-gf",
            "Chebyshev recurrence matches the generating-function expansion through degree 12",
            ok,
            "exact".into(),
        ));
    }

    // E[f_n] and E[s_k] vanish under the conditional law (quadrature)
    {
        let p = ManovaParams::new(rat(1, 4), rat(1, 2))?;
        let law = manova::ManovaLaw::new(&p);
        let ac_mass = 1.0 - law.atom0 - law.atom1;
        let seq = genfunc::de_orth_polys(&p, 6)?;
        let mut worst = 0.0f64;
        for f in seq.polys.iter().skip(1) {
            let v = manova::quadrature::integrate_against_density(&law, &|x| f.eval_f64(x), 1e-11)?
                / ac_mass;
            worst = worst.max(v.abs());
        }
        for k in 1..=6usize {
            let s = genfunc::s_poly(k, &p)?;
            let v = manova::quadrature::integrate_against_density(&law, &|x| s.eval_f64(x), 1e-11)?
                / ac_mass;
            worst = worst.max(v.abs());
        }
        checks.push(Check::new(
            "orthogonality-by-quadrature",
            "orthogonal polynomials f_n and recursion polynomials s_k integrate to zero against the conditional law",
            worst < 1e-8,
            format!("max |E[.]| = {worst:.3e}"),
        ));
    }

    Ok(SuiteReport::new("genfunc", checks))
}

pub fn manova_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();

    // exact recursion vs quadrature across the parameter grid
    {
        let alphas = [rat(1, 10), rat(1, 4), rat(1, 2), rat(7, 10)];
        let betas = [rat(1, 4), rat(1, 2), rat(3, 4)];
        let mut worst = 0.0f64;
        for a in &alphas {
            for b in &betas {
                let p = ManovaParams::new(a.clone(), b.clone())?;
                worst = worst.max(manova::moment_discrepancy(&p, 12)?);
            }
        }
        checks.push(Check::new(
            "moments-exact-vs-quadrature",
            "recursion moments match the quadrature oracle to 1e-8 through order 12 on a 12-point parameter grid",
            worst < 1e-8,
            format!("max |difference| = {worst:.3e}"),
        ));
    }

    // spot values m1 and m2
    {
        let mut ok = true;
        for (a, b) in [
            (rat(3, 10), rat(1, 2)),
            (rat(1, 2), rat(1, 2)),
            (rat(2, 3), rat(1, 5)),
        ] {
            let p = ManovaParams::new(a, b)?;
            let m = manova::moments_exact(&p, 2)?;
            let ab = p.alpha() * p.beta();
            ok &= m.m(1) == &ab;
            ok &= m.m(2) == &(&ab * (p.alpha() + p.beta() - &ab));
        }
        checks.push(Check::new(
            "moment-spot-values",
            "m1 = alpha beta and m2 = alpha beta (alpha + beta - alpha beta) exactly",
            ok,
            "three parameter pairs".into(),
        ));
    }

    // swap symmetry of the exact moments
    {
        let pairs = [
            (rat(1, 3), rat(2, 5)),
            (rat(3, 7), rat(1, 2)),
            (rat(2, 3), rat(3, 4)),
            (rat(1, 7), rat(5, 6)),
            (rat(4, 9), rat(2, 9)),
        ];
        let mut ok = true;
        for (a, b) in pairs {
            let p = ManovaParams::new(a, b)?;
            ok &= manova::moments_exact(&p, 10)?.values
                == manova::moments_exact(&p.swapped(), 10)?.values;
        }
        checks.push(Check::new(
            "moment-swap-symmetry",
            "moments are invariant under swapping the two parameters, five rational pairs",
            ok,
            "exact equality through order 10".into(),
        ));
    }

    // moment monotonicity inside (0,1)
    {
        let mut ok = true;
        for (a, b) in [
            (rat(3, 10), rat(1, 2)),
            (rat(1, 4), rat(3, 4)),
            (rat(7, 10), rat(7, 10)),
        ] {
            let p = ManovaParams::new(a, b)?;
            let m = manova::moments_exact(&p, 12)?;
            let mut prev = BigRational::one();
            for v in &m.values {
                ok &= v > &BigRational::from_integer(0.into()) && v < &prev;
                prev = v.clone();
            }
        }
        checks.push(Check::new(
            "moment-monotonicity",
            "moments strictly decrease and stay inside (0,1)",
            ok,
            "three parameter pairs through order 12".into(),
        ));
    }

    // mass normalization and edge-neighborhood mass
    {
        let mut ok = true;
        let mut worst = 0.0f64;
        for (a, b) in [(0.3, 0.5), (0.25, 0.75), (0.6, 0.7)] {
            let p = ManovaParams::from_f64(a, b)?;
            let law = manova::ManovaLaw::new(&p);
            let mass = manova::quadrature::integrate_against_density(&law, &|_| 1.0, 1e-11)?;
            let total = law.atom0 + law.atom1 + mass;
            worst = worst.max((total - 1.0).abs());
            if a + b <= 1.0 {
                let near_edge =
                    manova::quadrature::mass_between(&law, law.edge - 0.05, law.edge, 1e-10)?;
                ok &= near_edge > 0.0;
            }
        }
        checks.push(Check::new(
            "law-normalization-and-edge",
            "atoms plus continuous mass normalize to 1; the 0.05-neighborhood of the edge carries positive mass",
            ok && worst < 1e-9,
            format!("max |total - 1| = {worst:.3e}"),
        ));
    }

    // the folding identity in conditional moments
    {
        let mut ok = true;
        let mut worst = 0.0f64;
        for alpha in [rat(1, 4), rat(3, 10)] {
            let report = manova::folding_check(&alpha, 8)?;
            worst = worst.max(report.max_abs_diff);
            ok &= report.max_abs_diff < 1e-7;
        }
        checks.push(Check::new(
            "folding-identity",
            "conditional moments of the folded law agree with the square-parameter law to 1e-7 through order 8",
            ok,
            format!("max |difference| = {worst:.3e}"),
        ));
    }

    Ok(SuiteReport::new("manova", checks))
}

pub fn necklace_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();

    // exact rational identity on hand-built projection pairs
    {
        let a = RatMatrix::from_i64(&[&[1, 0], &[0, 0]])?;
        let b = RatMatrix::projection_onto(&[rat(1, 1), rat(1, 1)])?;
        let hand_pairs: Vec<(RatMatrix, RatMatrix)> = vec![
            (a.clone(), b.clone()),
            (b, a),
            (
                RatMatrix::projection_onto(&[rat(1, 1), rat(2, 1), rat(2, 1)])?,
                RatMatrix::projection_onto(&[rat(0, 1), rat(1, 1), rat(-1, 1)])?,
            ),
            (
                RatMatrix::projection_onto(&[rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7)])?,
                RatMatrix::projection_onto(&[rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1)])?,
            ),
            (
                RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])?,
                RatMatrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]])?,
            ),
        ];
        let params = ManovaParams::new(rat(1, 3), rat(1, 4))?;
        let mut ok = true;
        for (pa, pb) in &hand_pairs {
            let data = necklace::mixed_traces_exact(pa, pb, &params, 8)?;
            let predicted = necklace::necklace_predict(&data, 8)?;
            let aba = pa.mul(pb).mul(pa);
            let mut power = aba.clone();
            for k in 1..=8usize {
                ok &= predicted[k - 1] == power.trace();
                power = power.mul(&aba);
            }
            // consistency with the moment/error split
            ok &= necklace::moment_prediction(&data, 8)? == predicted;
        }
        checks.push(Check::new(
            "necklace-exact-rational",
            "trace reconstruction is exactly correct on five hand-built rational projection pairs, orders 1..8",
            ok,
            "structural equality of rationals".into(),
        ));
    }

    // float path against the eigenvalue oracle on random ensembles
    {
        let mut worst = 0.0f64;
        let mut count = 0usize;
        'outer: for (i, &n) in [8usize, 16, 64].iter().enumerate() {
            for t in 0..17usize {
                if count >= 50 {
                    break 'outer;
                }
                count += 1;
                let seed = child_seed(20_240_601, (i * 17 + t) as u64);
                let pa = invariant_projection(n, 0.4, child_seed(seed, 1));
                let pb = invariant_projection(n, 0.6, child_seed(seed, 2));
                let params = ManovaParams::from_f64(
                    (pa.trace_re() / n as f64).clamp(0.05, 0.95),
                    (pb.trace_re() / n as f64).clamp(0.05, 0.95),
                )?;
                let data = necklace::mixed_traces(&pa, &pb, &params, 8)?;
                let predicted = necklace::necklace_predict(&data, 8)?;
                let product = crate::ensembles::hermitize(&(&pa.data * &pb.data * &pa.data));
                let eig = product.symmetric_eigen();
                for k in 1..=8usize {
                    let direct: f64 = eig
                        .eigenvalues
                        .iter()
                        .map(|l| l.max(0.0).powi(k as i32))
                        .sum();
                    worst = worst.max((predicted[k - 1] - direct).abs() / n as f64);
                }
            }
        }
        checks.push(Check::new(
            "necklace-float-vs-eigensolve",
            "trace reconstruction matches the dense eigensolver within 1e-8 N on 50 random projection pairs, N in {8,16,64}, orders 1..8",
            worst < 1e-8,
            format!("worst |difference|/N = {worst:.3e} over {count} pairs"),
        ));
    }

    // beta = 1/2 closed form equals the recursion, exactly, to order 12
    {
        let params = ManovaParams::new(rat(1, 3), rat(1, 2))?;
        let mut ok = true;
        for dim in [8usize, 16] {
            // rank-N/2 diagonal projection against a rational rank-1 projection
            let mut rows = vec![vec![rat_int(0); dim]; dim];
            for (i, row) in rows.iter_mut().enumerate() {
                row[i] = rat_int((i % 2) as i64);
            }
            let b = RatMatrix::new(rows)?;
            let a = RatMatrix::projection_onto(
                &(0..dim).map(|i| rat(1 + (i as i64 % 3), 1)).collect::<Vec<_>>(),
            )?;
            let data = necklace::mixed_traces_exact(&a, &b, &params, 12)?;
            let errors = necklace::error_terms(&data, 12)?;
            let km = necklace::km_deltas(&data, 12)?;
            ok &= errors.delta_tilde == km.delta_tilde;
        }
        checks.push(Check::new(
            "km-closed-form-vs-recursion",
            "binomial closed form equals the error recursion exactly through order 12 at beta = 1/2",
            ok,
            "exact rational equality at N = 8 and 16".into(),
        ));
    }

    // the triangle inverse pair backing the closed form
    {
        let (x, y) = km_triangle_pair(16)?;
        let ok = mat_mul(&x, &y) == mat_identity(16);
        checks.push(Check::new(
            "km-triangle-inverse",
            "16 x 16 interleaved triangle inverse pair multiplies to the identity",
            ok,
            "exact".into(),
        ));
    }

    Ok(SuiteReport::new("necklace", checks))
}

pub fn weingarten_suite() -> Result<SuiteReport> {
    let mut checks = Vec::new();

    // order-2 table against the 2x2 Gram inverse
    {
        let n = 4u64;
        let t = weingarten::weingarten_table(2, n)?;
        let nn = rat_int(n as i64);
        let ok = t.value_of_type(&[1, 1]) == &(BigRational::one() / (&nn * &nn - rat_int(1)))
            && t.value_of_type(&[2])
                == &(-BigRational::one() / (&nn * (&nn * &nn - rat_int(1))));
        checks.push(Check::new(
            "weingarten-order-2",
            "order-2 table equals the explicit 2x2 Gram inverse",
            ok,
            "exact".into(),
        ));
    }

    // class-function property and orthogonality at several (k, N)
    {
        let mut ok = true;
        for k in 1..=6usize {
            for n in [k as u64, k as u64 + 3, 2 * k as u64] {
                ok &= weingarten::weingarten_table(k, n).is_ok();
            }
        }
        checks.push(Check::new(
            "weingarten-class-function",
            "Gram inversion yields a class function and satisfies the defining orthogonality relation, k <= 6",
            ok,
            "asserted inside the table builder".into(),
        ));
    }

    // E |U_11|^4 Monte Carlo vs 2/(N(N+1))
    {
        let n = 4usize;
        let samples = 200_000usize;
        let pattern = weingarten::IndexPattern {
            i: vec![1, 1],
            j: vec![1, 1],
            i_prime: vec![1, 1],
            j_prime: vec![1, 1],
        };
        let exact = rat_to_f64(&weingarten::joint_moment(&pattern, n as u64)?.value);
        let (mean, std_err) = weingarten::joint_moment_mc(&pattern, n, samples, 424_242);
        let ok = (mean - exact).abs() <= 3.0 * std_err;
        checks.push(Check::new(
            "u11-fourth-moment-mc",
            "E|U_11|^4 Monte Carlo at N = 4 sits within 3 standard errors of 2/(N(N+1)) over 2e5 samples",
            ok,
            format!("exact {exact:.6e}, MC {mean:.6e} +- {std_err:.2e}"),
        ));
    }

    // random index patterns vs Monte Carlo
    {
        let cases: [(usize, usize); 3] = [(2, 4), (3, 5), (3, 8)];
        let mut ok = true;
        let mut detail = String::new();
        for (k, n) in cases {
            for c in 0..3usize {
                let seed = child_seed(777, (k * 100 + n * 10 + c) as u64);
                let mut counter = 0u64;
                let mut idx = |seed: u64| {
                    counter += 1;
                    (child_seed(seed, counter) % n as u64) as usize + 1
                };
                let i: Vec<usize> = (0..k).map(|_| idx(seed)).collect();
                let j: Vec<usize> = (0..k).map(|_| idx(seed)).collect();
                let pattern = weingarten::IndexPattern {
                    i_prime: i.clone(),
                    j_prime: j.clone(),
                    i,
                    j,
                };
                let exact = rat_to_f64(&weingarten::joint_moment(&pattern, n as u64)?.value);
                let (mean, std_err) = weingarten::joint_moment_mc(&pattern, n, 200_000, seed);
                if (mean - exact).abs() > 5.0 * std_err.max(1e-7) {
                    ok = false;
                    detail = format!(
                        "k={k} N={n} case={c}: exact {exact:.3e} MC {mean:.3e} se {std_err:.3e}"
                    );
                }
            }
        }
        checks.push(Check::new(
            "joint-moments-mc",
            "random joint moments agree with Monte Carlo within 5 standard errors at (k,N) in {(2,4),(3,5),(3,8)}",
            ok,
            if detail.is_empty() {
                "nine patterns checked".into()
            } else {
                detail
            },
        ));
    }

    // Catalan-product bound, exact, k <= 5
    {
        let mut ok = true;
        for k in 1..=5usize {
            let mut min_n = k as u64;
            while !weingarten::bound_precondition_holds(k, min_n) {
                min_n += 1;
            }
            ok &= weingarten::bound_check(k, min_n)?.all_pass;
            ok &= weingarten::bound_check(k, 2 * min_n)?.all_pass;
        }
        checks.push(Check::new(
            "weingarten-bound",
            "Catalan-product and 4^|sigma| envelopes hold exactly for every cycle type, k <= 5, at the smallest admissible N and twice it",
            ok,
            "exact rational comparisons".into(),
        ));
    }

    // compatible-tuple sum growth envelope
    {
        let mut ok = true;
        let mut worst = 0.0f64;
        for k in 1..=6usize {
            for alpha in [rat(1, 2), rat(1, 4)] {
                let w2 = rat_to_f64(&alpha) * (1.0 - rat_to_f64(&alpha));
                let n = ((16 * k.pow(4)) as f64 / w2).ceil() as u64;
                for sigma in all_permutations(k) {
                    let ratio = weingarten::f_alpha_envelope_ratio(&sigma, n, &alpha)?;
                    worst = worst.max(ratio);
                    ok &= ratio <= 10.0;
                }
            }
        }
        checks.push(Check::new(
            "tuple-sum-envelope",
            "compatible-tuple sums stay within 10x the stated growth envelope for k <= 6, alpha in {1/2, 1/4}",
            ok,
            format!("worst ratio {worst:.4}"),
        ));
    }

    // cycle-sum bound by brute force over S_5
    {
        let x = rat_int(51);
        let mut ok = true;
        for sigma in all_permutations(5) {
            ok &= weingarten::cycle_sum_check(&sigma, &x)?.pass;
        }
        checks.push(Check::new(
            "cycle-sum-bound",
            "cycle-sum estimate holds for every permutation of S_5 at x = 51",
            ok,
            "exact".into(),
        ));
    }

    // invariant-model trace expectation vs Monte Carlo, plus growth report
    {
        let exact = weingarten::hat_trace_expectation(2, 8, &rat(1, 2), &rat(1, 2))?;
        let (mean, std_err) = weingarten::hat_trace_mc(2, 8, 0.5, 0.5, 20_000, 31);
        let ok = (mean - exact.value).abs() <= 5.0 * std_err.max(1e-3);
        let mut growth = String::new();
        for k in 1..=5usize {
            let v = weingarten::hat_trace_expectation(k, 32, &rat(1, 2), &rat(1, 2))?;
            let envelope = 10.0 * (4.0 * (k as f64).powf(0.75)).exp();
            growth.push_str(&format!(
                "k={k}: |E| = {:.3e} (envelope {:.3e}); ",
                v.value.abs(),
                envelope
            ));
        }
        checks.push(Check::new(
            "invariant-trace-expectation",
            "exact invariant-model trace expectation matches Monte Carlo at k = 2, N = 8; growth through k = 5 reported",
            ok,
            format!(
                "MC {mean:.4e} vs exact {:.4e} (se {std_err:.1e}); {growth}",
                exact.value
            ),
        ));
    }

    Ok(SuiteReport::new("weingarten", checks))
}
