//! Spectral measurement of a product of projections and the Monte Carlo
//! experiments built on it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::manova::{moments_exact, ManovaLaw, ManovaParams};
use crate::necklace;

use super::frame::dft_subframe;
use super::matrix::{hermitize, ComplexMatrix};
use super::sampler::{bernoulli_projection, child_seed, invariant_projection};

/// Histogram over `[0, 1]` with equal-width bins; eigenvalues that poke
/// out by roundoff are clamped into the boundary bins.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
}

impl Histogram {
    fn new(values: &[f64], bins: usize) -> Self {
        let edges: Vec<f64> = (0..=bins).map(|i| i as f64 / bins as f64).collect();
        let mut counts = vec![0u64; bins];
        for &v in values {
            let idx = ((v * bins as f64).floor() as i64).clamp(0, bins as i64 - 1);
            counts[idx as usize] += 1;
        }
        Histogram { edges, counts }
    }

    pub fn bin_centers(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    /// Empirical density per bin (count / (total * width)).
    pub fn densities(&self) -> Vec<f64> {
        let total: u64 = self.counts.iter().sum();
        self.counts
            .iter()
            .zip(self.edges.windows(2))
            .map(|(&c, w)| c as f64 / (total as f64 * (w[1] - w[0])))
            .collect()
    }
}

/// Everything measured from one `A B A` sample.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralReport {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub seed: u64,
    /// Sorted ascending.
    pub eigenvalues: Vec<f64>,
    /// `moments[k-1] = (1/N) sum lambda^k`.
    pub moments: Vec<f64>,
    pub lambda_max: f64,
    pub histogram: Histogram,
}

/// Full spectrum of `A B A` with moments, top eigenvalue, and histogram.
/// Both inputs must pass the projection tolerance check.
pub fn esd_report(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    params: &ManovaParams,
    k_max: usize,
    bins: usize,
) -> Result<SpectralReport> {
    a.require_projection("A")?;
    b.require_projection("B")?;
    if a.dim() != b.dim() {
        return Err(Error::MatrixPrecondition(
            "projections must have equal dimension".into(),
        ));
    }
    let n = a.dim();
    let product = hermitize(&(&a.data * &b.data * &a.data));
    let eigen = product.symmetric_eigen();
    let mut eigenvalues: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    if eigenvalues.len() != n {
        return Err(Error::Numerical("eigensolver returned a partial spectrum".into()));
    }
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    let tol = 1e-8;
    if eigenvalues[0] < -tol || eigenvalues[n - 1] > 1.0 + tol {
        return Err(Error::Numerical(format!(
            "spectrum of a product of projections must lie in [0,1]; got [{}, {}]",
            eigenvalues[0],
            eigenvalues[n - 1]
        )));
    }
    let lambda_max = eigenvalues[n - 1];
    let moments: Vec<f64> = (1..=k_max)
        .map(|k| eigenvalues.iter().map(|l| l.max(0.0).powi(k as i32)).sum::<f64>() / n as f64)
        .collect();
    let histogram = Histogram::new(&eigenvalues, bins);
    Ok(SpectralReport {
        n,
        alpha: params.alpha_f64(),
        beta: params.beta_f64(),
        seed: 0,
        eigenvalues,
        moments,
        lambda_max,
        histogram,
    })
}

/// Normalized centered mixed traces with violation flags.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FreenessReport {
    /// `(1/N) Tr ((A - alpha I)(B - beta I))^k` for `k = 1..=K`.
    pub values: Vec<f64>,
    /// Flagging threshold `5 / sqrt(N)`.
    pub threshold: f64,
    /// Orders `k` whose value exceeds the threshold in magnitude.
    pub violations: Vec<usize>,
}

/// Measure how far a concrete pair sits from the trace relations that
/// drive the limit law; large values at low order mean the pair will not
/// mix.
pub fn freeness_diagnostic(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    params: &ManovaParams,
    k_max: usize,
) -> Result<FreenessReport> {
    let data = necklace::mixed_traces(a, b, params, k_max)?;
    let n = data.n as f64;
    let values: Vec<f64> = data.mixed.iter().map(|t| t / n).collect();
    let threshold = 5.0 / n.sqrt();
    let violations = values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.abs() > threshold)
        .map(|(i, _)| i + 1)
        .collect();
    Ok(FreenessReport {
        values,
        threshold,
        violations,
    })
}

/// Which random model produces the second projection.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum EnsembleKind {
    /// `B = U D U*`, `U` Haar, `D` Bernoulli(beta) diagonal.
    Invariant,
    /// `B = V* V` for a Bernoulli(beta) row-subframe `V` of the DFT.
    Dft,
}

impl std::str::FromStr for EnsembleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "invariant" => Ok(EnsembleKind::Invariant),
            "dft" => Ok(EnsembleKind::Dft),
            other => Err(Error::InvalidParameter(format!(
                "unknown ensemble {other:?} (expected invariant or dft)"
            ))),
        }
    }
}

/// Draw the projection pair of the requested ensemble at one seed.
pub fn sample_projection_pair(
    kind: EnsembleKind,
    n: usize,
    params: &ManovaParams,
    seed: u64,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let a = bernoulli_projection(n, params.alpha_f64(), child_seed(seed, 101));
    let b = match kind {
        EnsembleKind::Invariant => invariant_projection(n, params.beta_f64(), child_seed(seed, 202)),
        EnsembleKind::Dft => dft_subframe(n, params.beta_f64(), child_seed(seed, 202))?
            .gram_projection(),
    };
    Ok((a, b))
}

/// One spectral report per trial, seeds derived from the master seed.
pub fn esd_trials(
    kind: EnsembleKind,
    n: usize,
    params: &ManovaParams,
    k_max: usize,
    bins: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<SpectralReport>> {
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let trial_seed = child_seed(seed, t as u64);
            let (a, b) = sample_projection_pair(kind, n, params, trial_seed)?;
            let mut report = esd_report(&a, &b, params, k_max, bins)?;
            report.seed = trial_seed;
            Ok(report)
        })
        .collect()
}

/// Aggregate of the per-trial empirical moments against the exact ones.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MomentComparison {
    pub exact: Vec<f64>,
    pub empirical_mean: Vec<f64>,
    pub max_abs_diff: f64,
}

pub fn compare_moments(params: &ManovaParams, reports: &[SpectralReport]) -> Result<MomentComparison> {
    let k_max = reports
        .iter()
        .map(|r| r.moments.len())
        .min()
        .ok_or_else(|| Error::InsufficientData("no trials to compare".into()))?;
    let exact_rat = moments_exact(params, k_max)?;
    let exact: Vec<f64> = exact_rat.values.iter().map(crate::algebra::rat_to_f64).collect();
    let mut empirical_mean = vec![0.0; k_max];
    for r in reports {
        for (k, m) in r.moments.iter().take(k_max).enumerate() {
            empirical_mean[k] += m / reports.len() as f64;
        }
    }
    let max_abs_diff = exact
        .iter()
        .zip(&empirical_mean)
        .map(|(e, m)| (e - m).abs())
        .fold(0.0, f64::max);
    Ok(MomentComparison {
        exact,
        empirical_mean,
        max_abs_diff,
    })
}

/// Total-variation distance between the averaged empirical histogram of
/// the trials and the law binned on the same edges.
pub fn histogram_tv_distance(params: &ManovaParams, reports: &[SpectralReport]) -> Result<f64> {
    let first = reports
        .first()
        .ok_or_else(|| Error::InsufficientData("no trials to compare".into()))?;
    let law = ManovaLaw::new(params);
    let edges = &first.histogram.edges;
    let law_mass = binned_law_mass(&law, edges)?;
    let bins = edges.len() - 1;
    let mut empirical = vec![0.0f64; bins];
    let mut total = 0u64;
    for r in reports {
        for (i, &c) in r.histogram.counts.iter().enumerate() {
            empirical[i] += c as f64;
        }
        total += r.histogram.counts.iter().sum::<u64>();
    }
    for e in &mut empirical {
        *e /= total as f64;
    }
    Ok(0.5
        * empirical
            .iter()
            .zip(&law_mass)
            .map(|(e, m)| (e - m).abs())
            .sum::<f64>())
}

/// Mass the law assigns to each bin: atoms go to the bins containing 0
/// and 1, the absolutely continuous part is integrated bin by bin in the
/// angular variable.
pub fn binned_law_mass(law: &ManovaLaw, edges: &[f64]) -> Result<Vec<f64>> {
    let bins = edges.len() - 1;
    let mut mass = vec![0.0f64; bins];
    mass[0] += law.atom0;
    mass[bins - 1] += law.atom1;
    for (i, m) in mass.iter_mut().enumerate() {
        *m += crate::manova::quadrature::mass_between(law, edges[i], edges[i + 1], 1e-10)?;
    }
    Ok(mass)
}

/// Configuration of a top-eigenvalue experiment.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeConfig {
    pub ensemble: EnsembleKind,
    pub alpha: f64,
    pub beta: f64,
    pub n_list: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
}

/// Per-dimension statistics of the measured top eigenvalues.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeRun {
    pub n: usize,
    pub lambda_max: Vec<f64>,
    pub mean: f64,
    pub mean_abs_dev: f64,
    pub median_abs_dev: f64,
    /// Acceptance tolerance `4 N^{-1/3}`, an empirical edge-fluctuation
    /// scale used only as a test threshold.
    pub tolerance: f64,
    pub pass: bool,
}

/// Full experiment summary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeSummary {
    pub config: EdgeConfig,
    pub edge: f64,
    /// Set when `beta != 1/2`, where the edge claim is only conjectured.
    pub conjecture_regime: bool,
    pub runs: Vec<EdgeRun>,
}

/// Measure `lambda_max(A B A)` across trials and dimensions and compare
/// with the deterministic edge of the law.
pub fn edge_experiment(config: &EdgeConfig) -> Result<EdgeSummary> {
    let params = ManovaParams::from_f64(config.alpha, config.beta)?;
    let edge = crate::manova::edge(&params);
    let mut runs = Vec::with_capacity(config.n_list.len());
    for (ni, &n) in config.n_list.iter().enumerate() {
        let lambda_max: Vec<f64> = (0..config.trials)
            .into_par_iter()
            .map(|t| {
                let trial_seed = child_seed(config.seed, (ni * config.trials + t) as u64);
                let (a, b) = sample_projection_pair(config.ensemble, n, &params, trial_seed)?;
                let product = hermitize(&(&a.data * &b.data * &a.data));
                let eigen = product.symmetric_eigen();
                Ok(eigen.eigenvalues.iter().copied().fold(0.0f64, f64::max))
            })
            .collect::<Result<_>>()?;
        let mean = lambda_max.iter().sum::<f64>() / lambda_max.len() as f64;
        let mean_abs_dev = (mean - edge).abs();
        let mut devs: Vec<f64> = lambda_max.iter().map(|l| (l - edge).abs()).collect();
        devs.sort_by(|x, y| x.partial_cmp(y).expect("finite deviations"));
        let median_abs_dev = devs[devs.len() / 2];
        let tolerance = 4.0 * (n as f64).powf(-1.0 / 3.0);
        runs.push(EdgeRun {
            n,
            lambda_max,
            mean,
            mean_abs_dev,
            median_abs_dev,
            tolerance,
            pass: mean_abs_dev <= tolerance,
        });
    }
    Ok(EdgeSummary {
        config: config.clone(),
        edge,
        conjecture_regime: (config.beta - 0.5).abs() > 1e-12,
        runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn small_params() -> ManovaParams {
        ManovaParams::new(rat(1, 2), rat(1, 2)).unwrap()
    }

    #[test]
    fn esd_of_projection_squared_is_binary() {
        // A = B projection: eigenvalues of ABA are 0/1 and all moments
        // equal rank/N
        let p = invariant_projection(32, 0.5, 9);
        let report = esd_report(&p, &p, &small_params(), 4, 8).unwrap();
        let rank_fraction = p.trace_re() / 32.0;
        for m in &report.moments {
            assert!((m - rank_fraction).abs() < 1e-8);
        }
        for lam in &report.eigenvalues {
            assert!(lam.abs() < 1e-8 || (lam - 1.0).abs() < 1e-8);
        }
        assert!(report.lambda_max <= 1.0 + 1e-8);
    }

    #[test]
    fn moments_match_own_eigenvalues() {
        let params = ManovaParams::from_f64(0.3, 0.5).unwrap();
        let (a, b) = sample_projection_pair(EnsembleKind::Invariant, 64, &params, 5).unwrap();
        let report = esd_report(&a, &b, &params, 6, 10).unwrap();
        for (k, m) in report.moments.iter().enumerate() {
            let direct: f64 = report
                .eigenvalues
                .iter()
                .map(|l| l.max(0.0).powi(k as i32 + 1))
                .sum::<f64>()
                / 64.0;
            assert!((m - direct).abs() < 1e-9);
        }
    }

    #[test]
    fn necklace_predicts_measured_traces() {
        // the module-boundary contract: eigenvalue traces equal the
        // recursion reconstruction from mixed traces
        for (kind, seed) in [(EnsembleKind::Invariant, 3u64), (EnsembleKind::Dft, 4u64)] {
            let params = ManovaParams::new(rat(3, 10), rat(1, 2)).unwrap();
            let n = 64;
            let (a, b) = sample_projection_pair(kind, n, &params, seed).unwrap();
            let report = esd_report(&a, &b, &params, 6, 10).unwrap();
            let data = necklace::mixed_traces(&a, &b, &params, 6).unwrap();
            let predicted = necklace::necklace_predict(&data, 6).unwrap();
            for k in 0..6 {
                let measured = report.moments[k] * n as f64;
                assert!(
                    (measured - predicted[k]).abs() <= 1e-8 * n as f64,
                    "{kind:?} k={} measured {measured} predicted {}",
                    k + 1,
                    predicted[k]
                );
            }
        }
    }

    #[test]
    fn freeness_flags_identical_projections() {
        // the order-1 value for A = B is (1-2 alpha) TrA/N + alpha^2 =
        // 1/4 here, which crosses the 5/sqrt(N) threshold once N > 400
        let params = small_params();
        let p = invariant_projection(512, 0.5, 2);
        let report = freeness_diagnostic(&p, &p, &params, 3).unwrap();
        assert!(report.violations.contains(&1), "values {:?}", report.values);
    }

    #[test]
    fn freeness_passes_invariant_pair() {
        let params = small_params();
        let (a, b) = sample_projection_pair(EnsembleKind::Invariant, 512, &params, 8).unwrap();
        let report = freeness_diagnostic(&a, &b, &params, 5).unwrap();
        assert!(
            report.violations.is_empty(),
            "values {:?} threshold {}",
            report.values,
            report.threshold
        );
    }

    #[test]
    fn binned_mass_sums_to_one() {
        let law = ManovaLaw::new(&ManovaParams::from_f64(0.3, 0.5).unwrap());
        let edges: Vec<f64> = (0..=25).map(|i| i as f64 / 25.0).collect();
        let mass = binned_law_mass(&law, &edges).unwrap();
        let total: f64 = mass.iter().sum();
        assert!((total - 1.0).abs() < 1e-8, "total {total}");
    }

    #[test]
    fn trial_reports_are_deterministic() {
        let params = ManovaParams::from_f64(0.3, 0.5).unwrap();
        let a = esd_trials(EnsembleKind::Dft, 32, &params, 4, 8, 3, 42).unwrap();
        let b = esd_trials(EnsembleKind::Dft, 32, &params, 4, 8, 3, 42).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.eigenvalues, y.eigenvalues);
            assert_eq!(x.seed, y.seed);
        }
    }

    #[test]
    fn edge_experiment_trivial_branch() {
        // alpha + beta > 1: the edge is 1 and lambda_max hugs it
        let config = EdgeConfig {
            ensemble: EnsembleKind::Invariant,
            alpha: 0.6,
            beta: 0.5,
            n_list: vec![128],
            trials: 5,
            seed: 31,
        };
        let summary = edge_experiment(&config).unwrap();
        assert_eq!(summary.edge, 1.0);
        assert!(!summary.conjecture_regime);
        assert!(summary.runs[0].mean_abs_dev < 0.02);
    }
}
