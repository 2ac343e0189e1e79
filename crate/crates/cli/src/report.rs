//! Report assembly and file output for the experiment subcommands.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use manova_core::algebra::rat_to_f64;
use manova_core::ensembles::{
    self, binned_law_mass, EdgeConfig, EdgeSummary, EnsembleKind, SpectralReport,
};
use manova_core::manova::{moments_exact, ManovaLaw, ManovaParams};

pub enum CliError {
    /// Bad arguments: exit code 2.
    Usage(String),
    /// Failure while running: exit code 1.
    Runtime(String),
}

fn validate_unit_interval(name: &str, v: f64) -> Result<(), CliError> {
    if !(v > 0.0 && v < 1.0) {
        return Err(CliError::Usage(format!("{name} must lie in (0,1), got {v}")));
    }
    Ok(())
}

fn parse_params(alpha: f64, beta: f64) -> Result<ManovaParams, CliError> {
    validate_unit_interval("alpha", alpha)?;
    validate_unit_interval("beta", beta)?;
    ManovaParams::from_f64(alpha, beta).map_err(|e| CliError::Usage(e.to_string()))
}

pub struct EsdArgs {
    pub alpha: f64,
    pub beta: f64,
    pub n: usize,
    pub trials: usize,
    pub kmax: usize,
    pub bins: usize,
    pub seed: u64,
    pub ensemble: String,
    pub out: Option<PathBuf>,
    pub format: String,
}

/// Everything one esd run produces, serialized as the JSON report.
#[derive(Serialize, Deserialize)]
pub struct EsdReport {
    pub library_version: String,
    /// Config echo, including the exact rationals the decimal inputs
    /// were converted to for the exact moment path.
    pub config: EsdConfigEcho,
    pub trials: Vec<SpectralReport>,
    pub exact_moments: Vec<f64>,
    pub empirical_mean_moments: Vec<f64>,
    pub max_moment_abs_diff: f64,
    pub histogram_tv_distance: f64,
    /// Plottable overlay rows (bin_center, count, empirical_density,
    /// law_density).
    pub histogram_overlay: Vec<(f64, u64, f64, f64)>,
}

#[derive(Serialize, Deserialize)]
pub struct EsdConfigEcho {
    pub alpha: f64,
    pub beta: f64,
    pub alpha_rational: String,
    pub beta_rational: String,
    pub n: usize,
    pub trials: usize,
    pub kmax: usize,
    pub bins: usize,
    pub seed: u64,
    pub ensemble: String,
}

pub fn run_esd(args: EsdArgs) -> Result<bool, CliError> {
    let params = parse_params(args.alpha, args.beta)?;
    if args.n < 2 || args.trials == 0 || args.kmax == 0 || args.bins == 0 {
        return Err(CliError::Usage(
            "n must be >= 2 and trials, kmax, bins must be positive".into(),
        ));
    }
    let kind: EnsembleKind = args
        .ensemble
        .parse()
        .map_err(|e: manova_core::Error| CliError::Usage(e.to_string()))?;
    let trials = ensembles::esd_trials(
        kind,
        args.n,
        &params,
        args.kmax,
        args.bins,
        args.trials,
        args.seed,
    )
    .map_err(|e| CliError::Runtime(e.to_string()))?;
    let comparison = ensembles::compare_moments(&params, &trials)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let tv = ensembles::histogram_tv_distance(&params, &trials)
        .map_err(|e| CliError::Runtime(e.to_string()))?;

    // aggregate histogram overlay
    let law = ManovaLaw::new(&params);
    let edges = trials[0].histogram.edges.clone();
    let law_mass =
        binned_law_mass(&law, &edges).map_err(|e| CliError::Runtime(e.to_string()))?;
    let bins = edges.len() - 1;
    let mut counts = vec![0u64; bins];
    for t in &trials {
        for (i, c) in t.histogram.counts.iter().enumerate() {
            counts[i] += c;
        }
    }
    let total: u64 = counts.iter().sum();
    let mut overlay = Vec::with_capacity(bins);
    for i in 0..bins {
        let width = edges[i + 1] - edges[i];
        let center = 0.5 * (edges[i] + edges[i + 1]);
        let empirical_density = counts[i] as f64 / (total as f64 * width);
        let law_density = law_mass[i] / width;
        overlay.push((center, counts[i], empirical_density, law_density));
    }

    let report = EsdReport {
        library_version: manova_core::VERSION.to_string(),
        config: EsdConfigEcho {
            alpha: args.alpha,
            beta: args.beta,
            alpha_rational: params.alpha().to_string(),
            beta_rational: params.beta().to_string(),
            n: args.n,
            trials: args.trials,
            kmax: args.kmax,
            bins: args.bins,
            seed: args.seed,
            ensemble: args.ensemble.clone(),
        },
        trials,
        exact_moments: comparison.exact.clone(),
        empirical_mean_moments: comparison.empirical_mean.clone(),
        max_moment_abs_diff: comparison.max_abs_diff,
        histogram_tv_distance: tv,
        histogram_overlay: overlay,
    };

    // moment table to stdout
    println!(
        "esd: ensemble={} N={} trials={} seed={} alpha={} (= {}) beta={} (= {})",
        report.config.ensemble,
        report.config.n,
        report.config.trials,
        report.config.seed,
        report.config.alpha,
        report.config.alpha_rational,
        report.config.beta,
        report.config.beta_rational,
    );
    println!("{:>3} {:>14} {:>14} {:>12}", "k", "exact", "empirical", "|diff|");
    for (k, (e, m)) in report
        .exact_moments
        .iter()
        .zip(&report.empirical_mean_moments)
        .enumerate()
    {
        println!("{:>3} {:>14.8} {:>14.8} {:>12.3e}", k + 1, e, m, (e - m).abs());
    }
    println!(
        "max |moment diff| = {:.4e}, histogram TV distance = {:.4}",
        report.max_moment_abs_diff, report.histogram_tv_distance
    );

    if let Some(path) = &args.out {
        match args.format.as_str() {
            "json" => {
                let body = serde_json::to_string_pretty(&report)
                    .map_err(|e| CliError::Runtime(e.to_string()))?;
                std::fs::write(path, body).map_err(|e| {
                    CliError::Runtime(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            "csv" => {
                let mut body = String::from("bin_center,count,empirical_density,manova_density\n");
                for (center, count, emp, law) in &report.histogram_overlay {
                    writeln!(body, "{center},{count},{emp},{law}")
                        .expect("writing to a String cannot fail");
                }
                std::fs::write(path, body).map_err(|e| {
                    CliError::Runtime(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown format {other:?} (expected json or csv)"
                )))
            }
        }
        println!("wrote {}", path.display());
    }
    Ok(true)
}

pub struct EdgeArgs {
    pub alpha: f64,
    pub beta: f64,
    pub n_list: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub ensemble: String,
    pub out: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
pub struct EdgeReport {
    pub library_version: String,
    pub alpha_rational: String,
    pub beta_rational: String,
    pub summary: EdgeSummary,
}

pub fn run_edge(args: EdgeArgs) -> Result<bool, CliError> {
    let params = parse_params(args.alpha, args.beta)?;
    if args.n_list.is_empty() || args.trials == 0 {
        return Err(CliError::Usage("n-list and trials must be non-empty".into()));
    }
    let kind: EnsembleKind = args
        .ensemble
        .parse()
        .map_err(|e: manova_core::Error| CliError::Usage(e.to_string()))?;
    let config = EdgeConfig {
        ensemble: kind,
        alpha: args.alpha,
        beta: args.beta,
        n_list: args.n_list.clone(),
        trials: args.trials,
        seed: args.seed,
    };
    let summary =
        ensembles::edge_experiment(&config).map_err(|e| CliError::Runtime(e.to_string()))?;
    if summary.conjecture_regime {
        println!(
            "WARNING: beta = {} != 1/2 -- the edge limit in this regime is conjectural, \
             deviations are reported for exploration only",
            args.beta
        );
    }
    println!(
        "edge experiment: ensemble={} alpha={} beta={} trials={} seed={} edge={:.6}",
        args.ensemble, args.alpha, args.beta, args.trials, args.seed, summary.edge
    );
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12} {:>6}",
        "N", "mean λmax", "|mean-edge|", "median dev", "tolerance", "pass"
    );
    for run in &summary.runs {
        println!(
            "{:>6} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>6}",
            run.n, run.mean, run.mean_abs_dev, run.median_abs_dev, run.tolerance, run.pass
        );
    }
    let trend_ok = summary
        .runs
        .windows(2)
        .all(|w| w[1].median_abs_dev <= w[0].median_abs_dev + 1e-12);
    if summary.runs.len() > 1 {
        println!(
            "median deviation trend across N: {}",
            if trend_ok { "non-increasing" } else { "NOT monotone" }
        );
    }
    let all_pass = summary.runs.iter().all(|r| r.pass);
    let report = EdgeReport {
        library_version: manova_core::VERSION.to_string(),
        alpha_rational: params.alpha().to_string(),
        beta_rational: params.beta().to_string(),
        summary,
    };
    if let Some(path) = &args.out {
        let body = serde_json::to_string_pretty(&report)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        std::fs::write(path, body)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(all_pass)
}

/// Exact first moments for sanity-printing in docs and tests.
#[allow(dead_code)]
pub fn exact_moment_f64(params: &ManovaParams, k: usize) -> f64 {
    let m = moments_exact(params, k).expect("moment order in range");
    rat_to_f64(m.m(k))
}
