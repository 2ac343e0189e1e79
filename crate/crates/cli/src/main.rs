//! `manova-lab`: verification suites and Monte Carlo experiments for
//! products of random projections, with machine-readable reports.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use manova_core::verify;

#[derive(Parser)]
#[command(
    name = "manova-lab",
    version,
    about = "Exact identities and Monte Carlo experiments for spectra of products of projections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named identity suite and print one pass/fail line per check.
    Verify {
        /// One of: combinatorics, genfunc, manova, necklace, weingarten, all.
        suite: String,
        /// Also write the full report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the spectrum of A B A over seeded trials and compare the
    /// empirical moments and histogram with the limiting law.
    Esd {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        /// Matrix dimension.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Highest moment order to compare.
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long, default_value_t = 40)]
        bins: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random model for the second projection: dft or invariant.
        #[arg(long, default_value = "dft")]
        ensemble: String,
        /// Output file (JSON report, or histogram table for csv).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Track the largest eigenvalue of A B A against the edge of the law
    /// across dimensions.
    Edge {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.5)]
        beta: f64,
        /// Comma-separated dimensions, e.g. 128,256,512.
        #[arg(long = "n-list", value_delimiter = ',', default_value = "128,256,512")]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "invariant")]
        ensemble: String,
        /// Output file for the JSON summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("MANOVA_LAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .ok();
            }
            _ => {
                eprintln!("error: MANOVA_LAB_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { suite, out } => run_verify(&suite, out.as_deref()),
        Command::Esd {
            alpha,
            beta,
            n,
            trials,
            kmax,
            bins,
            seed,
            ensemble,
            out,
            format,
        } => report::run_esd(report::EsdArgs {
            alpha,
            beta,
            n,
            trials,
            kmax,
            bins,
            seed,
            ensemble,
            out,
            format,
        }),
        Command::Edge {
            alpha,
            beta,
            n_list,
            trials,
            seed,
            ensemble,
            out,
        } => report::run_edge(report::EdgeArgs {
            alpha,
            beta,
            n_list,
            trials,
            seed,
            ensemble,
            out,
        }),
    };
    match outcome {
        Ok(passed) => {
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(report::CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(report::CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run_verify(suite: &str, out: Option<&std::path::Path>) -> Result<bool, report::CliError> {
    let reports = verify::run_suite(suite).map_err(|e| report::CliError::Usage(e.to_string()))?;
    let mut all_passed = true;
    for r in &reports {
        println!("suite {} ({} checks)", r.suite, r.checks.len());
        for c in &r.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            println!("  [{status}] {:32} {}", c.id, c.claim);
            println!("         {}", c.detail);
        }
        all_passed &= r.passed;
    }
    println!(
        "verify {}: {} (library {})",
        suite,
        if all_passed { "all checks passed" } else { "FAILURES PRESENT" },
        manova_core::VERSION
    );
    if let Some(path) = out {
        let body = serde_json::to_string_pretty(&reports)
            .map_err(|e| report::CliError::Runtime(e.to_string()))?;
        std::fs::write(path, body).map_err(|e| {
            report::CliError::Runtime(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(all_passed)
}
