use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use symcov::covariance::DEFAULT_TOLERANCE;
use symcov::oracle::{sweep_samples, write_csv, EnsembleKind, EnsembleSpec, SweepReport};

mod document;
mod report;

use document::{CovarianceDocument, StateDocument};
use report::SWEEP_SCHEMA;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] symcov::Error),
}

/// Entanglement analysis of symmetric qubit states and two-mode Gaussian
/// covariances.
///
/// Exit status: 0 separable-consistent, 2 entangled, 3 indeterminate, 1 error.
#[derive(Parser)]
#[command(name = "symcov", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CollectiveKind {
    Dicke,
    Ghz,
    SpinCoherent,
    OneAxisTwisted,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a state document.
    Analyze {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a seeded equivalence sweep, writing one CSV row per sample.
    Sweep {
        #[arg(long, default_value = "mixed_symmetric")]
        ensemble: String,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, env = "SYMCOV_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// Rank of mixed samples, 0 for a random rank per sample.
        #[arg(long, default_value_t = 0)]
        rank: usize,
        /// Terms per separable mixture.
        #[arg(long, default_value_t = 4)]
        terms: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write the summary JSON here (it always goes to stdout).
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Collective analysis of a standard symmetric N-qubit state, or of a
    /// state document when `--input` is given.
    Collective {
        #[arg(long, value_enum, required_unless_present = "input")]
        state: Option<CollectiveKind>,
        #[arg(long, conflicts_with = "state")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Spins down for Dicke states.
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        #[arg(long, default_value_t = 0.1)]
        chi_t: f64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Simon criterion and Gaussian PPT check of a two-mode covariance.
    CvCheck {
        #[arg(long)]
        cov: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{text}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

#[derive(Serialize)]
struct SweepSummary<'a> {
    schema: &'static str,
    csv: &'a Path,
    #[serde(flatten)]
    report: &'a SweepReport,
}

fn collective_document(kind: CollectiveKind, n: usize, k: usize, theta: f64, phi: f64, chi_t: f64) -> StateDocument {
    use serde_json::json;
    match kind {
        CollectiveKind::Dicke => StateDocument::constructor("dicke", json!({"n": n, "k": k})),
        CollectiveKind::Ghz => StateDocument::constructor("ghz", json!({"n": n})),
        CollectiveKind::SpinCoherent => StateDocument::constructor("spin_coherent", json!({"n": n, "theta": theta, "phi": phi})),
        CollectiveKind::OneAxisTwisted => {
            StateDocument::constructor("one_axis_twisted", json!({"n": n, "chi_t": chi_t, "theta": theta, "phi": phi}))
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { input, tol, format } => {
            let doc = StateDocument::parse(&read(&input)?)?;
            let report = report::analyze(&doc, tol)?;
            match format {
                Format::Json => print_json(&report)?,
                Format::Csv => print!("{}", report.to_csv()),
            }
            Ok(report.exit_code())
        }
        Command::Sweep {
            ensemble,
            count,
            seed,
            tol,
            rank,
            terms,
            out,
            summary,
        } => {
            let kind: EnsembleKind = ensemble.parse()?;
            let spec = EnsembleSpec::new(kind, count, seed)?.with_rank(rank)?.with_terms(terms)?;
            let records = sweep_samples(&spec, tol)?;
            let file = fs::File::create(&out).map_err(|source| CliError::Io {
                path: out.clone(),
                source,
            })?;
            write_csv(&records, io::BufWriter::new(file))?;
            let report = SweepReport::from_records(&spec, tol, &records);
            let doc = SweepSummary {
                schema: SWEEP_SCHEMA,
                csv: &out,
                report: &report,
            };
            if let Some(path) = summary {
                let text = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Input(e.to_string()))?;
                fs::write(&path, text + "\n").map_err(|source| CliError::Io { path, source })?;
            }
            print_json(&doc)?;
            Ok(0)
        }
        Command::Collective {
            state,
            input,
            n,
            k,
            theta,
            phi,
            chi_t,
            tol,
        } => {
            let doc = match (state, input) {
                (_, Some(path)) => StateDocument::parse(&read(&path)?)?,
                (Some(kind), None) => collective_document(kind, n, k, theta, phi, chi_t),
                (None, None) => unreachable!("clap requires one of --state and --input"),
            };
            let report = report::analyze(&doc, tol)?;
            if report.collective.is_none() {
                return Err(CliError::Input("the document describes a two-qubit state; use `analyze`".into()));
            }
            print_json(&report)?;
            Ok(report.exit_code())
        }
        Command::CvCheck { cov, tol } => {
            let doc = CovarianceDocument::parse(&read(&cov)?)?;
            let report = report::cv_check(&doc, tol)?;
            print_json(&report)?;
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
