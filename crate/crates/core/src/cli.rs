//! Command-line front end: one thin binary with a subcommand per
//! capability. All numeric work happens in the library; this module only
//! parses flags, shuttles files and formats output.
//!
//! Exit codes: 0 on success, 1 on a domain failure (an infeasible spectrum
//! under `construct --strict`, a failed verification, a non-convergent
//! eigensolve), 2 on usage errors (bad flags, unparsable input, unreadable
//! files).

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::conditions::{full_report, ConditionReport};
use crate::constructor::{
    construct, corollary_bound, feasibility, CorollaryBound, FeasibilityCertificate,
    ENTRY_TOLERANCE,
};
use crate::eigen::{
    is_doubly_stochastic, sym_eigenvalues, EigenError, StochasticityReport, EIGEN_TOLERANCE,
    ROW_SUM_TOLERANCE,
};
use crate::io::{
    clamp_dust, matrix_to_csv, matrix_to_json, read_matrix, read_matrix_csv, read_matrix_json,
    read_spectra, write_matrix_csv, write_matrix_json, IoError,
};
use crate::matrix::DenseSymMatrix;
use crate::randomgen::{random_spectrum, Distribution, GenConfig};
use crate::rng::derive_seed;
use crate::rw_basis::build_basis;
use crate::search::{bracket_delta_min, separating_examples};
use crate::spectrum::{Spectrum, SpectrumError};

#[derive(Parser)]
#[command(
    name = "sdiep",
    version,
    about = "Construct, check and explore symmetric doubly stochastic matrices with prescribed spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    /// Decide by file extension (.csv is CSV, everything else JSON)
    Auto,
    Json,
    Csv,
}

impl FileFormat {
    fn resolve(self, path: Option<&Path>) -> FileFormat {
        match self {
            FileFormat::Auto => match path {
                Some(p) if p.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) => {
                    FileFormat::Csv
                }
                _ => FileFormat::Json,
            },
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DistributionArg {
    Uniform,
    Squared,
}

impl From<DistributionArg> for Distribution {
    fn from(d: DistributionArg) -> Self {
        match d {
            DistributionArg::Uniform => Distribution::Uniform01,
            DistributionArg::Squared => Distribution::SquaredUniform,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Realize a spectrum as a symmetric matrix with unit row/column sums
    Construct {
        /// Comma-separated spectrum, e.g. "1,-0.02,-0.03,-0.05,-0.4"
        #[arg(long, conflicts_with = "spectrum_file")]
        spectrum: Option<String>,
        /// File with exactly one spectrum (one comma-separated list per line)
        #[arg(long)]
        spectrum_file: Option<PathBuf>,
        /// Write the matrix to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FileFormat::Auto)]
        format: FileFormat,
        /// Machine-readable report on stdout
        #[arg(long)]
        json: bool,
        /// Exit with code 1 when the spectrum is infeasible
        #[arg(long)]
        strict: bool,
    },
    /// Evaluate the classical sufficient conditions and the feasibility test
    Check {
        #[arg(long, conflicts_with = "spectrum_file")]
        spectrum: Option<String>,
        /// File with one spectrum per line; all of them are checked
        #[arg(long)]
        spectrum_file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Read a matrix file and report stochasticity plus its eigenvalues
    Verify {
        /// Matrix file (JSON or CSV)
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Auto)]
        format: FileFormat,
        /// Entry non-negativity tolerance
        #[arg(long, default_value_t = ENTRY_TOLERANCE)]
        tol: f64,
        /// Row/column sum tolerance
        #[arg(long, default_value_t = ROW_SUM_TOLERANCE)]
        sum_tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Emit the orthonormal walk eigenbasis Q and its eigenvalues
    Basis {
        #[arg(long)]
        n: usize,
        /// Write JSON to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate random doubly stochastic matrices via random spectra
    Random {
        #[arg(long)]
        n: usize,
        /// Tail sum in [-1/2, 1/2]; negative gives non-positive tails
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Directory for the generated files (required when count > 1)
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FileFormat::Json)]
        format: FileFormat,
        #[arg(long, value_enum, default_value_t = DistributionArg::Uniform)]
        distribution: DistributionArg,
    },
    /// Bracket the feasibility threshold for non-positive tails at size n
    DeltaMin {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Find spectra that are feasible but fail every classical condition
    Separate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print at most this many spectra (0 means all)
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SpectrumError> for CliError {
    fn from(e: SpectrumError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code instead of exiting, so tests can drive the
/// full CLI in-process.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Construct { spectrum, spectrum_file, out, format, json, strict } => {
            cmd_construct(spectrum, spectrum_file, out, format, json, strict)
        }
        Command::Check { spectrum, spectrum_file, json } => {
            cmd_check(spectrum, spectrum_file, json)
        }
        Command::Verify { input, format, tol, sum_tol, json } => {
            cmd_verify(&input, format, tol, sum_tol, json)
        }
        Command::Basis { n, out } => cmd_basis(n, out),
        Command::Random { n, alpha, seed, count, out_dir, format, distribution } => {
            cmd_random(n, alpha, seed, count, out_dir, format, distribution.into())
        }
        Command::DeltaMin { n, trials, seed, json } => cmd_delta_min(n, trials, seed, json),
        Command::Separate { n, trials, seed, limit, json } => {
            cmd_separate(n, trials, seed, limit, json)
        }
    }
}

fn load_spectra(
    spectrum: Option<String>,
    spectrum_file: Option<PathBuf>,
) -> Result<Vec<Spectrum>, CliError> {
    match (spectrum, spectrum_file) {
        (Some(text), None) => Ok(vec![Spectrum::parse(&text)?]),
        (None, Some(path)) => Ok(read_spectra(&path)?),
        _ => Err(CliError::Usage(
            "provide exactly one of --spectrum or --spectrum-file".into(),
        )),
    }
}

fn load_one_spectrum(
    spectrum: Option<String>,
    spectrum_file: Option<PathBuf>,
) -> Result<Spectrum, CliError> {
    let mut spectra = load_spectra(spectrum, spectrum_file)?;
    if spectra.len() != 1 {
        return Err(CliError::Usage(format!(
            "expected exactly one spectrum, found {}",
            spectra.len()
        )));
    }
    Ok(spectra.remove(0))
}

fn write_matrix(
    path: &Path,
    format: FileFormat,
    matrix: &DenseSymMatrix,
) -> Result<(), CliError> {
    match format.resolve(Some(path)) {
        FileFormat::Csv => write_matrix_csv(path, matrix)?,
        _ => write_matrix_json(path, matrix)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct ConstructReport<'a> {
    n: usize,
    spectrum: &'a Spectrum,
    delta: f64,
    suleimanova: bool,
    corollary: CorollaryBound,
    feasibility: &'a FeasibilityCertificate,
    out: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    entries: Option<&'a [f64]>,
}

fn cmd_construct(
    spectrum: Option<String>,
    spectrum_file: Option<PathBuf>,
    out: Option<PathBuf>,
    format: FileFormat,
    json: bool,
    strict: bool,
) -> Result<i32, CliError> {
    let s = load_one_spectrum(spectrum, spectrum_file)?;
    let cert = feasibility(&s);
    if !cert.feasible {
        let (k, l) = (cert.witness_k.unwrap_or(0), cert.witness_l.unwrap_or(0));
        eprintln!(
            "warning: spectrum is infeasible; entry ({k}, {l}) = {:.6e}",
            cert.witness_value.unwrap_or(cert.min_entry)
        );
        if strict {
            return Err(CliError::Domain(format!(
                "infeasible spectrum: entry ({k}, {l}) = {:.6e} < -{ENTRY_TOLERANCE:e}",
                cert.witness_value.unwrap_or(cert.min_entry)
            )));
        }
    }
    let matrix = construct(&s);
    let export = clamp_dust(&matrix, ENTRY_TOLERANCE);
    if let Some(path) = &out {
        write_matrix(path, format, &export)?;
    }

    let class = s.classify();
    if json {
        let report = ConstructReport {
            n: s.n(),
            spectrum: &s,
            delta: class.delta,
            suleimanova: class.is_suleimanova,
            corollary: corollary_bound(&s),
            feasibility: &cert,
            out: out.as_ref().map(|p| p.display().to_string()),
            entries: if out.is_none() { Some(export.entries()) } else { None },
        };
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!(
            "n = {}, delta = {:.6}, suleimanova = {}, feasible = {}, min entry = {:.6e}",
            s.n(),
            class.delta,
            class.is_suleimanova,
            cert.feasible,
            cert.min_entry
        );
        match &out {
            Some(path) => println!("wrote {}", path.display()),
            None => print_matrix(&export),
        }
    }
    Ok(0)
}

fn print_matrix(m: &DenseSymMatrix) {
    for r in 0..m.n() {
        let row: Vec<String> = m.row(r).iter().map(|v| format!("{:9.6}", v)).collect();
        println!("{}", row.join(" "));
    }
}

#[derive(Serialize)]
struct CheckReport<'a> {
    spectrum: &'a Spectrum,
    n: usize,
    delta: f64,
    suleimanova: bool,
    normalized: bool,
    #[serde(flatten)]
    report: ConditionReport,
}

fn cmd_check(
    spectrum: Option<String>,
    spectrum_file: Option<PathBuf>,
    json: bool,
) -> Result<i32, CliError> {
    let single = spectrum.is_some();
    let spectra = load_spectra(spectrum, spectrum_file)?;
    let reports: Vec<CheckReport> = spectra
        .iter()
        .map(|s| {
            let class = s.classify();
            CheckReport {
                spectrum: s,
                n: s.n(),
                delta: class.delta,
                suleimanova: class.is_suleimanova,
                normalized: class.is_normalized,
                report: full_report(s),
            }
        })
        .collect();

    if json {
        let text = if single {
            serde_json::to_string(&reports[0]).expect("report serializes")
        } else {
            serde_json::to_string(&reports).expect("reports serialize")
        };
        println!("{text}");
        return Ok(0);
    }

    for (i, r) in reports.iter().enumerate() {
        if reports.len() > 1 {
            println!("--- spectrum {} ---", i + 1);
        }
        println!("spectrum: {}", r.spectrum);
        println!(
            "n = {}, delta = {:.6}, suleimanova = {}, normalized = {}",
            r.n, r.delta, r.suleimanova, r.normalized
        );
        println!("{:<22} {:<11} {:<12} verdict", "condition", "applicable", "lhs");
        for v in &r.report.conditions {
            let (lhs, verdict) = match (v.lhs, v.satisfied) {
                (Some(lhs), Some(sat)) => {
                    (format!("{:.6}", lhs), if sat { "pass" } else { "fail" })
                }
                _ => ("-".to_string(), "-"),
            };
            println!(
                "{:<22} {:<11} {:<12} {}",
                v.name,
                if v.applicable { "yes" } else { "no" },
                lhs,
                verdict
            );
        }
        println!("corollary bound: {:?}", r.report.corollary);
        let f = &r.report.feasibility;
        if f.feasible {
            println!("feasibility: feasible (min entry {:.6e})", f.min_entry);
        } else {
            println!(
                "feasibility: infeasible (entry ({}, {}) = {:.6e})",
                f.witness_k.unwrap_or(0),
                f.witness_l.unwrap_or(0),
                f.witness_value.unwrap_or(f.min_entry)
            );
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    pass: bool,
    #[serde(flatten)]
    report: StochasticityReport,
    eigenvalues: Option<Vec<f64>>,
}

fn cmd_verify(
    input: &Path,
    format: FileFormat,
    tol: f64,
    sum_tol: f64,
    json: bool,
) -> Result<i32, CliError> {
    if tol.is_nan() || tol <= 0.0 || sum_tol.is_nan() || sum_tol <= 0.0 {
        return Err(CliError::Usage("tolerances must be positive".into()));
    }
    let matrix = match format.resolve(Some(input)) {
        FileFormat::Csv => read_matrix_csv(input)?,
        FileFormat::Json => read_matrix_json(input)?,
        FileFormat::Auto => read_matrix(input)?,
    };
    let report = is_doubly_stochastic(&matrix, tol, sum_tol);
    let eigenvalues = match sym_eigenvalues(&matrix, EIGEN_TOLERANCE) {
        Ok(vals) => Some(vals),
        Err(EigenError::NotSymmetric(_)) => None,
        Err(e) => return Err(CliError::Domain(e.to_string())),
    };
    let pass = report.pass();

    if json {
        let out = VerifyReport { pass, report, eigenvalues };
        println!("{}", serde_json::to_string(&out).expect("report serializes"));
    } else {
        println!("symmetric:    {}", if report.symmetric_ok { "ok" } else { "FAIL" });
        println!(
            "non-negative: {} (min entry {:.6e})",
            if report.nonneg_ok { "ok" } else { "FAIL" },
            report.min_entry
        );
        println!(
            "row sums:     {} (max deviation {:.6e})",
            if report.rowsum_ok { "ok" } else { "FAIL" },
            report.max_rowsum_dev
        );
        println!("col sums:     {}", if report.colsum_ok { "ok" } else { "FAIL" });
        println!("overall:      {}", if pass { "PASS" } else { "FAIL" });
        if let Some(vals) = &eigenvalues {
            let rendered: Vec<String> = vals.iter().map(|v| format!("{:.6}", v)).collect();
            println!("eigenvalues:  {}", rendered.join(", "));
        } else {
            println!("eigenvalues:  skipped (matrix not symmetric)");
        }
    }
    Ok(if pass { 0 } else { 1 })
}

#[derive(Serialize)]
struct BasisFile<'a> {
    n: usize,
    entries: &'a [f64],
    eigvals: &'a [f64],
}

fn cmd_basis(n: usize, out: Option<PathBuf>) -> Result<i32, CliError> {
    let basis = build_basis(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let file = BasisFile { n, entries: basis.entries(), eigvals: basis.eigvals() };
    let mut text = serde_json::to_string(&file).expect("basis serializes");
    text.push('\n');
    match out {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| {
                CliError::Usage(format!("{}: {e}", path.display()))
            })?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_random(
    n: usize,
    alpha: f64,
    seed: u64,
    count: u64,
    out_dir: Option<PathBuf>,
    format: FileFormat,
    distribution: Distribution,
) -> Result<i32, CliError> {
    if count == 0 {
        return Err(CliError::Usage("count must be at least 1".into()));
    }
    if count > 1 && out_dir.is_none() {
        return Err(CliError::Usage("--out-dir is required when count > 1".into()));
    }

    if let Some(dir) = &out_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
    }

    let ext = match format.resolve(None) {
        FileFormat::Csv => "csv",
        _ => "json",
    };
    for i in 0..count {
        let matrix_seed = if count == 1 { seed } else { derive_seed(seed, i) };
        let cfg = GenConfig::new(n, alpha, matrix_seed, distribution)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let spectrum = random_spectrum(&cfg).map_err(|e| CliError::Domain(e.to_string()))?;
        let matrix = clamp_dust(&construct(&spectrum), ENTRY_TOLERANCE);
        let delta = spectrum.classify().delta;
        match &out_dir {
            Some(dir) => {
                let path = dir.join(format!("ds_n{n}_{i:04}.{ext}"));
                write_matrix(&path, format, &matrix)?;
                println!(
                    "wrote {} (seed {}, delta {:.6}, min entry {:.6e})",
                    path.display(),
                    matrix_seed,
                    delta,
                    matrix.min_entry()
                );
            }
            None => match format.resolve(None) {
                FileFormat::Csv => print!("{}", matrix_to_csv(&matrix)),
                _ => print!("{}", matrix_to_json(&matrix)),
            },
        }
    }
    Ok(0)
}

fn cmd_delta_min(n: usize, trials: u64, seed: u64, json: bool) -> Result<i32, CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!("delta-min needs n >= 3, got {n}")));
    }
    if trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    let bracket = bracket_delta_min(n, trials, seed);
    if json {
        println!("{}", serde_json::to_string(&bracket).expect("bracket serializes"));
    } else {
        println!(
            "n = {}, trials = {}, seed = {}",
            bracket.n, bracket.trials, bracket.seed
        );
        println!("lower = {:.9} (largest delta among infeasible spectra found)", bracket.lower);
        println!("upper = {:.1} (structural)", bracket.upper);
        match &bracket.witness_spectrum {
            Some(w) => println!("witness: {w}"),
            None => println!("witness: none (no infeasible spectrum found)"),
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct SeparateReport {
    n: usize,
    trials: u64,
    seed: u64,
    found: usize,
    spectra: Vec<Spectrum>,
}

fn cmd_separate(
    n: usize,
    trials: u64,
    seed: u64,
    limit: usize,
    json: bool,
) -> Result<i32, CliError> {
    if n < 5 {
        return Err(CliError::Usage(format!("separate needs n >= 5, got {n}")));
    }
    let found = separating_examples(n, trials, seed);
    let shown = if limit == 0 { found.len() } else { limit.min(found.len()) };
    if json {
        let report = SeparateReport {
            n,
            trials,
            seed,
            found: found.len(),
            spectra: found[..shown].to_vec(),
        };
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        println!(
            "{} of {} trials produced feasible spectra failing every applicable condition",
            found.len(),
            trials
        );
        for s in &found[..shown] {
            println!("{s}");
        }
        if shown < found.len() {
            println!("... ({} more)", found.len() - shown);
        }
    }
    Ok(0)
}
