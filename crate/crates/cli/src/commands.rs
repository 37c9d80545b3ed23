//! Implementations behind the CLI subcommands. Each returns the text to
//! print on stdout; errors carry the exit code.

use std::fmt::Write as _;
use std::path::Path;

use gaussbound_core::bounds::{full_report, SGridConfig};
use gaussbound_core::linalg::max_abs;
use gaussbound_core::symplectic::{diagnose, symplectic_spectrum, williamson, CovDiagnostic};

use crate::error::{CliError, CliResult};
use crate::report::{to_csv, to_json, to_table, BoundSelection};
use crate::statefile::StateFile;
use crate::sweep::SweepSpec;

pub const GRID_ENV: &str = "GAUSSBOUND_GRID";

/// Output format of `discriminate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

fn format_nine(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:.9}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_validate(path: &Path) -> CliResult<String> {
    let file = StateFile::load(path)?;
    if file.builder.is_some() {
        let state = file.to_state()?;
        return Ok(format!("valid: {}-mode Gaussian state\n", state.n()));
    }
    let (mean, cov) = file.moments()?;
    let violations = diagnose(&cov);
    if violations.is_empty() {
        let state = file.to_state()?;
        debug_assert_eq!(2 * state.n(), mean.len());
        return Ok(format!("valid: {}-mode Gaussian state\n", state.n()));
    }
    let mut msg = String::new();
    for v in violations {
        match v {
            CovDiagnostic::Asymmetric { row, col, delta } => {
                let _ = writeln!(
                    msg,
                    "asymmetric covariance at ({row},{col}): |V[{row},{col}] - V[{col},{row}]| = {delta:e}"
                );
            }
            CovDiagnostic::NotPositiveDefinite { min_eigenvalue } => {
                let _ = writeln!(
                    msg,
                    "covariance not positive definite: smallest eigenvalue {min_eigenvalue:e}"
                );
            }
            CovDiagnostic::BelowVacuumNoise { nu_min } => {
                let _ = writeln!(
                    msg,
                    "uncertainty violation: smallest symplectic eigenvalue {nu_min:.9} < 1"
                );
            }
        }
    }
    Err(CliError::Domain(msg.trim_end().to_string()))
}

pub fn cmd_spectrum(path: &Path, full: bool) -> CliResult<String> {
    let state = StateFile::load(path)?.to_state()?;
    let spectrum = symplectic_spectrum(state.cov())?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", format_nine(spectrum.values()));
    let sqrt_det = state.cov().matrix().determinant().sqrt();
    let _ = writeln!(
        out,
        "sqrt(det V) = {:.9}  product of spectrum = {:.9}",
        sqrt_det,
        spectrum.product()
    );
    if full {
        let w = williamson(state.cov())?;
        let _ = writeln!(out, "S =");
        let dim = 2 * state.n();
        for i in 0..dim {
            let row: Vec<f64> = (0..dim).map(|j| w.s()[(i, j)]).collect();
            let _ = writeln!(out, "  {}", format_nine(&row));
        }
        let form = gaussbound_core::symplectic::symplectic_residual(w.s());
        let recon = max_abs(&(w.reconstruct() - state.cov().matrix()));
        let _ = writeln!(out, "residual |S Omega S^T - Omega| = {form:e}");
        let _ = writeln!(out, "residual |S D S^T - V| = {recon:e}");
    }
    Ok(out)
}

pub struct DiscriminateArgs<'a> {
    pub state_a: &'a Path,
    pub state_b: &'a Path,
    pub copies: u32,
    pub bounds: Option<&'a str>,
    pub grid: Option<usize>,
    pub oracle: bool,
    pub format: Format,
}

/// Grid size: explicit flag, then the GAUSSBOUND_GRID environment variable,
/// then the default.
pub fn resolve_grid(flag: Option<usize>) -> CliResult<SGridConfig> {
    if let Some(points) = flag {
        let config = SGridConfig::with_grid_points(points);
        config.validate()?;
        return Ok(config);
    }
    match std::env::var(GRID_ENV) {
        Ok(text) => {
            let points: usize = text.parse().map_err(|_| {
                CliError::Usage(format!(
                    "{GRID_ENV} must be a positive integer, got {text:?}"
                ))
            })?;
            let config = SGridConfig::with_grid_points(points);
            config.validate()?;
            Ok(config)
        }
        Err(_) => Ok(SGridConfig::default()),
    }
}

pub fn cmd_discriminate(args: DiscriminateArgs<'_>) -> CliResult<String> {
    if args.copies == 0 {
        return Err(CliError::Usage("--copies must be at least 1".into()));
    }
    let a = StateFile::load(args.state_a)?.to_state()?;
    let b = StateFile::load(args.state_b)?.to_state()?;
    let config = resolve_grid(args.grid)?;
    let selection = match args.bounds {
        Some(list) => BoundSelection::parse(list)?,
        None => BoundSelection::default(),
    };
    let report = full_report(&a, &b, args.copies, &config, args.oracle).map_err(|e| match e {
        gaussbound_core::Error::OracleUnsupported { reason } => CliError::Domain(format!(
            "oracle requested for an unsupported pair: {reason}"
        )),
        other => CliError::from(other),
    })?;
    match args.format {
        Format::Json => to_json(&report, &selection),
        Format::Csv => Ok(to_csv(&report, &selection)),
        Format::Table => Ok(to_table(&report, &selection)),
    }
}

pub fn cmd_sweep(path: &Path) -> CliResult<String> {
    let spec = SweepSpec::load(path)?;
    let config = resolve_grid(None)?;
    let csv = spec.run(&config)?;
    let rows = csv.lines().count().saturating_sub(1);
    std::fs::write(&spec.output, &csv)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", spec.output)))?;
    Ok(format!("wrote {rows} rows to {}\n", spec.output))
}
