//! Parameter sweeps over named state-pair families, emitting one CSV row of
//! bound values per parameter step.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use gaussbound_core::bounds::{full_report, SGridConfig};
use gaussbound_core::GaussianState;
use nalgebra::DVector;

use crate::error::{CliError, CliResult};

pub const FAMILIES: [&str; 3] = [
    "vacuum_vs_thermal",
    "coherent_vs_vacuum",
    "squeezed_vs_vacuum",
];

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub family: String,
    pub parameter: ParameterSpec,
    #[serde(default = "default_copies")]
    pub copies: u32,
    /// Column selectors: young, mink, qc, fid, helstrom. Defaults to all
    /// but helstrom.
    #[serde(default)]
    pub bounds: Option<Vec<String>>,
    pub output: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterSpec {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

fn default_copies() -> u32 {
    1
}

#[derive(Debug, Clone, Copy)]
struct Columns {
    young: bool,
    minkowski: bool,
    chernoff: bool,
    fidelity: bool,
    helstrom: bool,
}

impl SweepSpec {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let spec: SweepSpec = serde_json::from_str(&text).map_err(|e| {
            CliError::Usage(format!(
                "parse error in {} at line {}, column {}: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> CliResult<()> {
        if !FAMILIES.contains(&self.family.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown family {:?}; available families: {}",
                self.family,
                FAMILIES.join(", ")
            )));
        }
        if self.parameter.steps < 2 {
            return Err(CliError::Usage(format!(
                "steps must be at least 2, got {}",
                self.parameter.steps
            )));
        }
        // NaN-rejecting comparison
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.parameter.start < self.parameter.stop) {
            return Err(CliError::Usage(format!(
                "start must be below stop, got [{}, {}]",
                self.parameter.start, self.parameter.stop
            )));
        }
        if self.copies == 0 {
            return Err(CliError::Usage("copies must be at least 1".into()));
        }
        self.columns()?;
        Ok(())
    }

    fn columns(&self) -> CliResult<Columns> {
        let Some(tokens) = &self.bounds else {
            return Ok(Columns {
                young: true,
                minkowski: true,
                chernoff: true,
                fidelity: true,
                helstrom: false,
            });
        };
        let mut cols = Columns {
            young: false,
            minkowski: false,
            chernoff: false,
            fidelity: false,
            helstrom: false,
        };
        for token in tokens {
            match token.as_str() {
                "young" => cols.young = true,
                "mink" => cols.minkowski = true,
                "qc" => cols.chernoff = true,
                "fid" => cols.fidelity = true,
                "helstrom" => cols.helstrom = true,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown bound selector {other:?} (expected young, mink, qc, fid, helstrom)"
                    )))
                }
            }
        }
        Ok(cols)
    }

    pub fn parameter_values(&self) -> Vec<f64> {
        let steps = self.parameter.steps;
        let span = self.parameter.stop - self.parameter.start;
        (0..steps)
            .map(|i| self.parameter.start + span * i as f64 / (steps - 1) as f64)
            .collect()
    }

    fn build_pair(&self, param: f64) -> CliResult<(GaussianState, GaussianState)> {
        let pair = match self.family.as_str() {
            "vacuum_vs_thermal" => (GaussianState::vacuum(1)?, GaussianState::thermal(&[param])?),
            "coherent_vs_vacuum" => (
                GaussianState::coherent(DVector::from_column_slice(&[param, 0.0]))?,
                GaussianState::vacuum(1)?,
            ),
            "squeezed_vs_vacuum" => (GaussianState::squeezed(param)?, GaussianState::vacuum(1)?),
            _ => unreachable!("validated family"),
        };
        Ok(pair)
    }

    /// Run the sweep and render the CSV text.
    pub fn run(&self, config: &SGridConfig) -> CliResult<String> {
        let cols = self.columns()?;
        let mut header: Vec<&str> = vec!["param"];
        if cols.young {
            header.push("Y1");
        }
        if cols.minkowski {
            header.push("M1");
        }
        if cols.chernoff {
            header.push("PQC1");
        }
        if cols.fidelity {
            header.push("F_plus");
            header.push("F_minus");
        }
        if cols.helstrom {
            header.push("helstrom");
        }

        let mut out = String::new();
        out.push_str(&header.join(","));
        out.push('\n');
        for param in self.parameter_values() {
            let (a, b) = self.build_pair(param)?;
            let report = full_report(&a, &b, self.copies, config, cols.helstrom).map_err(|e| {
                CliError::Domain(format!("at {} = {param}: {e}", self.parameter.name))
            })?;
            let mut row = vec![format!("{param:.9}")];
            if cols.young {
                row.push(format!("{:.9}", report.young.value));
            }
            if cols.minkowski {
                row.push(format!("{:.9}", report.minkowski.value));
            }
            if cols.chernoff {
                row.push(format!("{:.9}", report.chernoff.value));
            }
            if cols.fidelity {
                let fid = report.fidelity.as_ref().ok_or_else(|| {
                    CliError::Domain("fidelity columns need single-mode pairs".into())
                })?;
                row.push(format!("{:.9}", fid.f_plus));
                row.push(format!("{:.9}", fid.f_minus));
            }
            if cols.helstrom {
                let h = report
                    .helstrom
                    .ok_or_else(|| CliError::Domain("oracle value missing".into()))?;
                row.push(format!("{h:.9}"));
            }
            out.push_str(&row.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}
