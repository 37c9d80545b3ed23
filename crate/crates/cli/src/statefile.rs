//! On-disk state description: either explicit moments (mean plus covariance,
//! row-major nested arrays) or a named builder with parameters. Exactly one
//! of the two forms must be present; `schema_version` is pinned to "1".

use std::fs;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use gaussbound_core::GaussianState;

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub schema_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cov: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub builder: Option<Builder>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum Builder {
    Vacuum { n: usize },
    Thermal { nu: Vec<f64> },
    Coherent { mean: Vec<f64> },
    Squeezed { r: f64 },
    TwoModeSqueezed { r: f64 },
}

impl StateFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let file: StateFile = serde_json::from_str(&text).map_err(|e| {
            CliError::Usage(format!(
                "parse error in {} at line {}, column {}: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        })?;
        file.check_shape()?;
        Ok(file)
    }

    pub fn save(&self, path: &Path) -> CliResult<()> {
        let text = serde_json::to_string_pretty(self)
            .map_err(|e| CliError::Domain(format!("serialization failed: {e}")))?;
        fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
    }

    /// Schema-level checks: version, the moments-xor-builder rule, and
    /// dimensional consistency of explicit moments.
    pub fn check_shape(&self) -> CliResult<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Usage(format!(
                "unsupported schema_version {:?} (expected {:?})",
                self.schema_version, SCHEMA_VERSION
            )));
        }
        let explicit = self.mean.is_some() || self.cov.is_some();
        match (explicit, self.builder.is_some()) {
            (true, true) => {
                return Err(CliError::Usage(
                    "state file must contain either mean+cov or builder, not both".into(),
                ))
            }
            (false, false) => {
                return Err(CliError::Usage(
                    "state file must contain mean+cov or a builder".into(),
                ))
            }
            _ => {}
        }
        if explicit {
            let mean = self
                .mean
                .as_ref()
                .ok_or_else(|| CliError::Usage("explicit form requires a mean vector".into()))?;
            let cov = self
                .cov
                .as_ref()
                .ok_or_else(|| CliError::Usage("explicit form requires a cov matrix".into()))?;
            let dim = mean.len();
            if dim == 0 || dim % 2 != 0 {
                return Err(CliError::Usage(format!(
                    "mean length must be a positive even number, got {dim}"
                )));
            }
            if let Some(n) = self.n {
                if 2 * n != dim {
                    return Err(CliError::Usage(format!(
                        "n = {n} inconsistent with mean length {dim}"
                    )));
                }
            } else {
                return Err(CliError::Usage(
                    "explicit form requires the mode count n".into(),
                ));
            }
            if cov.len() != dim || cov.iter().any(|row| row.len() != dim) {
                return Err(CliError::Usage(format!(
                    "cov must be a {dim}x{dim} matrix of rows"
                )));
            }
        } else if let (Some(n), Some(builder)) = (self.n, self.builder.as_ref()) {
            if n != builder.n() {
                return Err(CliError::Usage(format!(
                    "n = {n} inconsistent with builder mode count {}",
                    builder.n()
                )));
            }
        }
        Ok(())
    }

    /// Raw explicit moments, expanding the builder if needed.
    pub fn moments(&self) -> CliResult<(DVector<f64>, DMatrix<f64>)> {
        if let Some(builder) = &self.builder {
            let state = builder.build()?;
            return Ok((state.mean().clone(), state.cov().matrix().clone()));
        }
        let mean = DVector::from_column_slice(self.mean.as_ref().expect("checked shape"));
        let rows = self.cov.as_ref().expect("checked shape");
        let dim = mean.len();
        let mut cov = DMatrix::zeros(dim, dim);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                cov[(i, j)] = *v;
            }
        }
        Ok((mean, cov))
    }

    /// Build and fully validate the state.
    pub fn to_state(&self) -> CliResult<GaussianState> {
        if let Some(builder) = &self.builder {
            return builder.build();
        }
        let (mean, cov) = self.moments()?;
        let cov = gaussbound_core::CovMatrix::new(cov)?;
        Ok(GaussianState::new(mean, cov)?)
    }

    /// Explicit-form description of an existing state.
    pub fn from_state(state: &GaussianState) -> Self {
        let dim = 2 * state.n();
        let cov = state.cov().matrix();
        StateFile {
            schema_version: SCHEMA_VERSION.to_string(),
            n: Some(state.n()),
            mean: Some(state.mean().iter().copied().collect()),
            cov: Some(
                (0..dim)
                    .map(|i| (0..dim).map(|j| cov[(i, j)]).collect())
                    .collect(),
            ),
            builder: None,
        }
    }
}

impl Builder {
    pub fn n(&self) -> usize {
        match self {
            Builder::Vacuum { n } => *n,
            Builder::Thermal { nu } => nu.len(),
            Builder::Coherent { mean } => mean.len() / 2,
            Builder::Squeezed { .. } => 1,
            Builder::TwoModeSqueezed { .. } => 2,
        }
    }

    pub fn build(&self) -> CliResult<GaussianState> {
        let state = match self {
            Builder::Vacuum { n } => GaussianState::vacuum(*n)?,
            Builder::Thermal { nu } => GaussianState::thermal(nu)?,
            Builder::Coherent { mean } => {
                GaussianState::coherent(DVector::from_column_slice(mean))?
            }
            Builder::Squeezed { r } => GaussianState::squeezed(*r)?,
            Builder::TwoModeSqueezed { r } => GaussianState::two_mode_squeezed(*r)?,
        };
        Ok(state)
    }
}
