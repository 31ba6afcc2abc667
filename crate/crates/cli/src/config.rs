use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub fd_step: f64,
    pub tol_algebraic: f64,
    pub tol_first_order: f64,
    pub tol_second_order: f64,
    pub samples: usize,
    /// Metric parameters; each suite falls back to its own grid when empty.
    pub a_list: Vec<f64>,
    /// Family parameters; the family suite falls back to the standard grid.
    pub t_list: Vec<f64>,
    pub output_format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            fd_step: 1e-5,
            tol_algebraic: 1e-12,
            tol_first_order: 1e-6,
            tol_second_order: 1e-3,
            samples: 100,
            a_list: Vec::new(),
            t_list: Vec::new(),
            output_format: Format::Json,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("tolerances must be positive and ordered algebraic < first < second, got {0:e} {1:e} {2:e}")]
    Tolerances(f64, f64, f64),
    #[error("finite-difference step must be in (0, 1), got {0}")]
    Step(f64),
    #[error("at least one sample is required")]
    Samples,
    #[error("metric parameters must be positive and finite, got {0}")]
    MetricParameter(f64),
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let (a, f, s) = (self.tol_algebraic, self.tol_first_order, self.tol_second_order);
        if !(a > 0.0 && a < f && f < s && s.is_finite()) {
            return Err(ConfigError::Tolerances(a, f, s));
        }
        if !(self.fd_step > 0.0 && self.fd_step < 1.0) {
            return Err(ConfigError::Step(self.fd_step));
        }
        if self.samples == 0 {
            return Err(ConfigError::Samples);
        }
        if let Some(&bad) = self.a_list.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
            return Err(ConfigError::MetricParameter(bad));
        }
        Ok(())
    }

    pub(crate) fn a_or(&self, default: &[f64]) -> Vec<f64> {
        if self.a_list.is_empty() {
            default.to_vec()
        } else {
            self.a_list.clone()
        }
    }
}
