//! Command-line harness for the `nkcp3-core` verification suites.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod output;
pub mod report;
pub mod suites;

use clap::{Parser, Subcommand};

pub use config::{ConfigError, Format, RunConfig};
pub use report::{Check, FamilyRow, Info, Relation, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nkcp3", version, about = "Numerical checks for the homogeneous metrics on CP3")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1e-5)]
    pub step: f64,
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol_algebraic: f64,
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol_first: f64,
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub tol_second: f64,
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
    /// Metric parameters, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub a: Vec<f64>,
    /// Family parameters, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub t: Vec<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Structure-tensor identities, curvature and invariance checks.
    Verify,
    /// One row per (t, a) of the horizontal family.
    Family,
    /// Obstruction scalars over the metric grid.
    Obstructions,
    /// All of the above.
    Report,
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            fd_step: self.step,
            tol_algebraic: self.tol_algebraic,
            tol_first_order: self.tol_first,
            tol_second_order: self.tol_second,
            samples: self.samples,
            a_list: self.a.clone(),
            t_list: self.t.clone(),
            output_format: self.format,
        }
    }
}

/// Runs a subcommand on a validated configuration.
pub fn run(command: Command, cfg: &RunConfig) -> Result<Vec<Report>, ConfigError> {
    cfg.validate()?;
    Ok(match command {
        Command::Verify => vec![suites::verify(cfg)],
        Command::Family => vec![suites::family(cfg)],
        Command::Obstructions => vec![suites::obstructions(cfg)],
        Command::Report => vec![suites::verify(cfg), suites::family(cfg), suites::obstructions(cfg)],
    })
}

pub fn render(reports: &[Report], format: Format) -> Result<String, String> {
    match format {
        Format::Json => output::to_json(reports).map_err(|e| e.to_string()),
        Format::Csv => output::to_csv(reports).map_err(|e| e.to_string()),
        Format::Text => Ok(output::to_text(reports)),
    }
}

pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(|r| r.pass) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
