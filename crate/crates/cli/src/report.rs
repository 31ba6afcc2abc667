use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Passes when `value < threshold`.
    Below,
    /// Passes when `value > threshold`.
    Above,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub relation: Relation,
    pub pass: bool,
}

impl Check {
    pub fn below(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self { name: name.into(), value, threshold, relation: Relation::Below, pass: value < threshold }
    }

    pub fn above(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self { name: name.into(), value, threshold, relation: Relation::Above, pass: value > threshold }
    }
}

/// A reported quantity without a verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Info {
    pub name: String,
    pub value: f64,
}

/// One `(t, a)` cell of the family table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Default)]
pub struct FamilyRow {
    pub t: f64,
    pub a: f64,
    pub theta_a: f64,
    pub lambda_closed: f64,
    pub lambda_numeric: f64,
    pub principal_closed: [f64; 5],
    pub principal_numeric: [f64; 5],
    pub mean_curvature: f64,
    pub trace_numeric: f64,
    pub scalar_reference: f64,
    pub scalar_numeric: f64,
    pub twistor_radius: f64,
    pub twistor_height: f64,
    pub twistor_residual: f64,
    /// Pullback-metric residual against the mirror partner `π/2 - t`; absent at `t = π/4`.
    pub mirror_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub step: f64,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub info: Vec<Info>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub rows: Vec<FamilyRow>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub errors: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str, seed: u64, step: f64) -> Self {
        Self {
            suite: suite.into(),
            seed,
            step,
            checks: Vec::new(),
            info: Vec::new(),
            rows: Vec::new(),
            errors: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn note(&mut self, name: impl Into<String>, value: f64) {
        self.info.push(Info { name: name.into(), value });
    }

    /// Records a computation that could not be carried out as a failed check.
    pub fn error(&mut self, name: impl Into<String>, err: impl core::fmt::Display) {
        let name = name.into();
        self.errors.push(format!("{name}: {err}"));
        self.push(Check::below(format!("{name}/error"), 1.0, 0.5));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
