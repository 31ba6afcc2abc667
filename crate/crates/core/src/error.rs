use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeoError {
    #[error("invalid metric parameter a = {0}; must be positive")]
    InvalidMetricParameter(f64),
    #[error("degenerate direction")]
    DegenerateDirection,
    #[error("degenerate frame at point (condition number {0:.3e})")]
    DegenerateFrame(f64),
    #[error("point is not on the unit sphere (|p| = {0})")]
    NotOnSphere(f64),
    #[error("vector is not horizontal (vertical component {0:.3e})")]
    NotHorizontal(f64),
    #[error("vector is not in D1 (D2 component {0:.3e})")]
    NotInD1(f64),
    #[error("vector is not unit length (norm {0})")]
    NotUnit(f64),
    #[error("normal is not horizontal (angle {0})")]
    NotHorizontalNormal(f64),
    #[error("frame degenerate at angle {0}")]
    FrameDegenerate(f64),
    #[error("horizontal case has no associated a")]
    HorizontalHasNoLink,
    #[error("parameter t = {0} outside (0, pi/2)")]
    ParameterOutOfRange(f64),
    #[error("degenerate chart: {0}")]
    DegenerateChart(&'static str),
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
}

pub type Result<T> = core::result::Result<T, GeoError>;
