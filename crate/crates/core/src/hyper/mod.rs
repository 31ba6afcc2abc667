//! Hypersurfaces of `(CP3, g_a)`: angle function, canonical frames, shape
//! operator, Gauss and Codazzi residuals and the non-existence obstructions.

mod angle;
mod chart;
mod frames;
mod intrinsic;
mod obstruction;
mod shape;

pub use angle::{
    angle, angle_relation, classify, cos_two_angle, isotropic_angle, isotropic_link, normal_from_g1, normal_from_ga,
    normal_to_ga, AngleClass, CLASSIFY_TOL,
};
pub use chart::{horizontal_tangents, HypersurfaceChart, Moved, Params, Regauged, Transformed, MAX_CHART_CONDITION};
pub use frames::{
    default_contact, frame_horizontal, frame_nonhorizontal, nonhorizontal_e5_alt, renormalize, FRAME_TOL,
};
pub use intrinsic::{
    angle_derivative_gaps, chart_metric, christoffel, codazzi_residual, gauss_residual, riemann, AlphaCorruption,
    Christoffel, Riemann, INTRINSIC_STEP,
};
pub use obstruction::{
    codazzi_horizontal_closed, codazzi_nonhorizontal_closed, codazzi_obstruction, codazzi_obstruction_at,
    csc_necessary_condition, csc_rhs_cyclic, csc_sides, horizontal_codazzi_relations, log_grid,
    nonhorizontal_obstruction, renormalized_horizontal_frame, tu_closed, tu_measured_closed, tu_obstruction, CscSides,
    ObstructionValue, Vector5,
};
pub use shape::{
    alpha_in_chart, clustered, is_hopf, principal_curvatures, second_fundamental_form, AlphaRoute, HopfVerdict,
    Matrix5, ShapeData, Structure,
};
