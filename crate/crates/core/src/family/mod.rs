//! The homogeneous Hopf hypersurfaces `H_t` and their closed-form invariants.

mod chart;
mod invariants;
mod metric;
mod symmetry;

pub use chart::{check_t, family_normal, nonhorizontal_variants, psi, FamilyChart, FamilyPoint};
pub use invariants::{
    family_shape, fubini_study_principal_curvatures, hopf_eigen, hopf_eigen_ga, mean_curvature_family,
    principal_curvatures_closed, round_shape_on_xi_i, scalar_curvature_closed, scalar_curvature_family,
    scalar_curvature_gauss, scalar_curvature_reference, shape_trace_closed, standard_chart, t_grid, twistor_image,
    twistor_residual, twistor_totally_geodesic, ScalarCurvature,
};
pub use metric::{
    mirror_isometry_check, pullback_consistency, pullback_isotropy_defect, pullback_metric, pullback_metric_ambient,
    pullback_metric_squashed, PairTangent,
};
pub use symmetry::{
    homogeneity_check, hopf_coordinate_identity, hopf_coordinates, is_isotropy_element, isotropy_fixes,
    principal_curvatures_at, quotient_check, quotient_image, HomogeneityReport,
};
