//! The tangent model of CP3: distributions, structures, the metrics `g_a`,
//! their connections, the tensor `G` and the curvature.

mod connection;
mod curvature;
mod identities;
mod structures;
mod tensor;

pub use connection::{ConnectionMode, GeoContext, KillingFrame, DEFAULT_STEP, MAX_FRAME_CONDITION};
pub use curvature::{curvature_numeric, curvature_ra, nabla_curvature, sectional_curvature};
pub use identities::{identity_suite, IdentityCheck, Order, StructureTensorReport};
pub use structures::{
    horizontal_basis, horizontal_project, j, j1, metric, metric_by_product, norm, product, proj_d1, proj_d2, raise,
    vertical_defect, wedge, HTangent,
};
pub use tensor::{
    contact_phi, contact_psi, difference_tensor, difference_tensor_a, nabla_g, nabla_j, nabla_j1, nabla_j_closed,
    tensor_g, CONTACT_TOL,
};
