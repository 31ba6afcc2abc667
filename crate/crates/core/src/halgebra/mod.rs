//! Quaternionic linear algebra on `H^2 = R^8`, the round seven-sphere, its
//! Killing fields and the Hopf and twistor projections.
//!
//! Scalars act on the right (`p -> p q`); `Sp(2)` and `SU(4)` act on the left.
//! With this chirality `diag(A, B)` commutes with the gauge `p -> p z`.

mod hopf;
mod hpoint;
mod killing;
mod quaternion;
mod sphere;

pub use hopf::{hopf_separation, twistor_project, ComplexLinear, S4Point};
pub use hpoint::HPoint;
pub use killing::{KillingField, QMat2, Sp2};
pub use quaternion::{qmul, Quaternion};
pub use sphere::{round_nabla, sphere_exp, tangent_project, AmbientField, LinearField, ProjectedConstant, SpherePoint};
