//! The angle function of a hypersurface and its dependence on the metric.

use core::f64::consts::FRAC_PI_2;
use core::f64::consts::FRAC_PI_4;

use crate::cp3::{metric, norm, product, proj_d1, raise};
use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, SpherePoint};

/// Allowed deviation of `|N_a|_a` from one.
pub const UNIT_TOL: f64 = 1e-6;

/// `θ_a ∈ [0, π/2]` with `cos 2θ_a = g_a(N_a, P N_a)`.
///
/// Evaluated as `atan2(|P1 N_a|_a, |P2 N_a|_a)`, which keeps full relative
/// accuracy near `θ_a = 0` where `arccos` of `cos 2θ_a` would not.
pub fn angle(a: f64, p: &SpherePoint, n_a: HPoint) -> Result<f64> {
    if !(a > 0.0) {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    let len = norm(a, p, n_a);
    if (len - 1.0).abs() > UNIT_TOL {
        return Err(GeoError::NotUnit(len));
    }
    let n1 = proj_d1(p, n_a);
    let n2 = n_a - n1;
    Ok(libm::atan2(norm(a, p, n1), norm(a, p, n2)))
}

/// `cos 2θ_a` straight from the definition.
pub fn cos_two_angle(a: f64, p: &SpherePoint, n_a: HPoint) -> f64 {
    metric(a, p, n_a, product(p, n_a)).clamp(-1.0, 1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleClass {
    Horizontal,
    Vertical,
    Isotropic,
    Generic,
}

pub const CLASSIFY_TOL: f64 = 1e-6;

/// Thresholded type of a point of a hypersurface. No hypersurface can be
/// vertical, so a `Vertical` answer on real data means something is wrong.
pub fn classify(theta: f64, tol: f64) -> AngleClass {
    if theta < tol {
        AngleClass::Horizontal
    } else if theta > FRAC_PI_2 - tol {
        log::warn!("vertical angle {theta}: no hypersurface has a vertical normal");
        AngleClass::Vertical
    } else if (theta - FRAC_PI_4).abs() < tol {
        AngleClass::Isotropic
    } else {
        AngleClass::Generic
    }
}

/// The `g_a` angle of a hypersurface with nearly Kähler angle `θ`:
/// `tan θ_a = sqrt(a/2) tan θ`, equivalently
/// `cos 2θ_a = (2-a + (2+a) cos 2θ) / (2+a + (2-a) cos 2θ)`.
pub fn angle_relation(a: f64, theta: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    Ok(libm::atan2(libm::sqrt(a / 2.0) * libm::sin(theta), libm::cos(theta)))
}

/// The metric parameter for which a hypersurface of constant nearly Kähler
/// angle `θ` is isotropic: `a = 2 cot^2 θ`.
pub fn isotropic_link(theta: f64) -> Result<f64> {
    if theta <= 0.0 {
        return Err(GeoError::HorizontalHasNoLink);
    }
    if theta >= FRAC_PI_2 {
        return Err(GeoError::InvalidInput("angle must be below pi/2"));
    }
    let c = libm::cos(theta) / libm::sin(theta);
    Ok(2.0 * c * c)
}

/// Inverse of [`isotropic_link`]: `θ = arccos((a-2)/(a+2)) / 2`.
pub fn isotropic_angle(a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    Ok(0.5 * libm::acos((a - 2.0) / (a + 2.0)))
}

/// Converts a `g`-unit normal (nearly Kähler metric) into the `g_a`-unit normal
/// of the same hypersurface, `N_a ∝ (a+2) N - (a-2) P N`.
pub fn normal_to_ga(a: f64, p: &SpherePoint, n: HPoint) -> Result<HPoint> {
    if !(a > 0.0) {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    let c = metric(2.0, p, n, product(p, n));
    let scale = libm::sqrt(2.0 + a + (2.0 - a) * c) * libm::sqrt(2.0 * a);
    Ok((n.scale(a + 2.0) - product(p, n).scale(a - 2.0)).scale(1.0 / scale))
}

/// Converts a `g_a`-unit normal into the `g`-unit normal,
/// `N ∝ (a+2) N_a + (a-2) P N_a`. The normalization involves the nearly
/// Kähler angle `θ`, recovered here from `θ_a`.
pub fn normal_from_ga(a: f64, p: &SpherePoint, n_a: HPoint) -> Result<HPoint> {
    if !(a > 0.0) {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    let theta_a = angle(a, p, n_a)?;
    let theta = libm::atan2(libm::sqrt(2.0 / a) * libm::sin(theta_a), libm::cos(theta_a));
    let c = libm::cos(2.0 * theta);
    let scale = libm::sqrt(2.0 + a - (a - 2.0) * c) / (4.0 * libm::sqrt(2.0 * a));
    Ok((n_a.scale(a + 2.0) + product(p, n_a).scale(a - 2.0)).scale(scale))
}

/// The `g_a`-unit normal of the hyperplane `g1`-orthogonal to `ν`.
pub fn normal_from_g1(a: f64, p: &SpherePoint, nu: HPoint) -> Result<HPoint> {
    let v = raise(a, p, nu);
    let len = norm(a, p, v);
    if !(len > 0.0) {
        return Err(GeoError::DegenerateDirection);
    }
    Ok(v.scale(1.0 / len))
}
