//! Closed-form extrinsic and intrinsic invariants of `H_t` and their numeric
//! counterparts.

use super::chart::{check_t, FamilyChart, FamilyPoint};
use crate::cp3::{curvature_ra, metric, GeoContext};
use crate::error::{GeoError, Result};
use crate::halgebra::{twistor_project, HPoint, Quaternion, S4Point};
use crate::hyper::{second_fundamental_form, AlphaRoute, HypersurfaceChart, ShapeData, Structure};

/// The acceptance grid of family parameters.
pub fn t_grid() -> [f64; 9] {
    use core::f64::consts::PI;
    [PI / 12.0, PI / 8.0, PI / 6.0, 0.6, PI / 4.0, 1.0, PI / 3.0, 3.0 * PI / 8.0, 5.0 * PI / 12.0]
}

fn cot(x: f64) -> f64 {
    libm::cos(x) / libm::sin(x)
}

fn check_a(a: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    Ok(())
}

/// Hopf eigenvalue of `J N` (resp. `J1 N`) for `g_a`: `2 cot 2t / sqrt(a)`.
/// The same for both structures, since `J = J1` on the normal plane.
pub fn hopf_eigen_ga(a: f64, t: f64) -> Result<f64> {
    check_a(a)?;
    check_t(t)?;
    Ok(2.0 * cot(2.0 * t) / libm::sqrt(a))
}

/// `√2 cot 2t` for the nearly Kähler structure, `2 cot 2t` for the Kähler
/// structure with the Fubini-Study metric.
pub fn hopf_eigen(t: f64, structure: Structure) -> Result<f64> {
    match structure {
        Structure::J => hopf_eigen_ga(2.0, t),
        Structure::J1 => hopf_eigen_ga(1.0, t),
    }
}

/// Principal curvatures for `g_a`, sorted: `λ` once and
/// `(λ ± sqrt(λ² + 4/a²)) / 2` twice each, `λ = 2 cot 2t / sqrt(a)`.
pub fn principal_curvatures_closed(a: f64, t: f64) -> Result<[f64; 5]> {
    let l = hopf_eigen_ga(a, t)?;
    let r = libm::sqrt(l * l + 4.0 / (a * a));
    let (lo, hi) = (0.5 * (l - r), 0.5 * (l + r));
    let mut out = [l, lo, lo, hi, hi];
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// `{2 cot 2t, -tan t (×2), cot t (×2)}`, sorted.
pub fn fubini_study_principal_curvatures(t: f64) -> Result<[f64; 5]> {
    check_t(t)?;
    let tan = libm::tan(t);
    let mut out = [2.0 * cot(2.0 * t), -tan, -tan, 1.0 / tan, 1.0 / tan];
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// The reference mean curvature `2 cot 2t / sqrt(a)`. The trace of the shape
/// operator is three times this, see [`shape_trace_closed`].
pub fn mean_curvature_family(a: f64, t: f64) -> Result<f64> {
    hopf_eigen_ga(a, t)
}

/// Trace of the `g_a` shape operator, `6 cot 2t / sqrt(a)`.
pub fn shape_trace_closed(a: f64, t: f64) -> Result<f64> {
    Ok(3.0 * hopf_eigen_ga(a, t)?)
}

/// The reference scalar curvature with `λ = 2 cot 2t`:
/// `2 (2√2 a^{3/2} + 6a³ + a²(6λ² + 20) - 21a - 2√2 √a + 18) / a³`.
pub fn scalar_curvature_reference(a: f64, t: f64) -> Result<f64> {
    check_a(a)?;
    check_t(t)?;
    let l = 2.0 * cot(2.0 * t);
    let (s2, sa) = (core::f64::consts::SQRT_2, libm::sqrt(a));
    Ok(2.0 * (2.0 * s2 * a * sa + 6.0 * a * a * a + a * a * (6.0 * l * l + 20.0) - 21.0 * a - 2.0 * s2 * sa + 18.0)
        / (a * a * a))
}

/// Shape data of `H_t` at `ψ_t(p, q)` for `g_a`, through exact Killing tangents.
pub fn family_shape(a: f64, point: &FamilyPoint) -> Result<ShapeData> {
    let chart = point.chart();
    let u = [0.0; 5];
    let ctx = GeoContext::new(a, chart.point(&u)?)?;
    second_fundamental_form(&ctx, &chart, &u, AlphaRoute::Auto)
}

/// Scalar curvature of the induced metric from the traced Gauss equation,
/// `Σ_{i,j} g_a(R^a(e_i,e_j)e_j, e_i) + (tr α)² - |α|²`.
pub fn scalar_curvature_gauss(shape: &ShapeData) -> Result<f64> {
    let (a, p, e) = (shape.a, &shape.base, &shape.frame);
    let mut ambient = 0.0;
    for i in 0..5 {
        for j in 0..5 {
            if i != j {
                ambient += metric(a, p, curvature_ra(a, p, e[i], e[j], e[j])?, e[i]);
            }
        }
    }
    let tr = shape.alpha.trace();
    Ok(ambient + tr * tr - shape.alpha.norm_squared())
}

/// `8 + 24/a - 4/a² + 6λ_a²` with `λ_a = 2 cot 2t / sqrt(a)`: the traced
/// Gauss equation in closed form. The ambient sum contributes `8 + 24/a`,
/// the second fundamental form `(tr α)² - |α|² = 6λ_a² - 4/a²`.
pub fn scalar_curvature_closed(a: f64, t: f64) -> Result<f64> {
    let l = hopf_eigen_ga(a, t)?;
    Ok(8.0 + 24.0 / a - 4.0 / (a * a) + 6.0 * l * l)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarCurvature {
    pub reference: f64,
    pub numeric: f64,
    pub gap: f64,
}

/// Reference and numeric scalar curvature at `ψ_t(1, 1)`.
pub fn scalar_curvature_family(a: f64, t: f64) -> Result<ScalarCurvature> {
    let reference = scalar_curvature_reference(a, t)?;
    let numeric = scalar_curvature_gauss(&family_shape(a, &FamilyPoint::new(t, Quaternion::ONE, Quaternion::ONE)?)?)?;
    Ok(ScalarCurvature { reference, numeric, gap: (reference - numeric).abs() })
}

/// Radius and height `(sin 2t, cos 2t)` of the twistor image of `H_t`, a
/// geodesic 3-sphere of `S4`.
pub fn twistor_image(t: f64) -> Result<(f64, f64)> {
    check_t(t)?;
    Ok((libm::sin(2.0 * t), libm::cos(2.0 * t)))
}

/// `|τ(ψ_t(p, q)) - (sin 2t p conj(q), cos 2t)|`.
pub fn twistor_residual(point: &FamilyPoint) -> Result<f64> {
    let (r, h) = twistor_image(point.t)?;
    let img = twistor_project(&point.lift()?);
    let want = S4Point { horizontal: (point.p * point.q.conj()).scale(r), height: h };
    Ok(img.distance(&want))
}

/// The twistor image is a great (totally geodesic) 3-sphere.
pub fn twistor_totally_geodesic(t: f64, tol: f64) -> Result<bool> {
    Ok(twistor_image(t)?.1.abs() < tol)
}

/// Coefficients `(c1, c2)` of the round shape operator of `ψ_t(S3 × S3)` in
/// `S7` on `ξ i`: `A_ξ(ξ i) = c1 ξ i + c2 ψ_t i`, with `∇_{ξ i} ξ` from a
/// central difference along the orbit of `(e^{i s tan t}, e^{-i s cot t})`.
pub fn round_shape_on_xi_i(point: &FamilyPoint, h: f64) -> Result<(f64, f64)> {
    let (t, p, q) = (point.t, point.p, point.q);
    let xi_at = |s: f64| -> Result<HPoint> {
        let a = Quaternion::complex(libm::cos(s * libm::tan(t)), libm::sin(s * libm::tan(t)));
        let b = Quaternion::complex(libm::cos(s / libm::tan(t)), -libm::sin(s / libm::tan(t)));
        super::chart::family_normal(t, p * a, q * b)
    };
    let d = (xi_at(h)? - xi_at(-h)?).scale(1.0 / (2.0 * h));
    let psi = point.lift()?.point();
    let xi = point.normal()?;
    // the derivative is tangent to S7 and orthogonal to ξ; project on the two directions
    let (xi_i, psi_i) = (xi.right_mul(Quaternion::I), psi.right_mul(Quaternion::I));
    Ok((-d.dot(xi_i), -d.dot(psi_i)))
}

/// `FamilyChart` with the identity base point.
pub fn standard_chart(t: f64) -> Result<FamilyChart> {
    FamilyChart::new(t, Quaternion::ONE, Quaternion::ONE)
}
