//! Closed-form scalars whose non-vanishing rules out Codazzi, totally
//! umbilical and constant sectional curvature hypersurfaces, each paired with
//! a direct numeric evaluation.

use alloc::vec::Vec;

use nalgebra::SVector;

use super::angle::normal_to_ga;
use super::chart::{HypersurfaceChart, Params};
use super::frames::{default_contact, frame_horizontal, frame_nonhorizontal, renormalize, FRAME_TOL};
use super::shape::{second_fundamental_form, AlphaRoute, Matrix5, ShapeData};
use crate::cp3::{curvature_ra, horizontal_basis, metric, nabla_curvature, norm, GeoContext};
use crate::error::{GeoError, Result};
use crate::family::FamilyChart;
use crate::halgebra::{HPoint, Quaternion, SpherePoint};

pub type Vector5 = SVector<f64, 5>;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObstructionValue {
    pub name: &'static str,
    pub closed_form: f64,
    pub numeric: f64,
    /// `|closed_form|`.
    pub gap_from_zero: f64,
}

impl ObstructionValue {
    fn new(name: &'static str, closed_form: f64, numeric: f64) -> Self {
        Self { name, closed_form, numeric, gap_from_zero: closed_form.abs() }
    }

    pub fn agreement(&self) -> f64 {
        (self.closed_form - self.numeric).abs()
    }
}

fn check_a(a: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    Ok(())
}

/// `g_a(R^a(e3, e4) e5, N_a) = -1 / (2 sqrt(2a))` for the horizontal frame.
pub fn codazzi_horizontal_closed(a: f64) -> f64 {
    -1.0 / (2.0 * libm::sqrt(2.0 * a))
}

/// `g_a(R^a(e1, e4) e5, N_a) = -cos θ / (sqrt(2a) sqrt(2+a-(a-2) cos 2θ))` for
/// the non-horizontal frame.
pub fn codazzi_nonhorizontal_closed(a: f64, theta: f64) -> f64 {
    -libm::cos(theta) / (libm::sqrt(2.0 * a) * libm::sqrt(2.0 + a - (a - 2.0) * libm::cos(2.0 * theta)))
}

fn sample_point() -> SpherePoint {
    SpherePoint::normalize(HPoint::new(Quaternion::new(0.3, -0.2, 0.5, 0.1), Quaternion::new(0.4, 0.6, -0.1, 0.2)))
        .expect("nonzero sample")
}

/// The Codazzi obstruction at `p` for the nearly Kähler normal
/// `N = cos θ n2 + sin θ n1`, built from directions `d2 ∈ D2` and `d1 ∈ D1`
/// (normalized here). `θ = 0` selects the horizontal variant.
pub fn codazzi_obstruction_at(a: f64, theta: f64, p: &SpherePoint, d2: HPoint, d1: HPoint) -> Result<ObstructionValue> {
    check_a(a)?;
    let n2 = d2.scale(1.0 / norm(2.0, p, d2));
    let ctx2 = GeoContext::new(2.0, *p)?;
    let value = |frame: &[HPoint; 5], i: usize, n_a: HPoint| -> Result<f64> {
        Ok(metric(a, p, curvature_ra(a, p, frame[i], frame[3], frame[4])?, n_a))
    };
    if theta.abs() <= FRAME_TOL {
        let n_a = normal_to_ga(a, p, n2)?;
        let frame = frame_horizontal(&ctx2, n2, default_contact(p))?;
        return Ok(ObstructionValue::new("codazzi_horizontal", codazzi_horizontal_closed(a), value(&frame, 2, n_a)?));
    }
    let n1 = d1.scale(1.0 / norm(2.0, p, d1));
    let n = n2.scale(libm::cos(theta)) + n1.scale(libm::sin(theta));
    let n_a = normal_to_ga(a, p, n)?;
    let (frame, theta) = frame_nonhorizontal(&ctx2, n)?;
    Ok(ObstructionValue::new("codazzi_nonhorizontal", codazzi_nonhorizontal_closed(a, theta), value(&frame, 0, n_a)?))
}

/// [`codazzi_obstruction_at`] at a fixed generic point.
pub fn codazzi_obstruction(a: f64, theta: f64) -> Result<ObstructionValue> {
    let p = sample_point();
    let b = horizontal_basis(&p);
    let d2 = b[2].scale(0.3) + b[3].scale(-0.5) + b[4].scale(0.7) + b[5].scale(0.2);
    let d1 = b[0].scale(0.6) + b[1].scale(-0.8);
    codazzi_obstruction_at(a, theta, &p, d2, d1)
}

/// The reference value of `h^a(e1, e5)` on a horizontal hypersurface,
/// `(2 - 2a + sqrt(2a) a) / (sqrt(2a) a)`.
pub fn tu_closed(a: f64) -> f64 {
    let s = libm::sqrt(2.0 * a);
    (2.0 - 2.0 * a + s * a) / (s * a)
}

/// `α(e1, e5)` in the `g_a`-renormalized horizontal frame, as measured on
/// horizontal hypersurfaces: `1/a`. Agrees with [`tu_closed`] at `a = 1, 2`.
pub fn tu_measured_closed(a: f64) -> f64 {
    1.0 / a
}

/// [`tu_closed`] against `α(e1, e5)` measured on the horizontal
/// hypersurface `H_t`, `t = 0.6`.
pub fn tu_obstruction(a: f64) -> Result<ObstructionValue> {
    check_a(a)?;
    let chart = FamilyChart::new(0.6, Quaternion::ONE, Quaternion::ONE)?;
    let u = [0.0; 5];
    let ctx = GeoContext::new(a, chart.point(&u)?)?;
    let shape = second_fundamental_form(&ctx, &chart, &u, AlphaRoute::Auto)?;
    Ok(ObstructionValue::new("totally_umbilical", tu_closed(a), shape.alpha[(0, 4)]))
}

/// Log-spaced grid of `n` values from `lo` to `hi`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n < 2 {
        return alloc::vec![lo];
    }
    let (l, h) = (libm::log(lo), libm::log(hi));
    (0..n).map(|k| libm::exp(l + (h - l) * k as f64 / (n - 1) as f64)).collect()
}

/// `Σ_{cyclic U,X,Y} -α((U ∧ X) Y, Z) - α(Y, (U ∧ X) Z)` for coefficient
/// vectors in a frame with Gram matrix `gram`, `(U ∧ X) Y = g(X,Y) U - g(U,Y) X`.
pub fn csc_rhs_cyclic(alpha: &Matrix5, gram: &Matrix5, u: &Vector5, x: &Vector5, y: &Vector5, z: &Vector5) -> f64 {
    let g = |v: &Vector5, w: &Vector5| (v.transpose() * gram * w)[(0, 0)];
    let h = |v: &Vector5, w: &Vector5| (v.transpose() * alpha * w)[(0, 0)];
    let wedge = |v: &Vector5, w: &Vector5, t: &Vector5| v * g(w, t) - w * g(v, t);
    let term = |u: &Vector5, x: &Vector5, y: &Vector5| -h(&wedge(u, x, y), z) - h(y, &wedge(u, x, z));
    term(u, x, y) + term(x, y, u) + term(y, u, x)
}

/// Both sides of the differentiated Codazzi identity, cyclic in `(U, X, Y)`:
/// `S(g((∇_U R)(X,Y)Z, N) + α(U,X) g(R(N,Y)Z,N) + α(U,Y) g(R(X,N)Z,N)
/// + g(R(X,Y)Z, ∇_U N))` and `S(-α(R^H(U,X)Y, Z) - α(Y, R^H(U,X)Z))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CscSides {
    pub lhs: f64,
    pub rhs: f64,
}

/// Evaluates [`CscSides`] for frame indices `[U, X, Y, Z]` with arbitrary
/// data: a `g_a`-orthonormal frame at the base of `ctx`, a unit normal and a
/// symmetric `α`. `R^H` comes from the Gauss equation.
pub fn csc_sides(
    ctx: &GeoContext,
    frame: &[HPoint; 5],
    normal_a: HPoint,
    alpha: &Matrix5,
    idx: [usize; 4],
) -> Result<CscSides> {
    let a = ctx.a();
    let p = *ctx.base();
    let r = |x: HPoint, y: HPoint, z: HPoint| curvature_ra(a, &p, x, y, z);
    let shape_op = |k: usize| (0..5).fold(HPoint::ZERO, |acc, m| acc + frame[m].scale(alpha[(k, m)]));
    // R^H(e_u, e_x) e_y in frame coefficients
    let intrinsic = |u: usize, x: usize, y: usize| -> Result<[f64; 5]> {
        let amb = r(frame[u], frame[x], frame[y])?;
        Ok(core::array::from_fn(|k| {
            metric(a, &p, amb, frame[k]) + alpha[(u, k)] * alpha[(x, y)] - alpha[(u, y)] * alpha[(x, k)]
        }))
    };
    let along = |v: &[f64; 5], k: usize| (0..5).map(|m| v[m] * alpha[(m, k)]).sum::<f64>();
    let z = idx[3];
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for (u, x, y) in [(idx[0], idx[1], idx[2]), (idx[1], idx[2], idx[0]), (idx[2], idx[0], idx[1])] {
        let nr = nabla_curvature(ctx, frame[u], frame[x], frame[y], frame[z])?;
        lhs += metric(a, &p, nr, normal_a);
        lhs += alpha[(u, x)] * metric(a, &p, r(normal_a, frame[y], frame[z])?, normal_a);
        lhs += alpha[(u, y)] * metric(a, &p, r(frame[x], normal_a, frame[z])?, normal_a);
        lhs -= metric(a, &p, r(frame[x], frame[y], frame[z])?, shape_op(u));
        rhs -= along(&intrinsic(u, x, y)?, z) + along(&intrinsic(u, x, z)?, y);
    }
    Ok(CscSides { lhs, rhs })
}

/// The left side of the constant sectional curvature necessary condition on
/// a chart, in the `g_a`-renormalized canonical frame.
pub fn csc_necessary_condition<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    idx: [usize; 4],
) -> Result<CscSides> {
    let shape = second_fundamental_form(ctx, chart, u, AlphaRoute::Auto)?;
    let here = ctx.moved_to(shape.base)?;
    let alpha = (shape.alpha + shape.alpha.transpose()) * 0.5;
    csc_sides(&here, &shape.frame, shape.normal_a, &alpha, idx)
}

/// Residuals of the five Codazzi relations of a horizontal hypersurface of
/// the nearly Kähler metric:
/// `4α34 - e1(α33)`, `4α35 + e2(α33)`,
/// `2α45 - e1(α34) - α34 g(∇_{e1} e4, e5)`,
/// `-2α33 + 2α44 - e1(α34) + α35 g(∇_{e1} e4, e5)`,
/// `2α33 - 2α55 - e2(α35) - α34 g(∇_{e2} e4, e5)`.
pub fn horizontal_codazzi_relations<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    h: f64,
) -> Result<[f64; 5]> {
    let ctx2 = ctx.with_a(2.0)?;
    let at = |v: &Params| second_fundamental_form(&ctx2, chart, v, AlphaRoute::Auto);
    let base = at(u)?;
    if base.theta > FRAME_TOL {
        return Err(GeoError::NotHorizontalNormal(base.theta));
    }
    let mut neighbours: Vec<(ShapeData, ShapeData)> = Vec::with_capacity(5);
    for k in 0..5 {
        let (mut up, mut down) = (*u, *u);
        up[k] += h;
        down[k] -= h;
        neighbours.push((at(&up)?, at(&down)?));
    }
    // e_i(α_jk) through the chart coordinates
    let d = |i: usize, r: usize, c: usize| -> f64 {
        (0..5)
            .map(|k| base.frame_in_chart[(i, k)] * (neighbours[k].0.alpha[(r, c)] - neighbours[k].1.alpha[(r, c)]))
            .sum::<f64>()
            / (2.0 * h)
    };
    // g(∇_{e_i} e4, e5) with the frame field transported along the chart lines
    let here = ctx2.moved_to(base.base)?;
    let conn = |i: usize| -> Result<f64> {
        let mut total = HPoint::ZERO;
        for k in 0..5 {
            let c = base.frame_in_chart[(i, k)];
            if c == 0.0 {
                continue;
            }
            let dk = here.nabla_along(base.tangents[k], |s| {
                let mut v = *u;
                v[k] += s;
                let sh = at(&v)?;
                Ok((sh.base, sh.frame[3]))
            })?;
            total += dk.scale(c);
        }
        Ok(metric(2.0, &base.base, total, base.frame[4]))
    };
    let al = |r: usize, c: usize| base.alpha[(r, c)];
    let (w1, w2) = (conn(0)?, conn(1)?);
    Ok([
        4.0 * al(2, 3) - d(0, 2, 2),
        4.0 * al(2, 4) + d(1, 2, 2),
        2.0 * al(3, 4) - d(0, 2, 3) - al(2, 3) * w1,
        -2.0 * al(2, 2) + 2.0 * al(3, 3) - d(0, 2, 3) + al(2, 4) * w1,
        2.0 * al(2, 2) - 2.0 * al(4, 4) - d(1, 2, 4) - al(2, 3) * w2,
    ])
}

/// `1 + α15² + α45² + α55² + cos²θ - α25² cot²θ`, which an extrinsically
/// homogeneous non-horizontal hypersurface would need to annihilate.
pub fn nonhorizontal_obstruction(alpha: &Matrix5, theta: f64) -> f64 {
    let c = libm::cos(theta);
    let cot = c / libm::sin(theta);
    let sq = |i: usize, j: usize| alpha[(i, j)] * alpha[(i, j)];
    1.0 + sq(0, 4) + sq(3, 4) + sq(4, 4) + c * c - sq(1, 4) * cot * cot
}

/// Frame `e1 .. e5` of [`frame_horizontal`] rescaled to `g_a`.
pub fn renormalized_horizontal_frame(ctx: &GeoContext, n: HPoint) -> Result<[HPoint; 5]> {
    let p = *ctx.base();
    let f = frame_horizontal(&ctx.with_a(2.0)?, n, default_contact(&p))?;
    renormalize(ctx.a(), &p, &f)
}
