//! Intrinsic geometry of a chart by finite differences, and the Gauss and
//! Codazzi residuals comparing it with the ambient side.

use super::angle::{angle, normal_from_g1};
use super::chart::{horizontal_tangents, HypersurfaceChart, Params};
use super::frames::FRAME_TOL;
use super::shape::{alpha_in_chart, orthonormal_normal, second_fundamental_form, AlphaRoute, Matrix5};
use crate::cp3::{curvature_ra, metric, GeoContext};
use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, SpherePoint};

/// Outer finite-difference step for intrinsic quantities.
pub const INTRINSIC_STEP: f64 = 1e-4;

/// `Γ[k][(i, j)] = Γ^k_ij`.
pub type Christoffel = [Matrix5; 5];
/// `R[i][j][k][l] = g(R(∂_i, ∂_j) ∂_k, ∂_l)`.
pub type Riemann = [[[[f64; 5]; 5]; 5]; 5];

fn shifted(u: &Params, i: usize, s: f64) -> Params {
    let mut v = *u;
    v[i] += s;
    v
}

/// Induced `g_a` metric on the coordinate tangents.
pub fn chart_metric<C: HypersurfaceChart + ?Sized>(a: f64, chart: &C, u: &Params) -> Result<Matrix5> {
    let (p, t) = horizontal_tangents(chart, u)?;
    Ok(Matrix5::from_fn(|r, c| metric(a, &p, t[r], t[c])))
}

pub fn christoffel<C: HypersurfaceChart + ?Sized>(a: f64, chart: &C, u: &Params, h: f64) -> Result<Christoffel> {
    let mut dg = [Matrix5::zeros(); 5];
    for (k, d) in dg.iter_mut().enumerate() {
        *d = (chart_metric(a, chart, &shifted(u, k, h))? - chart_metric(a, chart, &shifted(u, k, -h))?) / (2.0 * h);
    }
    let inv = chart_metric(a, chart, u)?.try_inverse().ok_or(GeoError::DegenerateChart("singular induced metric"))?;
    // Γ_lij = (∂_i g_jl + ∂_j g_il - ∂_l g_ij) / 2
    let lower = |l: usize, i: usize, j: usize| 0.5 * (dg[i][(j, l)] + dg[j][(i, l)] - dg[l][(i, j)]);
    Ok(core::array::from_fn(|k| Matrix5::from_fn(|i, j| (0..5).map(|l| inv[(k, l)] * lower(l, i, j)).sum())))
}

/// Riemann tensor of the induced metric, with the convention
/// `R(X,Y) = ∇_X ∇_Y - ∇_Y ∇_X - ∇_[X,Y]`.
pub fn riemann<C: HypersurfaceChart + ?Sized>(a: f64, chart: &C, u: &Params, h: f64) -> Result<Riemann> {
    let gamma = christoffel(a, chart, u, h)?;
    let mut dgamma = [[Matrix5::zeros(); 5]; 5];
    for i in 0..5 {
        let plus = christoffel(a, chart, &shifted(u, i, h), h)?;
        let minus = christoffel(a, chart, &shifted(u, i, -h), h)?;
        for m in 0..5 {
            dgamma[i][m] = (plus[m] - minus[m]) / (2.0 * h);
        }
    }
    let g = chart_metric(a, chart, u)?;
    let mut out = [[[[0.0; 5]; 5]; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                // R^m_ijk
                let up: [f64; 5] = core::array::from_fn(|m| {
                    let mut v = dgamma[i][m][(j, k)] - dgamma[j][m][(i, k)];
                    for n in 0..5 {
                        v += gamma[n][(j, k)] * gamma[m][(i, n)] - gamma[n][(i, k)] * gamma[m][(j, n)];
                    }
                    v
                });
                for l in 0..5 {
                    out[i][j][k][l] = (0..5).map(|m| up[m] * g[(m, l)]).sum();
                }
            }
        }
    }
    Ok(out)
}

/// A deliberate error added to `α(∂_i, ∂_j)` and `α(∂_j, ∂_i)`, used to show
/// that the residuals detect inconsistent data.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaCorruption {
    pub i: usize,
    pub j: usize,
    pub delta: f64,
}

/// The `g_a`-unit normal at `u`, oriented like `reference` when given.
fn normal_at<C: HypersurfaceChart + ?Sized>(
    a: f64,
    chart: &C,
    u: &Params,
    reference: Option<HPoint>,
) -> Result<(SpherePoint, HPoint)> {
    let (p, t) = horizontal_tangents(chart, u)?;
    let mut nu = orthonormal_normal(&p, &t, chart.normal_hint(u))?;
    if let Some(r) = reference {
        if nu.dot(r) < 0.0 {
            nu = -nu;
        }
    }
    Ok((p, normal_from_g1(a, &p, nu)?))
}

fn alpha_at<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    reference: Option<HPoint>,
    corruption: Option<AlphaCorruption>,
) -> Result<(SpherePoint, HPoint, Matrix5)> {
    let (p, n_a) = normal_at(ctx.a(), chart, u, reference)?;
    let mut alpha = alpha_in_chart(&ctx.moved_to(p)?, chart, u, n_a)?;
    alpha = (alpha + alpha.transpose()) * 0.5;
    if let Some(c) = corruption {
        alpha[(c.i, c.j)] += c.delta;
        if c.i != c.j {
            alpha[(c.j, c.i)] += c.delta;
        }
    }
    Ok((p, n_a, alpha))
}

/// Largest gap in the Gauss equation
/// `R^H(X,Y,Z,W) = R^a(X,Y,Z,W) + α(X,W)α(Y,Z) - α(X,Z)α(Y,W)` over the chart
/// tangents at `u`, with the left side from finite differences of the
/// induced metric.
pub fn gauss_residual<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    h: f64,
    corruption: Option<AlphaCorruption>,
) -> Result<f64> {
    let a = ctx.a();
    let intrinsic = riemann(a, chart, u, h)?;
    let (p, _, alpha) = alpha_at(ctx, chart, u, None, corruption)?;
    let (_, t) = horizontal_tangents(chart, u)?;
    let mut worst = 0.0f64;
    for i in 0..5 {
        for j in (i + 1)..5 {
            for k in 0..5 {
                let r = curvature_ra(a, &p, t[i], t[j], t[k])?;
                for l in 0..5 {
                    let ambient = metric(a, &p, r, t[l]);
                    let want = ambient + alpha[(i, l)] * alpha[(j, k)] - alpha[(i, k)] * alpha[(j, l)];
                    worst = worst.max((intrinsic[i][j][k][l] - want).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// Largest gap in the Codazzi equation
/// `g_a(R^a(X,Y)Z, N_a) = (∇_X α)(Y,Z) - (∇_Y α)(X,Z)` over the chart
/// tangents at `u`.
pub fn codazzi_residual<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    h: f64,
    corruption: Option<AlphaCorruption>,
) -> Result<f64> {
    let a = ctx.a();
    let (p, n_a, alpha) = alpha_at(ctx, chart, u, None, corruption)?;
    let (_, t) = horizontal_tangents(chart, u)?;
    let gamma = christoffel(a, chart, u, h)?;
    let mut dalpha = [Matrix5::zeros(); 5];
    for (i, d) in dalpha.iter_mut().enumerate() {
        let plus = alpha_at(ctx, chart, &shifted(u, i, h), Some(n_a), corruption)?.2;
        let minus = alpha_at(ctx, chart, &shifted(u, i, -h), Some(n_a), corruption)?.2;
        *d = (plus - minus) / (2.0 * h);
    }
    let nabla_alpha = |i: usize, j: usize, k: usize| -> f64 {
        let mut v = dalpha[i][(j, k)];
        for m in 0..5 {
            v -= gamma[m][(i, j)] * alpha[(m, k)] + gamma[m][(i, k)] * alpha[(j, m)];
        }
        v
    };
    let mut worst = 0.0f64;
    for i in 0..5 {
        for j in (i + 1)..5 {
            for k in 0..5 {
                let lhs = metric(a, &p, curvature_ra(a, &p, t[i], t[j], t[k])?, n_a);
                let rhs = nabla_alpha(i, j, k) - nabla_alpha(j, i, k);
                worst = worst.max((lhs - rhs).abs());
            }
        }
    }
    Ok(worst)
}

/// `α(e_i, e_3) - e_i(θ) - δ_{i5}/2` for the non-horizontal frame of the
/// nearly Kähler metric, with `e_i(θ)` from finite differences of the angle.
pub fn angle_derivative_gaps<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    h: f64,
) -> Result<[f64; 5]> {
    let ctx2 = ctx.with_a(2.0)?;
    let shape = second_fundamental_form(&ctx2, chart, u, AlphaRoute::Chart)?;
    if shape.theta <= FRAME_TOL || shape.theta >= core::f64::consts::FRAC_PI_2 - FRAME_TOL {
        return Err(GeoError::FrameDegenerate(shape.theta));
    }
    let theta_at = |v: &Params| -> Result<f64> {
        let (p, n) = normal_at(2.0, chart, v, Some(shape.normal))?;
        angle(2.0, &p, n)
    };
    let grad: [f64; 5] = {
        let mut g = [0.0; 5];
        for (k, gk) in g.iter_mut().enumerate() {
            *gk = (theta_at(&shifted(u, k, h))? - theta_at(&shifted(u, k, -h))?) / (2.0 * h);
        }
        g
    };
    Ok(core::array::from_fn(|i| {
        let ei_theta: f64 = (0..5).map(|k| shape.frame_in_chart[(i, k)] * grad[k]).sum();
        let delta = if i == 4 { 0.5 } else { 0.0 };
        shape.alpha[(i, 2)] - ei_theta - delta
    }))
}
