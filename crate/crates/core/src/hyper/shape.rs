//! Second fundamental form, principal curvatures and the Hopf condition.

use alloc::vec::Vec;

use nalgebra::{SMatrix, SVector};

use super::angle::{angle, classify, normal_from_g1, AngleClass, CLASSIFY_TOL};
use super::chart::{horizontal_tangents, HypersurfaceChart, Params};
use super::frames::{default_contact, frame_horizontal, frame_nonhorizontal, renormalize, FRAME_TOL};
use crate::cp3::{horizontal_basis, j, j1, metric, ConnectionMode, GeoContext};
use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, KillingField, Sp2, SpherePoint};

pub type Matrix5 = SMatrix<f64, 5, 5>;
type Vector5 = SVector<f64, 5>;

/// How the second fundamental form is differentiated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AlphaRoute {
    /// Killing tangents when the chart offers them, the chart otherwise.
    #[default]
    Auto,
    /// Finite differences of the chart tangents along coordinate lines.
    Chart,
}

/// Everything computed at one point of a hypersurface for one metric `g_a`.
#[derive(Clone, Debug)]
pub struct ShapeData {
    pub a: f64,
    pub base: SpherePoint,
    /// Horizontal chart tangents at the base.
    pub tangents: [HPoint; 5],
    /// `g`-unit normal of the nearly Kähler metric.
    pub normal: HPoint,
    /// `g_a`-unit normal.
    pub normal_a: HPoint,
    /// Nearly Kähler angle.
    pub theta: f64,
    pub theta_a: f64,
    pub class: AngleClass,
    /// Canonical frame of the nearly Kähler normal, rescaled to `g_a`-unit length.
    pub frame: [HPoint; 5],
    /// Rows: the frame vectors in terms of `tangents`.
    pub frame_in_chart: Matrix5,
    /// `α(e_i, e_j) = g_a(∇^a_{e_i} e_j, N_a)` in the rescaled frame.
    pub alpha: Matrix5,
    /// `α` against the chart tangents, when the chart route was used.
    pub alpha_chart: Option<Matrix5>,
}

impl ShapeData {
    pub fn symmetry_defect(&self) -> f64 {
        (self.alpha - self.alpha.transpose()).amax()
    }

    fn symmetric(&self) -> Matrix5 {
        (self.alpha + self.alpha.transpose()) * 0.5
    }

    /// `g_a`-Gram matrix of the frame; diagonal up to rounding exactly when the
    /// canonical frame is `g_a`-orthogonal.
    pub fn frame_gram(&self) -> Matrix5 {
        Matrix5::from_fn(|r, c| metric(self.a, &self.base, self.frame[r], self.frame[c]))
    }

    /// Trace of the shape operator.
    pub fn mean_curvature(&self) -> f64 {
        self.alpha.trace()
    }
}

pub(crate) fn orthonormal_normal(p: &SpherePoint, t: &[HPoint; 5], hint: Option<HPoint>) -> Result<HPoint> {
    let mut ortho: Vec<HPoint> = Vec::with_capacity(5);
    for v in t {
        let w = ortho.iter().fold(*v, |w, o| w - o.scale(o.dot(w)));
        let len = w.norm();
        if !(len > 1e-10) {
            return Err(GeoError::DegenerateChart("tangent images are not independent"));
        }
        ortho.push(w.scale(1.0 / len));
    }
    let mut best = HPoint::ZERO;
    for b in horizontal_basis(p) {
        let w = ortho.iter().fold(b, |w, o| w - o.scale(o.dot(w)));
        if w.norm() > best.norm() {
            best = w;
        }
    }
    let mut nu = best.normalized();
    let flip = match hint {
        Some(h) => nu.dot(h) < 0.0,
        None => {
            // first clearly non-zero coordinate in the horizontal basis is positive
            let c = horizontal_basis(p).map(|b| b.dot(nu));
            c.iter().find(|x| x.abs() > 1e-3).is_some_and(|x| *x < 0.0)
        }
    };
    if flip {
        nu = -nu;
    }
    Ok(nu)
}

/// Coefficient rows expressing each `target` in the span of `span`.
fn coefficients_in(span: &[HPoint; 5], target: &[HPoint; 5]) -> Result<Matrix5> {
    let gram = Matrix5::from_fn(|r, c| span[r].dot(span[c]));
    let lu = gram.lu();
    let mut out = Matrix5::zeros();
    for (i, e) in target.iter().enumerate() {
        let rhs = Vector5::from_fn(|k, _| span[k].dot(*e));
        let c = lu.solve(&rhs).ok_or(GeoError::DegenerateChart("singular tangent Gram matrix"))?;
        let back = (0..5).fold(HPoint::ZERO, |acc, k| acc + span[k].scale(c[k]));
        if back.max_abs_diff(*e) > 1e-8 * (1.0 + e.max_abs()) {
            return Err(GeoError::DegenerateChart("frame vector is not tangent"));
        }
        out.set_row(i, &c.transpose());
    }
    Ok(out)
}

fn independent_killing(p: &SpherePoint, fields: &[Sp2]) -> Option<([Sp2; 5], [HPoint; 5])> {
    let mut chosen: Vec<(Sp2, HPoint)> = Vec::with_capacity(5);
    let mut ortho: Vec<HPoint> = Vec::with_capacity(5);
    for k in fields {
        let v = crate::cp3::horizontal_project(p, k.apply(p.point()));
        let w = ortho.iter().fold(v, |w, o| w - o.scale(o.dot(w)));
        if w.norm() > 1e-3 * (1.0 + v.norm()) {
            ortho.push(w.normalized());
            chosen.push((*k, v));
            if chosen.len() == 5 {
                break;
            }
        }
    }
    if chosen.len() < 5 {
        return None;
    }
    Some((core::array::from_fn(|k| chosen[k].0), core::array::from_fn(|k| chosen[k].1)))
}

/// The canonical frame of the nearly Kähler normal `n` at the base of `ctx2`
/// (a context with `a = 2`), together with the angle.
fn canonical_frame(ctx2: &GeoContext, n: HPoint) -> Result<([HPoint; 5], f64)> {
    let p = ctx2.base();
    let theta = angle(2.0, p, n)?;
    if theta <= FRAME_TOL {
        Ok((frame_horizontal(ctx2, n, default_contact(p))?, theta))
    } else {
        frame_nonhorizontal(ctx2, n)
    }
}

/// Shape data of a chart at `u` for the metric and step carried by `ctx`
/// (its base is ignored).
pub fn second_fundamental_form<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    route: AlphaRoute,
) -> Result<ShapeData> {
    let a = ctx.a();
    let (p, tangents) = horizontal_tangents(chart, u)?;
    let nu = orthonormal_normal(&p, &tangents, chart.normal_hint(u))?;
    let normal = normal_from_g1(2.0, &p, nu)?;
    let normal_a = normal_from_g1(a, &p, nu)?;
    let here = ctx.moved_to(p)?;
    let ctx2 = here.with_a(2.0)?;
    let (frame_g, theta) = canonical_frame(&ctx2, normal)?;
    let theta_a = angle(a, &p, normal_a)?;
    let frame = renormalize(a, &p, &frame_g)?;
    let frame_in_chart = coefficients_in(&tangents, &frame)?;

    let killing = match route {
        AlphaRoute::Auto => chart.killing_tangents().and_then(|ks| independent_killing(&p, &ks)),
        AlphaRoute::Chart => None,
    };
    let (alpha, alpha_chart) = if let Some((fields, values)) = killing {
        let exact = here.clone().with_mode(ConnectionMode::Killing);
        let mut ak = Matrix5::zeros();
        for m in 0..5 {
            for n in 0..5 {
                let d = exact.nabla_killing(values[m], &KillingField::Left(fields[n]))?;
                ak[(m, n)] = metric(a, &p, d, normal_a);
            }
        }
        let c = coefficients_in(&values, &frame)?;
        (c * ak * c.transpose(), None)
    } else {
        let ac = alpha_in_chart(&here, chart, u, normal_a)?;
        (frame_in_chart * ac * frame_in_chart.transpose(), Some(ac))
    };

    Ok(ShapeData {
        a,
        base: p,
        tangents,
        normal,
        normal_a,
        theta,
        theta_a,
        class: classify(theta, CLASSIFY_TOL),
        frame,
        frame_in_chart,
        alpha,
        alpha_chart,
    })
}

/// `α(∂_i, ∂_j) = g_a(∇_{∂_i} ∂_j, N_a)` with `ctx` based at the chart point.
pub fn alpha_in_chart<C: HypersurfaceChart + ?Sized>(
    ctx: &GeoContext,
    chart: &C,
    u: &Params,
    normal_a: HPoint,
) -> Result<Matrix5> {
    let t0 = chart.tangents(u)?;
    let mut out = Matrix5::zeros();
    for i in 0..5 {
        for jx in 0..5 {
            let d = ctx.nabla_along(t0[i], |s| {
                let mut v = *u;
                v[i] += s;
                let q = chart.point(&v)?;
                let w = crate::cp3::horizontal_project(&q, chart.tangents(&v)?[jx]);
                Ok((q, w))
            })?;
            out[(i, jx)] = metric(ctx.a(), ctx.base(), d, normal_a);
        }
    }
    Ok(out)
}

/// Sorted eigenvalues of the symmetric part of `α`.
pub fn principal_curvatures(shape: &ShapeData) -> [f64; 5] {
    let ev = shape.symmetric().symmetric_eigenvalues();
    let mut out: [f64; 5] = core::array::from_fn(|k| ev[k]);
    out.sort_by(f64::total_cmp);
    out
}

/// Distinct principal curvatures with multiplicities, grouping values closer
/// than `tol` to their neighbour.
pub fn clustered(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for v in sorted {
        match out.last_mut() {
            Some((_, n, last)) if (v - *last).abs() <= tol => {
                *n += 1;
                *last = v;
            }
            _ => out.push((v, 1, v)),
        }
    }
    // report the mean of each group
    let mut k = 0;
    let mut res = Vec::with_capacity(out.len());
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    for (_, n, _) in out {
        let mean = sorted[k..k + n].iter().sum::<f64>() / n as f64;
        res.push((mean, n));
        k += n;
    }
    res
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    J,
    J1,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HopfVerdict {
    pub hopf: bool,
    /// `α(ξ, ξ)` for the unit structure vector `ξ = -S N_a`.
    pub lambda: f64,
    /// `|A ξ - λ ξ|` in `g_a`.
    pub residual: f64,
}

/// Whether the structure vector `-S N_a` (`S = J` or `J1`) is principal.
pub fn is_hopf(shape: &ShapeData, structure: Structure, tol: f64) -> Result<HopfVerdict> {
    let p = &shape.base;
    let xi = match structure {
        Structure::J => j(p, shape.normal_a),
        Structure::J1 => j1(shape.normal_a),
    };
    let xi = -xi;
    // frame is g_a-orthogonal up to the rescaling; use its Gram matrix anyway
    let gram = shape.frame_gram();
    let rhs = Vector5::from_fn(|k, _| metric(shape.a, p, shape.frame[k], xi));
    let c = gram.lu().solve(&rhs).ok_or(GeoError::FrameDegenerate(shape.theta))?;
    let back = (0..5).fold(HPoint::ZERO, |acc, k| acc + shape.frame[k].scale(c[k]));
    if back.max_abs_diff(xi) > 1e-6 {
        return Err(GeoError::InvalidInput("structure vector is not tangent"));
    }
    let len2 = (c.transpose() * gram * c)[(0, 0)];
    let sym = shape.symmetric();
    // the shape operator in the frame is gram^{-1} α
    let inv = gram.try_inverse().ok_or(GeoError::FrameDegenerate(shape.theta))?;
    let lambda = (c.transpose() * sym * c)[(0, 0)] / len2;
    let a_xi = inv * sym * c;
    let diff = a_xi - c * lambda;
    let residual = libm::sqrt((diff.transpose() * gram * diff)[(0, 0)] / len2);
    Ok(HopfVerdict { hopf: residual <= tol, lambda, residual })
}
