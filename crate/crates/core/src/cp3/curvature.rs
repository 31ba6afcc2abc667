//! Riemann curvature of `g_a`: closed form and a nested finite-difference
//! evaluation. Convention: `R(X,Y) = ∇_X ∇_Y - ∇_Y ∇_X - ∇_[X,Y]`.

use super::connection::GeoContext;
use super::structures::{horizontal_project, j, j1, metric, product, wedge};
use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, KillingField, Sp2, SpherePoint};

/// Closed-form `R^a(x, y) z` at the lift `p`.
pub fn curvature_ra(a: f64, p: &SpherePoint, x: HPoint, y: HPoint, z: HPoint) -> Result<HPoint> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    let w = |u: HPoint, v: HPoint, t: HPoint| wedge(a, p, u, v, t);
    let pr = |v: HPoint| product(p, v);
    let jj = |v: HPoint| j(p, v);
    let xyz = w(x, y, z);
    let kahler = xyz + w(j1(x), j1(y), z) + j1(z).scale(2.0 * metric(a, p, x, j1(y)));
    let nearly = xyz + w(jj(x), jj(y), z) + jj(z).scale(2.0 * metric(a, p, x, jj(y)));
    let mixed = w(x, y, pr(z)) + pr(xyz) - pr(w(x, y, pr(z))).scale((a + 2.0) / a);
    Ok(xyz.scale((a - 1.0) * (a + 2.0) / (a * a))
        + kahler.scale(1.0 / a)
        + nearly.scale((1.0 - a) / (a * a))
        + mixed.scale((1.0 - a) / a))
}

/// `R^a(X, Y) Z` at the base of `ctx` from nested Koszul evaluations.
pub fn curvature_numeric(ctx: &GeoContext, x: &KillingField, y: &KillingField, z: &KillingField) -> Result<HPoint> {
    let p = *ctx.base();
    let value = |f: &KillingField, q: &SpherePoint| horizontal_project(q, f.value(q.point()));
    let inner = |outer: &KillingField, inner: &KillingField| -> Result<HPoint> {
        ctx.nabla_field(value(outer, &p), |q| ctx.moved_to(*q)?.koszul_nabla(inner, z))
    };
    let xy = x.bracket(y).ok_or(GeoError::InvalidInput("curvature needs projectable fields"))?;
    Ok(inner(x, y)? - inner(y, x)? - ctx.koszul_nabla(&xy, z)?)
}

/// Sectional curvature `g_a(R(x,y)y, x) / |x ∧ y|^2` from the closed form.
pub fn sectional_curvature(a: f64, p: &SpherePoint, x: HPoint, y: HPoint) -> Result<f64> {
    let r = curvature_ra(a, p, x, y, y)?;
    let area = {
        let xy = metric(a, p, x, y);
        metric(a, p, x, x) * metric(a, p, y, y) - xy * xy
    };
    if !(area > 0.0) {
        return Err(GeoError::DegenerateDirection);
    }
    Ok(metric(a, p, r, x) / area)
}

/// `(∇_x R)(y, z) w` with Killing extensions, one layer of finite differences.
pub fn nabla_curvature(ctx: &GeoContext, x: HPoint, y: HPoint, z: HPoint, w: HPoint) -> Result<HPoint> {
    let a = ctx.a();
    let p = *ctx.base();
    let ext = |v: HPoint| KillingField::Left(Sp2::with_value_at(&p, v));
    let (yf, zf, wf) = (ext(y), ext(z), ext(w));
    let val = |f: &KillingField, q: &SpherePoint| horizontal_project(q, f.value(q.point()));
    let whole = ctx.nabla_field(x, |q| curvature_ra(a, q, val(&yf, q), val(&zf, q), val(&wf, q)))?;
    let (ny, nz, nw) = (ctx.nabla_killing(x, &yf)?, ctx.nabla_killing(x, &zf)?, ctx.nabla_killing(x, &wf)?);
    Ok(whole - curvature_ra(a, &p, ny, z, w)? - curvature_ra(a, &p, y, nz, w)? - curvature_ra(a, &p, y, z, nw)?)
}
