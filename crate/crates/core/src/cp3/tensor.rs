//! The nearly Kähler tensor `G = ∇J`, the difference tensors, the contact
//! structures and numerically differentiated structure tensors.

use super::connection::GeoContext;
use super::structures::{horizontal_project, j, j1, proj_d2};
use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, KillingField, Sp2, SpherePoint};

fn nearly_kahler(ctx: &GeoContext) -> Result<GeoContext> {
    if ctx.a() == 2.0 {
        Ok(ctx.clone())
    } else {
        ctx.with_a(2.0)
    }
}

fn extension(p: &SpherePoint, v: HPoint) -> KillingField {
    KillingField::Left(Sp2::with_value_at(p, v))
}

/// `G(x, y) = ∇_x (J Y) - J ∇_x Y` for the nearly Kähler metric (`a = 2`),
/// `Y` being the Killing extension of `y`. The metric parameter of `ctx` is
/// ignored.
pub fn tensor_g(ctx: &GeoContext, x: HPoint, y: HPoint) -> Result<HPoint> {
    let nk = nearly_kahler(ctx)?;
    derivative_of_structure(&nk, x, y, j)
}

/// `(∇^a_x S) y` for a pointwise operator `S`, using the Killing extension of `y`.
fn derivative_of_structure(
    ctx: &GeoContext,
    x: HPoint,
    y: HPoint,
    op: impl Fn(&SpherePoint, HPoint) -> HPoint,
) -> Result<HPoint> {
    let p = *ctx.base();
    let yf = extension(&p, ctx.horizontal(y));
    let sy = ctx.nabla_field(x, |q| Ok(op(q, horizontal_project(q, yf.value(q.point())))))?;
    let ny = ctx.nabla_killing(x, &yf)?;
    Ok(sy - op(&p, ny))
}

/// `(∇^a_x J1) y` at the metric of `ctx`.
pub fn nabla_j1(ctx: &GeoContext, x: HPoint, y: HPoint) -> Result<HPoint> {
    derivative_of_structure(ctx, x, y, |_, v| j1(v))
}

/// `(∇^a_x J) y` at the metric of `ctx`.
pub fn nabla_j(ctx: &GeoContext, x: HPoint, y: HPoint) -> Result<HPoint> {
    derivative_of_structure(ctx, x, y, j)
}

/// `D(x, y) = ∇_x y - ∇^1_x y = 1/2 P2 G(J1 x, y)`.
pub fn difference_tensor(ctx: &GeoContext, x: HPoint, y: HPoint) -> Result<HPoint> {
    difference_tensor_a(ctx, 2.0, x, y)
}

/// `D^a(x, y) = ∇^a_x y - ∇^1_x y = (a-1)/a P2 G(J1 x, y)`.
pub fn difference_tensor_a(ctx: &GeoContext, a: f64, x: HPoint, y: HPoint) -> Result<HPoint> {
    if !(a > 0.0) {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    let g = tensor_g(ctx, j1(x), y)?;
    Ok(proj_d2(ctx.base(), g).scale((a - 1.0) / a))
}

/// `G^a(x, y) = G(x, y) + (2-a)/a J P2 G(J1 x, y)`, the closed form of `∇^a J`.
pub fn nabla_j_closed(ctx: &GeoContext, x: HPoint, y: HPoint) -> Result<HPoint> {
    let a = ctx.a();
    let p = ctx.base();
    let g = tensor_g(ctx, x, y)?;
    let corr = proj_d2(p, tensor_g(ctx, j1(x), y)?);
    Ok(g + j(p, corr).scale((2.0 - a) / a))
}

/// Tolerance on the `D2` component of a contact vector.
pub const CONTACT_TOL: f64 = 1e-8;

fn check_contact(ctx: &GeoContext, a: HPoint) -> Result<()> {
    let off = proj_d2(ctx.base(), ctx.horizontal(a)).norm();
    if off > CONTACT_TOL {
        return Err(GeoError::NotInD1(off));
    }
    Ok(())
}

/// `Φ_A x = J G(A, x)` for `A ∈ D1`.
pub fn contact_phi(ctx: &GeoContext, a: HPoint, x: HPoint) -> Result<HPoint> {
    check_contact(ctx, a)?;
    Ok(j(ctx.base(), tensor_g(ctx, a, x)?))
}

/// `Ψ_A x = J Φ_A x`.
pub fn contact_psi(ctx: &GeoContext, a: HPoint, x: HPoint) -> Result<HPoint> {
    Ok(j(ctx.base(), contact_phi(ctx, a, x)?))
}

/// `(∇_x G)(y, z)` for the nearly Kähler connection, with Killing extensions of
/// `y` and `z`. Nests two layers of finite differences.
pub fn nabla_g(ctx: &GeoContext, x: HPoint, y: HPoint, z: HPoint) -> Result<HPoint> {
    let nk = nearly_kahler(ctx)?;
    let p = *nk.base();
    let (yf, zf) = (extension(&p, nk.horizontal(y)), extension(&p, nk.horizontal(z)));
    let field = |q: &SpherePoint| -> Result<HPoint> {
        let at = nk.moved_to(*q)?;
        tensor_g(&at, horizontal_project(q, yf.value(q.point())), horizontal_project(q, zf.value(q.point())))
    };
    let whole = nk.nabla_field(x, field)?;
    let ny = nk.nabla_killing(x, &yf)?;
    let nz = nk.nabla_killing(x, &zf)?;
    Ok(whole - tensor_g(&nk, ny, nk.horizontal(z))? - tensor_g(&nk, nk.horizontal(y), nz)?)
}
