//! Randomized residuals of the structure identities of `(CP3, g_a)`.

use alloc::vec::Vec;

use super::connection::GeoContext;
use super::curvature::{curvature_numeric, curvature_ra, nabla_curvature};
use super::structures::{horizontal_project, j, j1, metric, product, proj_d1, proj_d2, wedge};
use super::tensor::{difference_tensor_a, nabla_g, nabla_j, nabla_j1, nabla_j_closed, tensor_g};
use crate::error::Result;
use crate::halgebra::{HPoint, KillingField, Sp2, SpherePoint};
use crate::sampling::{horizontal_unit, sample_rng, sp2_element, sphere_point, unit_complex};

/// How many layers of finite differences a residual goes through; decides
/// which tolerance applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Algebraic,
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub order: Order,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensorReport {
    pub a: f64,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
    /// Least-squares constant `c` in `|G(x,y)|^2 = c (|x|^2|y|^2 - g(x,y)^2 - g(x,Jy)^2)`.
    pub constant_type_fit: f64,
}

impl StructureTensorReport {
    pub fn get(&self, name: &str) -> Option<f64> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.residual)
    }

    pub fn all_finite(&self) -> bool {
        self.checks.iter().all(|c| c.residual.is_finite())
    }

    /// Largest residual of each order.
    pub fn max_by_order(&self, order: Order) -> f64 {
        self.checks.iter().filter(|c| c.order == order).map(|c| c.residual).fold(0.0, f64::max)
    }
}

fn gauge_defect(
    ctx: &GeoContext,
    p: &SpherePoint,
    x: HPoint,
    y: HPoint,
    z: HPoint,
    u: crate::halgebra::Quaternion,
) -> Result<f64> {
    let a = ctx.a();
    let q = p.right_mul(u);
    let (xq, yq, zq) = (x.right_mul(u), y.right_mul(u), z.right_mul(u));
    let at_q = GeoContext::new(a, q)?.with_step(ctx.fd_step())?;
    let mut d = 0.0f64;
    d = d.max(j1(xq).max_abs_diff(j1(x).right_mul(u)));
    d = d.max(product(&q, xq).max_abs_diff(product(p, x).right_mul(u)));
    d = d.max(j(&q, xq).max_abs_diff(j(p, x).right_mul(u)));
    d = d.max((metric(a, &q, xq, yq) - metric(a, p, x, y)).abs());
    d = d.max(curvature_ra(a, &q, xq, yq, zq)?.max_abs_diff(curvature_ra(a, p, x, y, z)?.right_mul(u)));
    d = d.max(tensor_g(&at_q, xq, yq)?.max_abs_diff(tensor_g(ctx, x, y)?.right_mul(u)));
    Ok(d)
}

fn isometry_defect(a: f64, p: &SpherePoint, x: HPoint, y: HPoint, m: &Sp2) -> Result<f64> {
    let u = m.flow(1.0);
    let q = SpherePoint::normalize(u.apply(p.point()))?;
    let (ux, uy) = (u.apply(x), u.apply(y));
    let mut d = (metric(a, &q, ux, uy) - metric(a, p, x, y)).abs();
    d = d.max(product(&q, ux).max_abs_diff(u.apply(product(p, x))));
    d = d.max(j(&q, ux).max_abs_diff(u.apply(j(p, x))));
    Ok(d)
}

fn sample(ctx_a: f64, step: f64, seed: u64, index: u64) -> Result<([f64; NAMES.len()], f64, f64)> {
    let mut rng = sample_rng(seed, index);
    let p = sphere_point(&mut rng);
    let [x, y, z, w] = core::array::from_fn(|_| horizontal_unit(&mut rng, &p));
    let u = unit_complex(&mut rng);
    let m = sp2_element(&mut rng).scale(0.5);
    let ctx = GeoContext::new(ctx_a, p)?.with_step(step)?;
    let nk = ctx.with_a(2.0)?;
    let one = ctx.with_a(1.0)?;
    let a = ctx_a;
    let g = |u: HPoint, v: HPoint| metric(2.0, &p, u, v);
    let ga = |u: HPoint, v: HPoint| metric(a, &p, u, v);
    let w2 = |u: HPoint, v: HPoint, t: HPoint| wedge(2.0, &p, u, v, t);
    let jj = |v: HPoint| j(&p, v);
    let gt = |u: HPoint, v: HPoint| tensor_g(&nk, u, v);

    let gxy = gt(x, y)?;
    let mut r = [0.0; NAMES.len()];
    r[0] = (gxy + gt(y, x)?).max_abs();
    let lhs = g(gxy, gxy);
    let base = {
        let (u, v) = (g(x, y), g(x, jj(y)));
        g(x, x) * g(y, y) - u * u - v * v
    };
    r[1] = (lhs - base).abs();
    r[2] = (gt(x, gt(y, z)?)? - w2(y, z, x) - jj(w2(y, z, jj(x)))).max_abs();
    r[3] = (g(gxy, gt(z, w)?) - g(w2(z, w, y), x) - g(jj(w2(z, w, jj(y))), x)).abs();
    r[4] = (gt(x, jj(y))? + jj(gxy)).max_abs();
    r[5] = gt(proj_d1(&p, x), proj_d1(&p, y))?.max_abs();
    // difference tensor from the connections of g_a and g_1
    let (xf, yf) = (KillingField::Left(Sp2::with_value_at(&p, x)), KillingField::Left(Sp2::with_value_at(&p, y)));
    let diff = ctx.koszul_nabla(&xf, &yf)? - one.koszul_nabla(&xf, &yf)?;
    r[6] = (diff - difference_tensor_a(&nk, a, x, y)?).max_abs();
    // Levi-Civita properties of ∇^a
    let zf = KillingField::Left(Sp2::with_value_at(&p, z));
    let nxy = ctx.koszul_nabla(&xf, &yf)?;
    let bracket = horizontal_project(&p, xf.bracket(&yf).expect("left").value(p.point()));
    r[7] = (nxy - ctx.koszul_nabla(&yf, &xf)? - bracket).max_abs();
    let h = ctx.fd_step();
    let along = |s: f64| -> Result<f64> {
        let q = crate::halgebra::sphere_exp(&p, x, s)?;
        let v = |f: &KillingField| horizontal_project(&q, f.value(q.point()));
        Ok(metric(a, &q, v(&yf), v(&zf)))
    };
    let dg = (along(h)? - along(-h)?) / (2.0 * h);
    r[8] = (dg - ga(nxy, z) - ga(y, ctx.koszul_nabla(&xf, &zf)?)).abs();
    // closed-form curvature
    let rxyz = curvature_ra(a, &p, x, y, z)?;
    r[9] = (rxyz + curvature_ra(a, &p, y, x, z)?).max_abs();
    r[10] = (ga(rxyz, w) - ga(curvature_ra(a, &p, z, w, x)?, y)).abs();
    r[11] = (rxyz + curvature_ra(a, &p, y, z, x)? + curvature_ra(a, &p, z, x, y)?).max_abs();
    r[12] = (ga(rxyz, w) + ga(curvature_ra(a, &p, x, y, w)?, z)).abs();
    let num = curvature_numeric(&ctx, &xf, &yf, &zf)?;
    r[13] = num.max_abs_diff(rxyz) / rxyz.max_abs().max(1.0);
    r[14] = gauge_defect(&ctx, &p, x, y, z, u)?;
    r[15] = isometry_defect(a, &p, x, y, &m)?;
    // second order
    r[16] = (nabla_j1(&nk, x, y)? - gt(proj_d1(&p, x), proj_d2(&p, y))?).max_abs();
    r[17] = (nabla_j(&ctx, x, y)? - nabla_j_closed(&ctx, x, y)?).max_abs();
    r[18] = (nabla_j(&nk, x, y)? + nabla_j(&nk, y, x)?).max_abs();
    let ng = nabla_g(&nk, x, y, z)?;
    r[19] = (ng - jj(w2(y, z, x)) + x.scale(g(jj(y), z))).max_abs();
    let cyc =
        nabla_curvature(&ctx, x, y, z, w)? + nabla_curvature(&ctx, y, z, x, w)? + nabla_curvature(&ctx, z, x, y, w)?;
    r[20] = cyc.max_abs();
    Ok((r, lhs, base))
}

const NAMES: [(&str, Order); 21] = [
    ("g_skew_symmetric", Order::First),
    ("g_constant_type", Order::First),
    ("g_double", Order::First),
    ("g_inner_product", Order::First),
    ("g_j_antilinear", Order::First),
    ("g_vanishes_on_d1", Order::First),
    ("difference_tensor", Order::First),
    ("torsion", Order::First),
    ("metric_compatibility", Order::First),
    ("curvature_antisymmetry", Order::Algebraic),
    ("curvature_pair_symmetry", Order::Algebraic),
    ("curvature_first_bianchi", Order::Algebraic),
    ("curvature_skew_adjoint", Order::Algebraic),
    ("curvature_numeric_relative", Order::Second),
    ("gauge_covariance", Order::First),
    ("isometry_equivariance", Order::Algebraic),
    ("nabla_j1", Order::Second),
    ("nabla_a_j", Order::Second),
    ("nabla_j_symmetric_part", Order::Second),
    ("nabla_g", Order::Second),
    ("curvature_second_bianchi", Order::Second),
];

/// Maximum residual of every identity over `n` random samples.
pub fn identity_suite(a: f64, step: f64, n: usize, seed: u64) -> Result<StructureTensorReport> {
    let mut max = [0.0f64; NAMES.len()];
    let (mut num, mut den) = (0.0, 0.0);
    for k in 0..n.max(1) {
        let (r, lhs, base) = sample(a, step, seed, k as u64)?;
        for (m, v) in max.iter_mut().zip(r) {
            *m = m.max(v);
        }
        num += lhs * base;
        den += base * base;
    }
    let checks =
        NAMES.iter().zip(max).map(|(&(name, order), residual)| IdentityCheck { name, order, residual }).collect();
    Ok(StructureTensorReport {
        a,
        samples: n.max(1),
        seed,
        checks,
        constant_type_fit: if den > 0.0 { num / den } else { f64::NAN },
    })
}
