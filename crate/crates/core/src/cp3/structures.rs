//! Pointwise tensors on the horizontal space `(p, p i)^⊥` at a lift `p`.
//!
//! A tangent vector of CP3 at `[p]` is represented by its horizontal lift at
//! `p`. The lifted distributions are `D1 = span{p j, p k}` and
//! `D2 = (p H)^⊥`.

use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, Quaternion, SpherePoint};

/// Removes the components along `p` and the fibre direction `p i`.
pub fn horizontal_project(p: &SpherePoint, v: HPoint) -> HPoint {
    let p = p.point();
    let pi = p.right_mul(Quaternion::I);
    v - p.scale(v.dot(p)) - pi.scale(v.dot(pi))
}

/// Largest of `|<v,p>|` and `|<v,p i>|`.
pub fn vertical_defect(p: &SpherePoint, v: HPoint) -> f64 {
    let p = p.point();
    libm::fmax(libm::fabs(v.dot(p)), libm::fabs(v.dot(p.right_mul(Quaternion::I))))
}

pub fn proj_d1(p: &SpherePoint, v: HPoint) -> HPoint {
    let p = p.point();
    let pj = p.right_mul(Quaternion::J);
    let pk = p.right_mul(Quaternion::K);
    pj.scale(v.dot(pj)) + pk.scale(v.dot(pk))
}

/// Projection onto `D2`; on horizontal input this is `v - P1 v`.
pub fn proj_d2(p: &SpherePoint, v: HPoint) -> HPoint {
    let pt = p.point();
    v - pt.right_mul(pt.hdot(v))
}

/// Kähler structure of the Fubini-Study metric: `J1 v = v i`.
pub fn j1(v: HPoint) -> HPoint {
    v.right_mul(Quaternion::I)
}

/// Almost product structure: `-1` on `D1`, `+1` on `D2`.
pub fn product(p: &SpherePoint, v: HPoint) -> HPoint {
    v - proj_d1(p, v).scale(2.0)
}

/// Nearly Kähler almost complex structure `J = P J1 = J1 P`.
pub fn j(p: &SpherePoint, v: HPoint) -> HPoint {
    product(p, j1(v))
}

/// `g_a(x, y) = g1(P1 x, P1 y) + a g1(P2 x, P2 y)` on horizontal vectors.
pub fn metric(a: f64, p: &SpherePoint, x: HPoint, y: HPoint) -> f64 {
    let x1 = proj_d1(p, x);
    let y1 = proj_d1(p, y);
    x1.dot(y1) + a * (x - x1).dot(y - y1)
}

/// The same metric through the product structure
/// `(1+a)/2 g1(x, y) + (a-1)/2 g1(P x, y)`.
pub fn metric_by_product(a: f64, p: &SpherePoint, x: HPoint, y: HPoint) -> f64 {
    0.5 * (1.0 + a) * x.dot(y) + 0.5 * (a - 1.0) * product(p, x).dot(y)
}

pub fn norm(a: f64, p: &SpherePoint, x: HPoint) -> f64 {
    libm::sqrt(metric(a, p, x, x))
}

/// `(x ∧_a y) z = g_a(y, z) x - g_a(x, z) y`.
pub fn wedge(a: f64, p: &SpherePoint, x: HPoint, y: HPoint, z: HPoint) -> HPoint {
    x.scale(metric(a, p, y, z)) - y.scale(metric(a, p, x, z))
}

/// Inverse of the metric operator: the `g_a`-gradient direction of the
/// covector `g1(v, .)`, i.e. `P1 v + P2 v / a`.
pub fn raise(a: f64, p: &SpherePoint, v: HPoint) -> HPoint {
    let v1 = proj_d1(p, v);
    v1 + (v - v1).scale(1.0 / a)
}

/// A `g1`-orthonormal horizontal basis: `p j, p k` spanning `D1`, then four
/// vectors spanning `D2`.
pub fn horizontal_basis(p: &SpherePoint) -> [HPoint; 6] {
    let pt = p.point();
    let (p1, p2) = (pt.q1, pt.q2);
    // a unit vector quaternionically orthogonal to p
    let r = if p1.norm_sqr() >= p2.norm_sqr() {
        HPoint::new(-(p1 * p2.conj()), Quaternion::real(p1.norm_sqr()))
    } else {
        HPoint::new(Quaternion::real(p2.norm_sqr()), -(p2 * p1.conj()))
    }
    .normalized();
    [
        pt.right_mul(Quaternion::J),
        pt.right_mul(Quaternion::K),
        r,
        r.right_mul(Quaternion::I),
        r.right_mul(Quaternion::J),
        r.right_mul(Quaternion::K),
    ]
}

/// A horizontal tangent vector of CP3 together with the lift it is expressed at.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HTangent {
    pub base: SpherePoint,
    pub v: HPoint,
}

impl HTangent {
    pub const HORIZONTAL_TOL: f64 = 1e-12;

    pub fn new(base: SpherePoint, v: HPoint) -> Result<Self> {
        let d = vertical_defect(&base, v);
        if d > Self::HORIZONTAL_TOL * libm::fmax(1.0, v.norm()) {
            return Err(GeoError::NotHorizontal(d));
        }
        Ok(Self { base, v })
    }

    pub fn project(base: SpherePoint, v: HPoint) -> Self {
        Self { base, v: horizontal_project(&base, v) }
    }

    /// The same tangent vector expressed at the lift `p z` for a unit complex `z`.
    pub fn regauge(&self, z: Quaternion) -> Self {
        Self { base: self.base.right_mul(z), v: self.v.right_mul(z) }
    }

    pub fn proj_d1(&self) -> Self {
        Self { v: proj_d1(&self.base, self.v), ..*self }
    }

    pub fn proj_d2(&self) -> Self {
        Self { v: proj_d2(&self.base, self.v), ..*self }
    }

    pub fn j1(&self) -> Self {
        Self { v: j1(self.v), ..*self }
    }

    pub fn product(&self) -> Self {
        Self { v: product(&self.base, self.v), ..*self }
    }

    pub fn j(&self) -> Self {
        Self { v: j(&self.base, self.v), ..*self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Quaternion as Q;

    fn point() -> SpherePoint {
        SpherePoint::normalize(HPoint::new(Q::new(0.3, -0.2, 0.5, 0.1), Q::new(0.4, 0.6, -0.1, 0.2))).unwrap()
    }

    fn horizontal(p: &SpherePoint, seed: f64) -> HPoint {
        let raw = HPoint::from_array(core::array::from_fn(|k| libm::sin(seed * (k as f64 + 1.3))));
        horizontal_project(p, raw)
    }

    #[test]
    fn basis_is_orthonormal_and_horizontal() {
        for p in [point(), SpherePoint::new(HPoint::new(Q::ZERO, Q::ONE)).unwrap()] {
            let b = horizontal_basis(&p);
            for i in 0..6 {
                assert!(vertical_defect(&p, b[i]) < 1e-15);
                for k in 0..6 {
                    let want = if i == k { 1.0 } else { 0.0 };
                    assert!((b[i].dot(b[k]) - want).abs() < 1e-14);
                }
            }
            for v in &b[2..] {
                assert!(proj_d1(&p, *v).max_abs() < 1e-15);
                assert!(p.point().hdot(*v).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn projections() {
        let p = point();
        let pj = p.point().right_mul(Q::J);
        assert!(proj_d1(&p, pj).max_abs_diff(pj) < 1e-15);
        assert!(proj_d2(&p, pj).max_abs() < 1e-15);
        let x = horizontal(&p, 0.7);
        let x1 = proj_d1(&p, x);
        let x2 = proj_d2(&p, x);
        assert!((x1 + x2).max_abs_diff(x) < 1e-15);
        assert!(proj_d1(&p, x2).max_abs() < 1e-15);
        assert!(proj_d1(&p, x1).max_abs_diff(x1) < 1e-15);
        let r = horizontal_basis(&p)[3];
        assert!(proj_d2(&p, r).max_abs_diff(r) < 1e-15);
    }

    #[test]
    fn complex_and_product_structures() {
        let p = point();
        let pj = p.point().right_mul(Q::J);
        // J1 (p j) = p (j i) = -p k ; P (p j) = -p j
        assert!(j1(pj).max_abs_diff(-p.point().right_mul(Q::K)) < 1e-15);
        assert!(product(&p, pj).max_abs_diff(-pj) < 1e-15);
        let x = horizontal(&p, 1.9);
        assert!(j(&p, j(&p, x)).max_abs_diff(-x) < 1e-14);
        assert!(j1(j1(x)).max_abs_diff(-x) < 1e-14);
        assert!(product(&p, product(&p, x)).max_abs_diff(x) < 1e-14);
        // P = -J J1, J J1 = J1 J
        assert!(j(&p, j1(x)).max_abs_diff(-product(&p, x)) < 1e-14);
        assert!(j(&p, j1(x)).max_abs_diff(j1(j(&p, x))) < 1e-14);
        for v in [j1(x), product(&p, x), j(&p, x)] {
            assert!(vertical_defect(&p, v) < 1e-14);
        }
    }

    #[test]
    fn metric_eigenstructure() {
        let p = point();
        let b = horizontal_basis(&p);
        for a in [0.5, 1.0, 2.0, 7.0] {
            assert!((metric(a, &p, b[0], b[0]) - 1.0).abs() < 1e-14);
            assert!((metric(a, &p, b[4], b[4]) - a).abs() < 1e-14);
            let x = horizontal(&p, 0.3);
            let y = horizontal(&p, 2.2);
            assert!((metric(a, &p, x, y) - metric_by_product(a, &p, x, y)).abs() < 1e-14);
            assert!((metric(a, &p, x, y) - metric(a, &p, y, x)).abs() < 1e-15);
        }
        let x = horizontal(&p, 0.3);
        let y = horizontal(&p, 2.2);
        let nk = 1.5 * x.dot(y) + 0.5 * x.dot(product(&p, y));
        assert!((metric(2.0, &p, x, y) - nk).abs() < 1e-14);
    }

    #[test]
    fn gauge_covariance() {
        let p = point();
        let z = Q::complex(libm::cos(0.7), libm::sin(0.7));
        let x = HTangent::new(p, horizontal(&p, 0.9)).unwrap();
        let moved = x.regauge(z);
        assert!(vertical_defect(&moved.base, moved.v) < 1e-14);
        assert!(moved.j().v.max_abs_diff(x.j().v.right_mul(z)) < 1e-14);
        assert!(moved.proj_d1().v.max_abs_diff(x.proj_d1().v.right_mul(z)) < 1e-14);
        let y = HTangent::new(p, horizontal(&p, 1.4)).unwrap();
        let my = y.regauge(z);
        assert!((metric(3.0, &moved.base, moved.v, my.v) - metric(3.0, &p, x.v, y.v)).abs() < 1e-14);
    }

    #[test]
    fn rejects_vertical_vector() {
        let p = point();
        let err = HTangent::new(p, p.point().right_mul(Q::I)).unwrap_err();
        assert!(matches!(err, GeoError::NotHorizontal(_)));
    }
}
