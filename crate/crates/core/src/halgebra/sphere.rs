use super::HPoint;
use crate::error::{GeoError, Result};

/// A unit vector of `H^2`, i.e. a point of the round seven-sphere. It doubles as
/// the chosen lift of a point of CP3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint(HPoint);

impl SpherePoint {
    pub const UNIT_TOL: f64 = 1e-12;

    pub fn new(p: HPoint) -> Result<Self> {
        let n = p.norm();
        if (n - 1.0).abs() > Self::UNIT_TOL {
            return Err(GeoError::NotOnSphere(n));
        }
        Ok(Self(p))
    }

    /// Projects any nonzero vector radially onto the sphere.
    pub fn normalize(p: HPoint) -> Result<Self> {
        let n = p.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(GeoError::DegenerateDirection);
        }
        Ok(Self(p.scale(1.0 / n)))
    }

    pub fn point(&self) -> HPoint {
        self.0
    }

    pub fn right_mul(&self, q: super::Quaternion) -> Self {
        Self(self.0.right_mul(q).normalized())
    }
}

/// Orthogonal projection onto `T_p S^7`: `v - <v,p> p`.
pub fn tangent_project(p: &SpherePoint, v: HPoint) -> HPoint {
    let p = p.point();
    v - p.scale(v.dot(p))
}

/// Great circle through `p` with initial velocity `v`, evaluated at time `s`.
pub fn sphere_exp(p: &SpherePoint, v: HPoint, s: f64) -> Result<SpherePoint> {
    let n = v.norm();
    if !(n > 0.0) {
        return Err(GeoError::DegenerateDirection);
    }
    let angle = s * n;
    let q = p.point().scale(libm::cos(angle)) + v.scale(libm::sin(angle) / n);
    Ok(SpherePoint(q.normalized()))
}

/// A vector field on a neighbourhood of the sphere in `R^8` with a known
/// ambient directional derivative.
pub trait AmbientField {
    fn value(&self, q: HPoint) -> HPoint;
    fn derivative(&self, q: HPoint, dir: HPoint) -> HPoint;
}

/// The linear field `q -> M q` for any real-linear `M`.
pub struct LinearField<F: Fn(HPoint) -> HPoint>(pub F);

impl<F: Fn(HPoint) -> HPoint> AmbientField for LinearField<F> {
    fn value(&self, q: HPoint) -> HPoint {
        (self.0)(q)
    }
    fn derivative(&self, _q: HPoint, dir: HPoint) -> HPoint {
        (self.0)(dir)
    }
}

/// Tangential projection of a constant ambient vector `c`: `c - <c,q> q`.
pub struct ProjectedConstant(pub HPoint);

impl AmbientField for ProjectedConstant {
    fn value(&self, q: HPoint) -> HPoint {
        self.0 - q.scale(self.0.dot(q))
    }
    fn derivative(&self, q: HPoint, dir: HPoint) -> HPoint {
        -(q.scale(self.0.dot(dir)) + dir.scale(self.0.dot(q)))
    }
}

/// Levi-Civita connection of the round sphere via the Gauss formula:
/// `D_X Y + <X, Y(p)> p`.
pub fn round_nabla(p: &SpherePoint, x: HPoint, field: &impl AmbientField) -> HPoint {
    let pt = p.point();
    field.derivative(pt, x) + pt.scale(x.dot(field.value(pt)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halgebra::Quaternion as Q;

    fn base() -> SpherePoint {
        SpherePoint::normalize(HPoint::new(Q::new(0.3, -0.2, 0.5, 0.1), Q::new(0.4, 0.6, -0.1, 0.2))).unwrap()
    }

    fn tangent(p: &SpherePoint) -> HPoint {
        tangent_project(p, HPoint::new(Q::new(0.1, 0.9, -0.3, 0.2), Q::new(-0.5, 0.0, 0.7, 0.3)))
    }

    #[test]
    fn projection_properties() {
        let p = base();
        assert!(tangent_project(&p, p.point()).max_abs() < 1e-15);
        let v = tangent(&p);
        assert!(v.dot(p.point()).abs() < 1e-15);
        assert!(tangent_project(&p, v).max_abs_diff(v) < 1e-15);
    }

    #[test]
    fn exp_endpoints() {
        let p = base();
        let v = tangent(&p).normalized();
        assert!(sphere_exp(&p, v, 0.0).unwrap().point().max_abs_diff(p.point()) < 1e-15);
        let quarter = sphere_exp(&p, v, core::f64::consts::FRAC_PI_2).unwrap();
        assert!(quarter.point().max_abs_diff(v) < 1e-15);
        assert_eq!(sphere_exp(&p, HPoint::ZERO, 1.0), Err(GeoError::DegenerateDirection));
    }

    #[test]
    fn exp_velocity_by_central_difference() {
        let p = base();
        let v = tangent(&p);
        let h = 1e-5;
        let fd = (sphere_exp(&p, v, h).unwrap().point() - sphere_exp(&p, v, -h).unwrap().point()).scale(0.5 / h);
        assert!(fd.max_abs_diff(v) < 1e-9);
    }

    #[test]
    fn round_nabla_of_linear_field() {
        let p = base();
        let x = tangent(&p);
        let m = |q: HPoint| HPoint::new(Q::new(0.0, 1.0, 0.0, 0.0) * q.q1, q.q2 * Q::J);
        let got = round_nabla(&p, x, &LinearField(m));
        let want = m(x) + p.point().scale(x.dot(m(p.point())));
        assert!(got.max_abs_diff(want) < 1e-15);
    }

    #[test]
    fn round_nabla_of_projected_constant_matches_fd() {
        let p = base();
        let x = tangent(&p);
        let c = HPoint::new(Q::new(1.0, 0.5, -0.2, 0.0), Q::new(0.3, 0.0, 0.0, -1.0));
        let field = ProjectedConstant(c);
        let h = 1e-5;
        let yp = field.value(sphere_exp(&p, x, h).unwrap().point());
        let ym = field.value(sphere_exp(&p, x, -h).unwrap().point());
        let fd = tangent_project(&p, (yp - ym).scale(0.5 / h));
        assert!(round_nabla(&p, x, &field).max_abs_diff(fd) < 1e-9);
    }

    #[test]
    fn round_nabla_is_metric_compatible() {
        let p = base();
        let x = tangent(&p).normalized();
        let y = ProjectedConstant(HPoint::new(Q::new(1.0, 0.5, -0.2, 0.0), Q::new(0.3, 0.0, 0.0, -1.0)));
        let z = ProjectedConstant(HPoint::new(Q::new(0.0, 0.2, 0.2, 0.7), Q::new(-0.1, 0.4, 0.9, 0.0)));
        let f = |s: f64| {
            let q = sphere_exp(&p, x, s).unwrap().point();
            y.value(q).dot(z.value(q))
        };
        let h = 1e-5;
        let lhs = (f(h) - f(-h)) / (2.0 * h);
        let pt = p.point();
        let rhs = round_nabla(&p, x, &y).dot(z.value(pt)) + y.value(pt).dot(round_nabla(&p, x, &z));
        assert!((lhs - rhs).abs() < 1e-9);
    }
}
