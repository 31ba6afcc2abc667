//! The hypersurfaces `H_t = π(ψ_t(S3 × S3))`, `ψ_t(p, q) = (cos t p, sin t q)`.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::error::{GeoError, Result};
use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::halgebra::{ComplexLinear, HPoint, Quaternion, Sp2, SpherePoint};
use crate::hyper::{HypersurfaceChart, Params, Transformed};

pub fn check_t(t: f64) -> Result<()> {
    if !(t > 0.0 && t < FRAC_PI_2) {
        return Err(GeoError::ParameterOutOfRange(t));
    }
    Ok(())
}

/// `ψ_t(p, q) = (cos t p, sin t q)` for unit quaternions `p, q`.
pub fn psi(t: f64, p: Quaternion, q: Quaternion) -> Result<SpherePoint> {
    check_t(t)?;
    SpherePoint::new(HPoint::new(p.scale(libm::cos(t)), q.scale(libm::sin(t))))
}

/// The round-metric unit normal `ξ = (sin t p, -cos t q)` of `ψ_t(S3 × S3)`.
pub fn family_normal(t: f64, p: Quaternion, q: Quaternion) -> Result<HPoint> {
    check_t(t)?;
    Ok(HPoint::new(p.scale(libm::sin(t)), -q.scale(libm::cos(t))))
}

/// A point `(p, q)` of `S3 × S3` together with the family parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyPoint {
    pub t: f64,
    pub p: Quaternion,
    pub q: Quaternion,
}

impl FamilyPoint {
    pub fn new(t: f64, p: Quaternion, q: Quaternion) -> Result<Self> {
        check_t(t)?;
        if (p.norm() - 1.0).abs() > 1e-12 || (q.norm() - 1.0).abs() > 1e-12 {
            return Err(GeoError::NotUnit(p.norm() * q.norm()));
        }
        Ok(Self { t, p, q })
    }

    pub fn lift(&self) -> Result<SpherePoint> {
        psi(self.t, self.p, self.q)
    }

    pub fn normal(&self) -> Result<HPoint> {
        family_normal(self.t, self.p, self.q)
    }

    /// Chart of `H_t` centred at this point.
    pub fn chart(&self) -> FamilyChart {
        FamilyChart { t: self.t, p0: self.p, q0: self.q }
    }
}

/// Chart of `H_t` around `π ψ_t(p0, q0)`:
/// `u -> ψ_t(p0 e^{u1 i} e^{u2 j} e^{u3 k}, q0 e^{u4 j} e^{u5 k})`.
/// The gauge direction `(p i, q i)` is left out of the parametrization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyChart {
    pub t: f64,
    pub p0: Quaternion,
    pub q0: Quaternion,
}

fn e(axis: Quaternion, s: f64) -> Quaternion {
    Quaternion::real(libm::cos(s)) + axis.scale(libm::sin(s))
}

impl FamilyChart {
    pub fn new(t: f64, p0: Quaternion, q0: Quaternion) -> Result<Self> {
        check_t(t)?;
        Ok(Self { t, p0: p0.normalized(), q0: q0.normalized() })
    }

    pub fn factors(&self, u: &Params) -> (Quaternion, Quaternion) {
        use Quaternion as Q;
        let p = self.p0 * e(Q::I, u[0]) * e(Q::J, u[1]) * e(Q::K, u[2]);
        let q = self.q0 * e(Q::J, u[3]) * e(Q::K, u[4]);
        (p, q)
    }
}

impl HypersurfaceChart for FamilyChart {
    fn point(&self, u: &Params) -> Result<SpherePoint> {
        let (p, q) = self.factors(u);
        psi(self.t, p, q)
    }

    fn tangents(&self, u: &Params) -> Result<[HPoint; 5]> {
        use Quaternion as Q;
        let (c, s) = (libm::cos(self.t), libm::sin(self.t));
        let (ei, ej, ek) = (e(Q::I, u[0]), e(Q::J, u[1]), e(Q::K, u[2]));
        let p1 = self.p0 * ei * Q::I * ej * ek;
        let p2 = self.p0 * ei * ej * Q::J * ek;
        let p3 = self.p0 * ei * ej * ek * Q::K;
        let (fj, fk) = (e(Q::J, u[3]), e(Q::K, u[4]));
        let q4 = self.q0 * fj * Q::J * fk;
        let q5 = self.q0 * fj * fk * Q::K;
        let first = |v: Quaternion| HPoint::new(v.scale(c), Q::ZERO);
        let second = |v: Quaternion| HPoint::new(Q::ZERO, v.scale(s));
        Ok([first(p1), first(p2), first(p3), second(q4), second(q5)])
    }

    fn normal_hint(&self, u: &Params) -> Option<HPoint> {
        let (p, q) = self.factors(u);
        family_normal(self.t, p, q).ok()
    }

    /// The fields of `diag(u, 0)` and `diag(0, v)`, `u, v ∈ {i, j, k}`.
    fn killing_tangents(&self) -> Option<Vec<Sp2>> {
        Some((0..6).map(Sp2::basis).collect())
    }
}

/// Generator of the second unitary perturbation used for non-horizontal
/// test hypersurfaces.
fn su4_generator() -> Matrix4<Complex64> {
    Matrix4::from_fn(|r, c| {
        let (r, c) = (r as f64, c as f64);
        Complex64::new(0.15 * r - 0.1 * c + 0.05, 0.2 * r * c - 0.1 * (r + c) + 0.07)
    })
}

/// Two images of `H_t` under unitary maps outside `Sp(2)`: the rotation
/// mixing `z1` and `z2` by `0.3`, and a fixed element of `SU(4)`. Both are
/// hypersurfaces with non-constant angle.
pub fn nonhorizontal_variants(chart: FamilyChart) -> [Transformed<FamilyChart>; 2] {
    [
        Transformed { inner: chart, map: ComplexLinear::mixing_rotation(0.3) },
        Transformed { inner: chart, map: ComplexLinear::exp_su4(su4_generator()) },
    ]
}
