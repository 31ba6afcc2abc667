//! Parametrized hypersurfaces given through lifts to the seven-sphere.

use alloc::vec::Vec;

use nalgebra::SMatrix;

use crate::cp3::horizontal_project;
use crate::error::{GeoError, Result};
use crate::halgebra::{ComplexLinear, HPoint, QMat2, Quaternion, Sp2, SpherePoint};

pub type Params = [f64; 5];

/// Largest accepted condition number of the tangent Gram matrix.
pub const MAX_CHART_CONDITION: f64 = 1e6;

/// A local parametrization of a hypersurface of CP3 by lifts `u -> p(u)` in
/// the seven-sphere. The lift may carry any smooth gauge.
pub trait HypersurfaceChart {
    fn point(&self, u: &Params) -> Result<SpherePoint>;

    /// The five partial derivatives of the lift at `u`. Vertical components
    /// are allowed; they are removed before use.
    fn tangents(&self, u: &Params) -> Result<[HPoint; 5]>;

    /// An ambient vector with positive product with the preferred normal.
    fn normal_hint(&self, _u: &Params) -> Option<HPoint> {
        None
    }

    /// `sp(2)` generators whose fields are tangent to the hypersurface
    /// everywhere, available for orbits of subgroups of `Sp(2)`.
    fn killing_tangents(&self) -> Option<Vec<Sp2>> {
        None
    }
}

impl<C: HypersurfaceChart + ?Sized> HypersurfaceChart for &C {
    fn point(&self, u: &Params) -> Result<SpherePoint> {
        (**self).point(u)
    }
    fn tangents(&self, u: &Params) -> Result<[HPoint; 5]> {
        (**self).tangents(u)
    }
    fn normal_hint(&self, u: &Params) -> Option<HPoint> {
        (**self).normal_hint(u)
    }
    fn killing_tangents(&self) -> Option<Vec<Sp2>> {
        (**self).killing_tangents()
    }
}

/// Horizontal tangents at `u`, rejecting ill-conditioned charts.
pub fn horizontal_tangents<C: HypersurfaceChart + ?Sized>(chart: &C, u: &Params) -> Result<(SpherePoint, [HPoint; 5])> {
    let p = chart.point(u)?;
    let t = chart.tangents(u)?.map(|v| horizontal_project(&p, v));
    let gram = SMatrix::<f64, 5, 5>::from_fn(|r, c| t[r].dot(t[c]));
    let ev = gram.symmetric_eigenvalues();
    let (lo, hi) = ev.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &e| (l.min(e), h.max(e)));
    if !(lo > 0.0) || hi / lo > MAX_CHART_CONDITION {
        return Err(GeoError::DegenerateChart("tangent images are not independent"));
    }
    Ok((p, t))
}

/// The image of a chart under a unitary map of `C^4`, an isometry of `g1`.
/// Unless the map lies in `Sp(2)` it does not preserve `g_a` for `a != 1`.
#[derive(Clone, Copy, Debug)]
pub struct Transformed<C> {
    pub inner: C,
    pub map: ComplexLinear,
}

impl<C: HypersurfaceChart> HypersurfaceChart for Transformed<C> {
    fn point(&self, u: &Params) -> Result<SpherePoint> {
        SpherePoint::new(self.map.apply(self.inner.point(u)?.point()))
    }
    fn tangents(&self, u: &Params) -> Result<[HPoint; 5]> {
        Ok(self.inner.tangents(u)?.map(|v| self.map.apply(v)))
    }
    fn normal_hint(&self, u: &Params) -> Option<HPoint> {
        self.inner.normal_hint(u).map(|v| self.map.apply(v))
    }
}

/// The image of a chart under an element of `Sp(2)`.
#[derive(Clone, Copy, Debug)]
pub struct Moved<C> {
    pub inner: C,
    pub element: QMat2,
}

impl<C: HypersurfaceChart> HypersurfaceChart for Moved<C> {
    fn point(&self, u: &Params) -> Result<SpherePoint> {
        SpherePoint::normalize(self.element.apply(self.inner.point(u)?.point()))
    }
    fn tangents(&self, u: &Params) -> Result<[HPoint; 5]> {
        Ok(self.inner.tangents(u)?.map(|v| self.element.apply(v)))
    }
    fn normal_hint(&self, u: &Params) -> Option<HPoint> {
        self.inner.normal_hint(u).map(|v| self.element.apply(v))
    }
    fn killing_tangents(&self) -> Option<Vec<Sp2>> {
        let g = self.element;
        let inv = g.adjoint();
        self.inner.killing_tangents().map(|ks| ks.iter().map(|k| Sp2::from_matrix(g * k.matrix() * inv)).collect())
    }
}

/// The same hypersurface with the lift multiplied by the gauge
/// `exp(i φ(u))`, `φ(u) = c0 + Σ c_k u_k`.
#[derive(Clone, Copy, Debug)]
pub struct Regauged<C> {
    pub inner: C,
    pub phase: [f64; 6],
}

impl<C> Regauged<C> {
    fn unit(&self, u: &Params) -> (Quaternion, Quaternion) {
        let phi = self.phase[0] + (0..5).map(|k| self.phase[k + 1] * u[k]).sum::<f64>();
        let z = Quaternion::complex(libm::cos(phi), libm::sin(phi));
        (z, Quaternion::I * z)
    }
}

impl<C: HypersurfaceChart> HypersurfaceChart for Regauged<C> {
    fn point(&self, u: &Params) -> Result<SpherePoint> {
        Ok(self.inner.point(u)?.right_mul(self.unit(u).0))
    }
    fn tangents(&self, u: &Params) -> Result<[HPoint; 5]> {
        let (z, iz) = self.unit(u);
        let p = self.inner.point(u)?.point();
        let t = self.inner.tangents(u)?;
        Ok(core::array::from_fn(|k| t[k].right_mul(z) + p.right_mul(iz).scale(self.phase[k + 1])))
    }
    fn normal_hint(&self, u: &Params) -> Option<HPoint> {
        let z = self.unit(u).0;
        self.inner.normal_hint(u).map(|v| v.right_mul(z))
    }
    fn killing_tangents(&self) -> Option<Vec<Sp2>> {
        self.inner.killing_tangents()
    }
}
