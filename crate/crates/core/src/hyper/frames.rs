//! Canonical `g`-orthonormal tangent frames of horizontal and non-horizontal
//! hypersurfaces, built from the unit normal `N` of the nearly Kähler metric.

use super::angle::angle;
use crate::cp3::{contact_phi, contact_psi, j, j1, norm, product, proj_d1, proj_d2, tensor_g, GeoContext};
use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, Quaternion, SpherePoint};

/// Largest angle accepted as horizontal, and smallest distance from `0` and
/// `π/2` accepted by the non-horizontal frame.
pub const FRAME_TOL: f64 = 1e-6;

fn check_unit(p: &SpherePoint, n: HPoint) -> Result<()> {
    let len = norm(2.0, p, n);
    if (len - 1.0).abs() > super::angle::UNIT_TOL {
        return Err(GeoError::NotUnit(len));
    }
    Ok(())
}

/// The contact vector `p j` used when none is prescribed. It depends on the
/// chosen lift, so frames built from it are smooth along smooth lifts only.
pub fn default_contact(p: &SpherePoint) -> HPoint {
    p.point().right_mul(Quaternion::J)
}

/// `e1 = -G(Φ N, N), e2 = J e1, e3 = J N, e4 = Φ N, e5 = Ψ N` for a horizontal
/// `g`-unit normal `N`, with `Φ = Φ_A` for the unit contact vector `A ∈ D1`.
pub fn frame_horizontal(ctx: &GeoContext, n: HPoint, contact: HPoint) -> Result<[HPoint; 5]> {
    let p = ctx.base();
    check_unit(p, n)?;
    let theta = angle(2.0, p, n)?;
    if theta > FRAME_TOL {
        return Err(GeoError::NotHorizontalNormal(theta));
    }
    let phi_n = contact_phi(ctx, contact, n)?;
    let e1 = -tensor_g(ctx, phi_n, n)?;
    Ok([e1, j(p, e1), j(p, n), phi_n, contact_psi(ctx, contact, n)?])
}

/// `e1 = P2 J N / cos θ, e2 = P1 J N / sin θ, e3 = (P N - cos 2θ N) / sin 2θ,
/// e4 = G(P N, N) / sin 2θ, e5 = J e4`, together with the nearly Kähler angle `θ`.
pub fn frame_nonhorizontal(ctx: &GeoContext, n: HPoint) -> Result<([HPoint; 5], f64)> {
    let p = ctx.base();
    check_unit(p, n)?;
    let theta = angle(2.0, p, n)?;
    if !(FRAME_TOL..=core::f64::consts::FRAC_PI_2 - FRAME_TOL).contains(&theta) {
        return Err(GeoError::FrameDegenerate(theta));
    }
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let (s2, c2) = (libm::sin(2.0 * theta), libm::cos(2.0 * theta));
    let jn = j(p, n);
    let pn = product(p, n);
    let e4 = tensor_g(ctx, pn, n)?.scale(1.0 / s2);
    Ok((
        [
            proj_d2(p, jn).scale(1.0 / c),
            proj_d1(p, jn).scale(1.0 / s),
            (pn - n.scale(c2)).scale(1.0 / s2),
            e4,
            j(p, e4),
        ],
        theta,
    ))
}

/// `e5` of the non-horizontal frame in its second form, `-G(J1 N, N) / sin 2θ`.
pub fn nonhorizontal_e5_alt(ctx: &GeoContext, n: HPoint, theta: f64) -> Result<HPoint> {
    Ok(-tensor_g(ctx, j1(n), n)?.scale(1.0 / libm::sin(2.0 * theta)))
}

/// Rescales every vector to unit `g_a` length.
pub fn renormalize(a: f64, p: &SpherePoint, frame: &[HPoint; 5]) -> Result<[HPoint; 5]> {
    let mut out = *frame;
    for e in out.iter_mut() {
        let len = norm(a, p, *e);
        if !(len > 0.0) {
            return Err(GeoError::DegenerateDirection);
        }
        *e = e.scale(1.0 / len);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cp3::{horizontal_basis, metric, vertical_defect};

    fn point() -> SpherePoint {
        SpherePoint::normalize(HPoint::new(Quaternion::new(0.3, -0.2, 0.5, 0.1), Quaternion::new(0.4, 0.6, -0.1, 0.2)))
            .unwrap()
    }

    fn gram_defect(a: f64, p: &SpherePoint, e: &[HPoint; 5], n: HPoint) -> f64 {
        let mut d = 0.0f64;
        for i in 0..5 {
            d = d.max(metric(a, p, e[i], n).abs());
            for k in 0..5 {
                let want = if i == k { 1.0 } else { 0.0 };
                d = d.max((metric(a, p, e[i], e[k]) - want).abs());
            }
        }
        d
    }

    #[test]
    fn horizontal_frame_is_orthonormal_and_split() {
        let p = point();
        let ctx = GeoContext::new(2.0, p).unwrap();
        let b = horizontal_basis(&p);
        let n = (b[2].scale(0.3) + b[3].scale(-0.5) + b[5].scale(0.81)).scale(1.0);
        let n = n.scale(1.0 / norm(2.0, &p, n));
        let e = frame_horizontal(&ctx, n, default_contact(&p)).unwrap();
        assert!(gram_defect(2.0, &p, &e, n) < 1e-8);
        for v in &e {
            assert!(vertical_defect(&p, *v) < 1e-9);
        }
        assert!(proj_d2(&p, e[0]).max_abs() < 1e-8);
        assert!(proj_d2(&p, e[1]).max_abs() < 1e-8);
        for v in &e[2..] {
            assert!(proj_d1(&p, *v).max_abs() < 1e-8);
        }
        // orthogonal for every g_a as well
        for a in [0.5, 3.0] {
            let ea = renormalize(a, &p, &e).unwrap();
            let na = n.scale(1.0 / norm(a, &p, n));
            assert!(gram_defect(a, &p, &ea, na) < 1e-8);
        }
    }

    #[test]
    fn nonhorizontal_frame_is_orthonormal() {
        let p = point();
        let ctx = GeoContext::new(2.0, p).unwrap();
        let b = horizontal_basis(&p);
        for theta in [0.2, 0.7, 1.3] {
            let n2 = (b[2] + b[4]).scale(0.5);
            let n1 = (b[0].scale(0.6) + b[1].scale(0.8)).scale(1.0);
            let n = n2.scale(libm::cos(theta)) + n1.scale(libm::sin(theta));
            let (e, th) = frame_nonhorizontal(&ctx, n).unwrap();
            assert!((th - theta).abs() < 1e-12);
            assert!(gram_defect(2.0, &p, &e, n) < 1e-8);
            assert!(e[4].max_abs_diff(j(&p, e[3])) == 0.0);
            assert!(e[4].max_abs_diff(nonhorizontal_e5_alt(&ctx, n, th).unwrap()) < 1e-8);
            for a in [0.5, 3.0] {
                let ea = renormalize(a, &p, &e).unwrap();
                for i in 0..5 {
                    for k in 0..i {
                        assert!(metric(a, &p, ea[i], ea[k]).abs() < 1e-8);
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_angles_are_rejected() {
        let p = point();
        let ctx = GeoContext::new(2.0, p).unwrap();
        let b = horizontal_basis(&p);
        let n = b[2].scale(1.0 / libm::sqrt(2.0));
        assert!(matches!(frame_nonhorizontal(&ctx, n), Err(GeoError::FrameDegenerate(_))));
        assert!(matches!(frame_nonhorizontal(&ctx, b[0]), Err(GeoError::FrameDegenerate(_))));
        let tilted = (b[2].scale(0.5) + b[0].scale(0.5)).scale(1.0);
        let tilted = tilted.scale(1.0 / norm(2.0, &p, tilted));
        assert!(matches!(frame_horizontal(&ctx, tilted, default_contact(&p)), Err(GeoError::NotHorizontalNormal(_))));
    }
}
