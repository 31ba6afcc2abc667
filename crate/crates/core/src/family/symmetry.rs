//! Homogeneity of `H_t` under `Sp(1) × Sp(1)`, its isotropy, the quotient
//! description and the Hopf coordinate frame.

use super::chart::{family_normal, psi, FamilyPoint};
use super::invariants::family_shape;
use crate::error::Result;
use crate::halgebra::{hopf_separation, HPoint, QMat2, Quaternion};
use crate::hyper::principal_curvatures;
use crate::sampling::{sample_rng, unit_complex, unit_quaternion};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct HomogeneityReport {
    /// `|diag(A,B) ψ_t(p,q) - ψ_t(Ap, Bq)|`.
    pub equivariance: f64,
    /// `|g_a(dφ X, dφ Y) - g_a(X, Y)|` on horizontal tangents.
    pub isometry: f64,
    /// Largest change of the `α` matrix in the canonical frame.
    pub alpha: f64,
    /// Largest change of the angle.
    pub angle: f64,
}

/// Moves a base point of `H_t` by random `(A, B)` and compares everything.
pub fn homogeneity_check(t: f64, a: f64, samples: usize, seed: u64) -> Result<HomogeneityReport> {
    let mut rep = HomogeneityReport::default();
    for k in 0..samples {
        let mut rng = sample_rng(seed, k as u64);
        let (p, q) = (unit_quaternion(&mut rng), unit_quaternion(&mut rng));
        let (ga, gb) = (unit_quaternion(&mut rng), unit_quaternion(&mut rng));
        let here = FamilyPoint::new(t, p, q)?;
        let there = FamilyPoint::new(t, (ga * p).normalized(), (gb * q).normalized())?;
        let g = QMat2::diag(ga, gb);
        let moved = g.apply(here.lift()?.point());
        rep.equivariance = rep.equivariance.max(moved.max_abs_diff(there.lift()?.point()));

        let s0 = family_shape(a, &here)?;
        let s1 = family_shape(a, &there)?;
        for i in 0..5 {
            for j in 0..5 {
                let before = crate::cp3::metric(a, &s0.base, s0.tangents[i], s0.tangents[j]);
                let after = crate::cp3::metric(a, &s1.base, g.apply(s0.tangents[i]), g.apply(s0.tangents[j]));
                rep.isometry = rep.isometry.max((before - after).abs());
            }
        }
        rep.alpha = rep.alpha.max((s0.alpha - s1.alpha).amax());
        rep.angle = rep.angle.max((s0.theta_a - s1.theta_a).abs());
    }
    Ok(rep)
}

/// Whether `(A, B)` fixes the class of `ψ_t(1, 1)`.
pub fn isotropy_fixes(t: f64, ga: Quaternion, gb: Quaternion, tol: f64) -> Result<bool> {
    let o = psi(t, Quaternion::ONE, Quaternion::ONE)?;
    let moved = psi(t, ga, gb)?;
    Ok(hopf_separation(&o, &moved) < tol)
}

/// `A = B = e^{iα}`: solves `A · 1 = 1 · z`, `B · 1 = 1 · z` for a unit complex `z`.
pub fn is_isotropy_element(ga: Quaternion, gb: Quaternion, tol: f64) -> bool {
    let complex = |x: Quaternion| x.to_array()[2].abs() < tol && x.to_array()[3].abs() < tol;
    complex(ga) && complex(gb) && ga.max_abs_diff(gb) < tol
}

/// `(p, q) ↦ (p i p̄, p q̄)`, constant on classes `(p z, q z)` and injective on
/// them, identifying `H_t` with `S2 × S3`.
pub fn quotient_image(p: Quaternion, q: Quaternion) -> (Quaternion, Quaternion) {
    (p * Quaternion::I * p.conj(), p * q.conj())
}

/// Over seeded samples: the largest change of [`quotient_image`] under
/// `(p, q) -> (p z, q z)`, and the smallest image distance between pairs in
/// different classes (with their Hopf separation above `1e-6`).
pub fn quotient_check(samples: usize, seed: u64) -> (f64, f64) {
    let mut invariance = 0.0f64;
    let mut separation = f64::INFINITY;
    let dist = |x: (Quaternion, Quaternion), y: (Quaternion, Quaternion)| {
        libm::sqrt((x.0 - y.0).norm_sqr() + (x.1 - y.1).norm_sqr())
    };
    for k in 0..samples {
        let mut rng = sample_rng(seed, k as u64);
        let (p, q) = (unit_quaternion(&mut rng), unit_quaternion(&mut rng));
        let z = unit_complex(&mut rng);
        invariance = invariance.max(dist(quotient_image(p, q), quotient_image(p * z, q * z)));
        let (p2, q2) = (unit_quaternion(&mut rng), unit_quaternion(&mut rng));
        let (a, b) = (psi(0.6, p, q), psi(0.6, p2, q2));
        if let (Ok(a), Ok(b)) = (a, b) {
            if hopf_separation(&a, &b) > 1e-6 {
                separation = separation.min(dist(quotient_image(p, q), quotient_image(p2, q2)));
            }
        }
    }
    (invariance, separation)
}

/// Hopf coordinates `p = sin x1 e^{i x2} + cos x1 e^{i x3} j` and the three
/// partial derivatives.
pub fn hopf_coordinates(x: [f64; 3]) -> (Quaternion, [Quaternion; 3]) {
    let (s1, c1) = (libm::sin(x[0]), libm::cos(x[0]));
    let (s2, c2) = (libm::sin(x[1]), libm::cos(x[1]));
    let (s3, c3) = (libm::sin(x[2]), libm::cos(x[2]));
    let p = Quaternion::new(c2 * s1, s2 * s1, c3 * c1, s3 * c1);
    let d1 = Quaternion::new(c2 * c1, s2 * c1, -c3 * s1, -s3 * s1);
    let d2 = Quaternion::new(-s2 * s1, c2 * s1, 0.0, 0.0);
    let d3 = Quaternion::new(0.0, 0.0, -s3 * c1, c3 * c1);
    (p, [d1, d2, d3])
}

/// Residuals of `i ξ = tan t (f2 + f3) - cot t (f5 + f6)` (left
/// multiplication) and `ξ i = tan t (f2 - f3) - cot t (f5 - f6)` (right
/// multiplication) in the Hopf coordinate frame `f`.
pub fn hopf_coordinate_identity(t: f64, x: [f64; 3], y: [f64; 3]) -> Result<(f64, f64)> {
    let (p, dp) = hopf_coordinates(x);
    let (q, dq) = hopf_coordinates(y);
    let xi = family_normal(t, p, q)?;
    let (c, s) = (libm::cos(t), libm::sin(t));
    let f = |k: usize| -> HPoint {
        if k < 3 {
            HPoint::new(dp[k].scale(c), Quaternion::ZERO)
        } else {
            HPoint::new(Quaternion::ZERO, dq[k - 3].scale(s))
        }
    };
    let (tan, cot) = (libm::tan(t), 1.0 / libm::tan(t));
    let left = (f(1) + f(2)).scale(tan) - (f(4) + f(5)).scale(cot);
    let right = (f(1) - f(2)).scale(tan) - (f(4) - f(5)).scale(cot);
    Ok((left.max_abs_diff(xi.left_mul(Quaternion::I)), right.max_abs_diff(xi.right_mul(Quaternion::I))))
}

/// Principal curvatures at `ψ_t(p, q)`; constant along `H_t`.
pub fn principal_curvatures_at(a: f64, point: &FamilyPoint) -> Result<[f64; 5]> {
    Ok(principal_curvatures(&family_shape(a, point)?))
}
