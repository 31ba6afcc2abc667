//! The metric `g^t` on `S3 × S3` pulled back from the squashed seven-sphere,
//! and the mirror isometry between `t = π/4 ± s`.

use rand::Rng;

use super::chart::{check_t, psi};
use crate::cp3::{horizontal_project, metric};
use crate::error::{GeoError, Result};
use crate::halgebra::{HPoint, Quaternion};
use crate::sampling::{gaussian, sample_rng, tangent_quaternion, unit_quaternion};

/// A tangent vector `(v, w)` of `S3 × S3` at `(p, q)`.
pub type PairTangent = (Quaternion, Quaternion);

fn check(t: f64, a: f64) -> Result<()> {
    check_t(t)?;
    if !(a > 0.0) || !a.is_finite() {
        return Err(GeoError::InvalidMetricParameter(a));
    }
    Ok(())
}

/// The closed form
/// `a (cos²t <v1,v2> + sin²t <w1,w2>) + (1-a) (a1 b1 + a2 b2)`, where
/// `a1 = cos²t <v2, p j> + sin²t <w2, q j>`, `b1` the same for `(v1, w1)`,
/// and `a2, b2` likewise with `k`.
pub fn pullback_metric(t: f64, a: f64, p: Quaternion, q: Quaternion, x: PairTangent, y: PairTangent) -> Result<f64> {
    check(t, a)?;
    let (c2, s2) = (libm::cos(t) * libm::cos(t), libm::sin(t) * libm::sin(t));
    let coeff = |v: Quaternion, w: Quaternion, u: Quaternion| c2 * v.dot(p * u) + s2 * w.dot(q * u);
    let (a1, a2) = (coeff(y.0, y.1, Quaternion::J), coeff(y.0, y.1, Quaternion::K));
    let (b1, b2) = (coeff(x.0, x.1, Quaternion::J), coeff(x.0, x.1, Quaternion::K));
    Ok(a * (c2 * x.0.dot(y.0) + s2 * x.1.dot(y.1)) + (1.0 - a) * (a1 * b1 + a2 * b2))
}

fn push(t: f64, v: PairTangent) -> HPoint {
    HPoint::new(v.0.scale(libm::cos(t)), v.1.scale(libm::sin(t)))
}

/// `a <X, Y> + (1-a) <P1 X, Y>` on `S7` with `X = dψ_t(v1, w1)`, `Y = dψ_t(v2, w2)`
/// and `P1` the projection on `span{ψ j, ψ k}`.
pub fn pullback_metric_squashed(
    t: f64,
    a: f64,
    p: Quaternion,
    q: Quaternion,
    x: PairTangent,
    y: PairTangent,
) -> Result<f64> {
    check(t, a)?;
    let base = psi(t, p, q)?.point();
    let (x, y) = (push(t, x), push(t, y));
    let (bj, bk) = (base.right_mul(Quaternion::J), base.right_mul(Quaternion::K));
    Ok(a * x.dot(y) + (1.0 - a) * (x.dot(bj) * y.dot(bj) + x.dot(bk) * y.dot(bk)))
}

/// `g_a(H X, H Y) + a <X, ψ i><Y, ψ i>`: the CP3 metric on the horizontal
/// parts plus the fibre direction weighted like `D2`.
pub fn pullback_metric_ambient(
    t: f64,
    a: f64,
    p: Quaternion,
    q: Quaternion,
    x: PairTangent,
    y: PairTangent,
) -> Result<f64> {
    check(t, a)?;
    let sp = psi(t, p, q)?;
    let (x, y) = (push(t, x), push(t, y));
    let bi = sp.point().right_mul(Quaternion::I);
    Ok(metric(a, &sp, horizontal_project(&sp, x), horizontal_project(&sp, y)) + a * x.dot(bi) * y.dot(bi))
}

fn random_configuration<R: Rng>(rng: &mut R) -> (Quaternion, Quaternion, PairTangent, PairTangent) {
    let (p, q) = (unit_quaternion(rng), unit_quaternion(rng));
    let x = (tangent_quaternion(rng, p), tangent_quaternion(rng, q));
    let y = (tangent_quaternion(rng, p), tangent_quaternion(rng, q));
    (p, q, x, y)
}

/// Largest `|g^{s-}((v1,w1),(v2,w2)) - g^{s+}((w1,v1),(w2,v2))|` at swapped
/// base points over seeded samples, `s± = π/4 ± s`.
pub fn mirror_isometry_check(s: f64, a: f64, samples: usize, seed: u64) -> Result<f64> {
    if !(s > 0.0 && s < core::f64::consts::FRAC_PI_4) {
        return Err(GeoError::ParameterOutOfRange(s));
    }
    let (minus, plus) = (core::f64::consts::FRAC_PI_4 - s, core::f64::consts::FRAC_PI_4 + s);
    let mut worst = 0.0f64;
    for k in 0..samples {
        let mut rng = sample_rng(seed, k as u64);
        let (p, q, x, y) = random_configuration(&mut rng);
        let lhs = pullback_metric(minus, a, p, q, x, y)?;
        let rhs = pullback_metric(plus, a, q, p, (x.1, x.0), (y.1, y.0))?;
        worst = worst.max((lhs - rhs).abs() / (1.0 + lhs.abs()));
    }
    Ok(worst)
}

/// Largest disagreement of [`pullback_metric`] with the two ambient
/// evaluations over seeded samples.
pub fn pullback_consistency(t: f64, a: f64, samples: usize, seed: u64) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in 0..samples {
        let mut rng = sample_rng(seed, k as u64);
        let (p, q, x, y) = random_configuration(&mut rng);
        let g = pullback_metric(t, a, p, q, x, y)?;
        let s = pullback_metric_squashed(t, a, p, q, x, y)?;
        let m = pullback_metric_ambient(t, a, p, q, x, y)?;
        worst = worst.max((g - s).abs().max((g - m).abs()) / (1.0 + g.abs()));
    }
    Ok(worst)
}

/// Largest change of [`pullback_metric`] under the isotropy action
/// `(p, q, v, w) -> (p z, q z, v z, w z)` for random unit complex `z`.
pub fn pullback_isotropy_defect(t: f64, a: f64, samples: usize, seed: u64) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in 0..samples {
        let mut rng = sample_rng(seed, k as u64);
        let (p, q, x, y) = random_configuration(&mut rng);
        let ang = gaussian(&mut rng);
        let z = Quaternion::complex(libm::cos(ang), libm::sin(ang));
        let g = pullback_metric(t, a, p, q, x, y)?;
        let h = pullback_metric(t, a, p * z, q * z, (x.0 * z, x.1 * z), (y.0 * z, y.1 * z))?;
        worst = worst.max((g - h).abs());
    }
    Ok(worst)
}
