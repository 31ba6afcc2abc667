//! Seeded sampling of points, tangent vectors and group elements. Every sample
//! index gets its own ChaCha stream, so results do not depend on evaluation
//! order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::cp3::horizontal_project;
use crate::halgebra::{HPoint, Quaternion, Sp2, SpherePoint};

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

pub fn gaussian_hpoint<R: Rng>(rng: &mut R) -> HPoint {
    HPoint::from_array(core::array::from_fn(|_| gaussian(rng)))
}

/// Normalized 8-dimensional Gaussian.
pub fn sphere_point<R: Rng>(rng: &mut R) -> SpherePoint {
    loop {
        if let Ok(p) = SpherePoint::normalize(gaussian_hpoint(rng)) {
            return p;
        }
    }
}

/// Projected Gaussian, rescaled to unit `g1` length.
pub fn horizontal_unit<R: Rng>(rng: &mut R, p: &SpherePoint) -> HPoint {
    loop {
        let v = horizontal_project(p, gaussian_hpoint(rng));
        let n = v.norm();
        if n > 1e-6 {
            return v.scale(1.0 / n);
        }
    }
}

pub fn sp2_element<R: Rng>(rng: &mut R) -> Sp2 {
    Sp2::from_params(core::array::from_fn(|_| gaussian(rng)))
}

/// Uniformly distributed unit complex number, as a quaternion.
pub fn unit_complex<R: Rng>(rng: &mut R) -> Quaternion {
    let t = rng.random_range(0.0..core::f64::consts::TAU);
    Quaternion::complex(libm::cos(t), libm::sin(t))
}

/// Normalized 4-dimensional Gaussian.
pub fn unit_quaternion<R: Rng>(rng: &mut R) -> Quaternion {
    loop {
        let q = Quaternion::new(gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng));
        if q.norm() > 1e-6 {
            return q.normalized();
        }
    }
}

/// Gaussian vector of `T_p S3`, the orthogonal complement of the unit `p`.
pub fn tangent_quaternion<R: Rng>(rng: &mut R, p: Quaternion) -> Quaternion {
    let v = Quaternion::new(gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng));
    v - p.scale(p.dot(v))
}
