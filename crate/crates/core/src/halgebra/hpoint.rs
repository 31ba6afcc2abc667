use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use super::Quaternion;

/// A point (or vector) of `H^2 = R^8`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HPoint {
    pub q1: Quaternion,
    pub q2: Quaternion,
}

impl HPoint {
    pub const ZERO: Self = Self::new(Quaternion::ZERO, Quaternion::ZERO);

    pub const fn new(q1: Quaternion, q2: Quaternion) -> Self {
        Self { q1, q2 }
    }

    pub fn from_array(a: [f64; 8]) -> Self {
        Self::new(Quaternion::new(a[0], a[1], a[2], a[3]), Quaternion::new(a[4], a[5], a[6], a[7]))
    }

    pub fn to_array(self) -> [f64; 8] {
        let a = self.q1.to_array();
        let b = self.q2.to_array();
        [a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]]
    }

    /// Real inner product `Re(conj(x1) y1 + conj(x2) y2)`.
    pub fn dot(self, o: Self) -> f64 {
        self.q1.dot(o.q1) + self.q2.dot(o.q2)
    }

    /// Quaternion-valued hermitian product `conj(x1) y1 + conj(x2) y2`.
    pub fn hdot(self, o: Self) -> Quaternion {
        self.q1.conj() * o.q1 + self.q2.conj() * o.q2
    }

    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.q1.scale(s), self.q2.scale(s))
    }

    pub fn normalized(self) -> Self {
        self.scale(1.0 / self.norm())
    }

    /// Right scalar multiplication `(x1 q, x2 q)`; this is the gauge action.
    pub fn right_mul(self, q: Quaternion) -> Self {
        Self::new(self.q1 * q, self.q2 * q)
    }

    /// Left scalar multiplication `(q x1, q x2)`. Not an Sp(2) action; used only
    /// where a coordinate convention calls for it.
    pub fn left_mul(self, q: Quaternion) -> Self {
        Self::new(q * self.q1, q * self.q2)
    }

    pub fn max_abs(self) -> f64 {
        self.to_array().iter().fold(0.0, |m, v| libm::fmax(m, libm::fabs(*v)))
    }

    pub fn max_abs_diff(self, o: Self) -> f64 {
        (self - o).max_abs()
    }

    /// Complex coordinates `(z1, w1, z2, w2)` with each quaternion written as
    /// `z + j w`. Right multiplication by `i` is multiplication by `i` in C^4.
    pub fn to_complex(self) -> [Complex64; 4] {
        let (z1, w1) = split_complex(self.q1);
        let (z2, w2) = split_complex(self.q2);
        [z1, w1, z2, w2]
    }

    pub fn from_complex(c: [Complex64; 4]) -> Self {
        Self::new(join_complex(c[0], c[1]), join_complex(c[2], c[3]))
    }
}

fn split_complex(q: Quaternion) -> (Complex64, Complex64) {
    // z + j w = z.re + z.im i + w.re j - w.im k
    (Complex64::new(q.w, q.x), Complex64::new(q.y, -q.z))
}

fn join_complex(z: Complex64, w: Complex64) -> Quaternion {
    Quaternion::new(z.re, z.im, w.re, -w.im)
}

impl Add for HPoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.q1 + o.q1, self.q2 + o.q2)
    }
}

impl AddAssign for HPoint {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for HPoint {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.q1 - o.q1, self.q2 - o.q2)
    }
}

impl Neg for HPoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.q1, -self.q2)
    }
}

impl Mul<f64> for HPoint {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Quaternion as Q;

    fn sample() -> HPoint {
        HPoint::new(Q::new(0.2, -0.7, 1.1, 0.4), Q::new(-0.9, 0.3, 0.05, -1.3))
    }

    #[test]
    fn complex_coordinates_of_one() {
        let c = HPoint::new(Q::ONE, Q::ZERO).to_complex();
        assert_eq!(c[0], Complex64::new(1.0, 0.0));
        assert_eq!(c[1], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn right_i_is_complex_scaling() {
        let x = sample();
        let c = x.to_complex();
        let ci = x.right_mul(Q::I).to_complex();
        let i = Complex64::new(0.0, 1.0);
        for k in 0..4 {
            assert!((ci[k] - c[k] * i).norm() < 1e-15);
        }
    }

    #[test]
    fn right_j_matches_expanded_formula() {
        // Oracle: expand q j in real coordinates: (w,x,y,z) j = (-y, -z, w, x).
        let q = Q::new(0.2, -0.7, 1.1, 0.4);
        let qj = q * Q::J;
        assert_eq!(qj, Q::new(-q.y, -q.z, q.w, q.x));
        let c = HPoint::new(q, Q::ZERO).to_complex();
        let cj = HPoint::new(qj, Q::ZERO).to_complex();
        assert!((cj[0] - (-c[1].conj())).norm() < 1e-15);
        assert!((cj[1] - c[0].conj()).norm() < 1e-15);
    }

    #[test]
    fn complex_round_trip() {
        let x = sample();
        assert!(HPoint::from_complex(x.to_complex()).max_abs_diff(x) < 1e-15);
    }

    #[test]
    fn hermitian_product_real_part_is_dot() {
        let x = sample();
        let y = sample().right_mul(Q::new(0.1, 0.2, -0.3, 0.9));
        assert!((x.hdot(y).w - x.dot(y)).abs() < 1e-14);
    }
}
