use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

use super::{HPoint, Quaternion, SpherePoint};

/// Point of `S^4 ⊂ R^4 ⊕ R`, the base of the twistor fibration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct S4Point {
    pub horizontal: Quaternion,
    pub height: f64,
}

impl S4Point {
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.horizontal.norm_sqr() + self.height * self.height)
    }

    pub fn distance(&self, o: &Self) -> f64 {
        let d = self.horizontal - o.horizontal;
        libm::sqrt(d.norm_sqr() + (self.height - o.height) * (self.height - o.height))
    }
}

/// `tau(p) = (2 p1 conj(p2), |p1|^2 - |p2|^2)`, constant on right `Sp(1)` orbits.
pub fn twistor_project(p: &SpherePoint) -> S4Point {
    let p = p.point();
    S4Point { horizontal: (p.q1 * p.q2.conj()).scale(2.0), height: p.q1.norm_sqr() - p.q2.norm_sqr() }
}

/// Fubini-Study separation `1 - |<p, q>_C|^2` of the Hopf classes of two lifts;
/// zero exactly when `q = p z` for a unit complex `z`.
pub fn hopf_separation(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let a = p.point().to_complex();
    let b = q.point().to_complex();
    let inner: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
    (1.0 - inner.norm_sqr()).max(0.0)
}

/// Complex-linear map of `C^4` acting on `H^2` through the coordinates of
/// [`HPoint::to_complex`]. Unitary matrices are the isometries of `g_1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexLinear(pub Matrix4<Complex64>);

impl ComplexLinear {
    pub fn identity() -> Self {
        Self(Matrix4::identity())
    }

    pub fn apply(&self, x: HPoint) -> HPoint {
        let c = x.to_complex();
        let v = self.0 * Vector4::new(c[0], c[1], c[2], c[3]);
        HPoint::from_complex([v[0], v[1], v[2], v[3]])
    }

    /// Exponential of a traceless anti-hermitian generator, an element of `SU(4)`.
    pub fn exp_su4(generator: Matrix4<Complex64>) -> Self {
        let skew = (generator - generator.adjoint()).scale(0.5);
        let trace = skew.trace() / Complex64::new(4.0, 0.0);
        let traceless = skew - Matrix4::identity() * trace;
        Self(expm(traceless))
    }

    /// Rotation by angle `beta` mixing `z1` and `z2`; an isometry of `g_1` that does
    /// not preserve the almost product structure.
    pub fn mixing_rotation(beta: f64) -> Self {
        let (c, s) = (Complex64::new(libm::cos(beta), 0.0), Complex64::new(libm::sin(beta), 0.0));
        let mut m = Matrix4::identity();
        m[(0, 0)] = c;
        m[(0, 2)] = -s;
        m[(2, 0)] = s;
        m[(2, 2)] = c;
        Self(m)
    }

    pub fn unitarity_defect(&self) -> f64 {
        (self.0.adjoint() * self.0 - Matrix4::identity()).iter().fold(0.0, |m, z| f64::max(m, z.norm()))
    }

    /// How far the map is from commuting with right multiplication by `j`, probed
    /// on the standard basis. Zero for elements of `Sp(2)`.
    pub fn quaternionic_defect(&self) -> f64 {
        (0..8)
            .map(|k| {
                let mut e = [0.0; 8];
                e[k] = 1.0;
                let x = HPoint::from_array(e);
                self.apply(x.right_mul(Quaternion::J)).max_abs_diff(self.apply(x).right_mul(Quaternion::J))
            })
            .fold(0.0, f64::max)
    }
}

/// Scaling and squaring with a Taylor kernel; adequate for the small,
/// well-conditioned generators used here.
fn expm(m: Matrix4<Complex64>) -> Matrix4<Complex64> {
    let norm = m.iter().fold(0.0, |acc, z| f64::max(acc, z.norm())) * 4.0;
    let squarings = if norm > 0.25 { libm::ceil(libm::log2(norm / 0.25)) as i32 } else { 0 };
    let scaled = m.scale(libm::pow(2.0, -(squarings as f64)));
    let mut term: Matrix4<Complex64> = Matrix4::identity();
    let mut sum: Matrix4<Complex64> = Matrix4::identity();
    for k in 1..=18 {
        term = (term * scaled).scale(1.0 / k as f64);
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halgebra::{QMat2, Sp2};
    use Quaternion as Q;

    fn unit(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Q::new(w, x, y, z).normalized()
    }

    #[test]
    fn pole() {
        let p = SpherePoint::new(HPoint::new(Q::ONE, Q::ZERO)).unwrap();
        let t = twistor_project(&p);
        assert_eq!(t.horizontal, Q::ZERO);
        assert_eq!(t.height, 1.0);
    }

    #[test]
    fn twistor_of_split_point_matches_expansion() {
        let (u, v) = (unit(0.2, 0.5, -0.1, 0.7), unit(-0.3, 0.1, 0.9, 0.4));
        for &t in &[0.1, 0.5, 1.2] {
            let p = SpherePoint::normalize(HPoint::new(u.scale(libm::cos(t)), v.scale(libm::sin(t)))).unwrap();
            let img = twistor_project(&p);
            let want = (u * v.conj()).scale(libm::sin(2.0 * t));
            assert!(img.horizontal.max_abs_diff(want) < 1e-14);
            assert!((img.height - libm::cos(2.0 * t)).abs() < 1e-14);
            assert!((img.norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn twistor_constant_on_fibres() {
        let p = SpherePoint::normalize(HPoint::new(Q::new(0.3, -0.2, 0.5, 0.1), Q::new(0.4, 0.6, -0.1, 0.2))).unwrap();
        let q = unit(0.7, -0.1, 0.4, 0.2);
        assert!(twistor_project(&p.right_mul(q)).distance(&twistor_project(&p)) < 1e-14);
    }

    #[test]
    fn hopf_separation_detects_gauge() {
        let p = SpherePoint::normalize(HPoint::new(Q::new(0.3, -0.2, 0.5, 0.1), Q::new(0.4, 0.6, -0.1, 0.2))).unwrap();
        assert!(hopf_separation(&p, &p.right_mul(Q::complex(0.6, 0.8))) < 1e-14);
        assert!(hopf_separation(&p, &p.right_mul(Q::J)) > 1e-3);
    }

    #[test]
    fn sp2_is_inside_su4_and_mixing_is_not() {
        let g: QMat2 = Sp2::from_params([0.3, -0.1, 0.7, 0.2, 0.5, -0.4, 0.9, 0.1, -0.6, 0.25]).flow(1.0);
        // build the complex matrix of g column by column
        let mut m = Matrix4::<Complex64>::zeros();
        let basis = [Q::ONE, Q::J];
        for slot in 0..2 {
            for (k, b) in basis.iter().enumerate() {
                let x = if slot == 0 { HPoint::new(*b, Q::ZERO) } else { HPoint::new(Q::ZERO, *b) };
                let c = x.to_complex();
                let col = c.iter().position(|z| z.norm() > 0.5).unwrap();
                let img = g.apply(x).to_complex();
                for r in 0..4 {
                    m[(r, col)] = img[r] / c[col];
                }
                let _ = k;
            }
        }
        let u = ComplexLinear(m);
        assert!(u.unitarity_defect() < 1e-13);
        assert!(u.quaternionic_defect() < 1e-13);
        let mix = ComplexLinear::mixing_rotation(0.3);
        assert!(mix.unitarity_defect() < 1e-15);
        assert!(mix.quaternionic_defect() > 1e-2);
    }

    #[test]
    fn su4_exponential_is_special_unitary() {
        let mut gen = Matrix4::<Complex64>::zeros();
        for r in 0..4 {
            for c in 0..4 {
                gen[(r, c)] = Complex64::new(0.1 * (r as f64) - 0.2 * (c as f64), 0.3 * ((r * c) as f64) - 0.1);
            }
        }
        let u = ComplexLinear::exp_su4(gen);
        assert!(u.unitarity_defect() < 1e-13);
        assert!((u.0.determinant() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let x = HPoint::new(Q::new(0.1, 0.2, 0.3, 0.4), Q::new(-0.5, 0.6, 0.0, 0.1));
        assert!(u.apply(x.right_mul(Q::I)).max_abs_diff(u.apply(x).right_mul(Q::I)) < 1e-14);
    }
}
