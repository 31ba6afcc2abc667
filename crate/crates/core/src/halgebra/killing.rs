use core::ops::{Add, Mul, Neg, Sub};

use super::{AmbientField, HPoint, Quaternion, SpherePoint};

/// A 2x2 quaternionic matrix acting on column vectors of `H^2` from the left.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct QMat2(pub [[Quaternion; 2]; 2]);

impl QMat2 {
    pub const ZERO: Self = Self([[Quaternion::ZERO; 2]; 2]);
    pub const IDENTITY: Self = Self([[Quaternion::ONE, Quaternion::ZERO], [Quaternion::ZERO, Quaternion::ONE]]);

    pub fn diag(a: Quaternion, b: Quaternion) -> Self {
        Self([[a, Quaternion::ZERO], [Quaternion::ZERO, b]])
    }

    /// Outer product `u v^*`, i.e. entries `u_a conj(v_b)`.
    pub fn outer(u: HPoint, v: HPoint) -> Self {
        let (u, v) = ([u.q1, u.q2], [v.q1, v.q2]);
        let mut m = Self::ZERO;
        for a in 0..2 {
            for b in 0..2 {
                m.0[a][b] = u[a] * v[b].conj();
            }
        }
        m
    }

    pub fn apply(&self, x: HPoint) -> HPoint {
        let m = &self.0;
        HPoint::new(m[0][0] * x.q1 + m[0][1] * x.q2, m[1][0] * x.q1 + m[1][1] * x.q2)
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Self([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e = e.scale(s);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |m, q| libm::fmax(m, q.max_abs_diff(Quaternion::ZERO)))
    }

    /// Matrix exponential by scaling and squaring with a Taylor kernel.
    pub fn exp(&self) -> Self {
        let norm = self.max_abs() * 2.0;
        let mut squarings = 0;
        let mut scaled = *self;
        if norm > 0.25 {
            squarings = libm::ceil(libm::log2(norm / 0.25)) as i32;
            scaled = self.scale(libm::pow(2.0, -(squarings as f64)));
        }
        let mut term = Self::IDENTITY;
        let mut sum = Self::IDENTITY;
        for k in 1..=18 {
            term = (term * scaled).scale(1.0 / k as f64);
            sum = sum + term;
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }

    /// Anti-hermitian with respect to the quaternionic hermitian form.
    pub fn is_antihermitian(&self, tol: f64) -> bool {
        (*self + self.adjoint()).max_abs() <= tol
    }
}

impl Add for QMat2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut m = self;
        for a in 0..2 {
            for b in 0..2 {
                m.0[a][b] = self.0[a][b] + o.0[a][b];
            }
        }
        m
    }
}

impl Sub for QMat2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for QMat2 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for QMat2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut m = Self::ZERO;
        for a in 0..2 {
            for b in 0..2 {
                m.0[a][b] = self.0[a][0] * o.0[0][b] + self.0[a][1] * o.0[1][b];
            }
        }
        m
    }
}

/// Element of `sp(2)`: a 2x2 anti-hermitian quaternionic matrix, stored through
/// its ten real coordinates
/// `[Im m11 (3), Im m22 (3), m12 (4)]`, with `m21 = -conj(m12)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sp2(QMat2);

impl Sp2 {
    pub const DIM: usize = 10;

    pub fn from_params(c: [f64; 10]) -> Self {
        let m11 = Quaternion::new(0.0, c[0], c[1], c[2]);
        let m22 = Quaternion::new(0.0, c[3], c[4], c[5]);
        let m12 = Quaternion::new(c[6], c[7], c[8], c[9]);
        Self(QMat2([[m11, m12], [-m12.conj(), m22]]))
    }

    pub fn params(&self) -> [f64; 10] {
        let m = &self.0 .0;
        [m[0][0].x, m[0][0].y, m[0][0].z, m[1][1].x, m[1][1].y, m[1][1].z, m[0][1].w, m[0][1].x, m[0][1].y, m[0][1].z]
    }

    /// The k-th basis element of the fixed ten-element basis.
    pub fn basis(k: usize) -> Self {
        let mut c = [0.0; 10];
        c[k] = 1.0;
        Self::from_params(c)
    }

    /// Projects an arbitrary matrix onto its anti-hermitian part.
    pub fn from_matrix(m: QMat2) -> Self {
        Self((m - m.adjoint()).scale(0.5))
    }

    pub fn matrix(&self) -> QMat2 {
        self.0
    }

    pub fn apply(&self, x: HPoint) -> HPoint {
        self.0.apply(x)
    }

    pub fn bracket(&self, other: &Self) -> Self {
        Self(self.0.commutator(&other.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.scale(s))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0 + other.0)
    }

    /// The group element `exp(s M)`, an isometry of every `g_a`.
    pub fn flow(&self, s: f64) -> QMat2 {
        self.0.scale(s).exp()
    }

    /// Generator whose Killing field takes the prescribed value at `p`:
    /// `M p = v` for every `v` tangent to the sphere at `p`.
    pub fn with_value_at(p: &SpherePoint, v: HPoint) -> Self {
        let p = p.point();
        let v = v - p.scale(v.dot(p));
        let q = p.hdot(v).im();
        let along = p.right_mul(q);
        let across = v - along;
        let m = QMat2::outer(across, p) - QMat2::outer(p, across) + QMat2::outer(along, p);
        Self(m)
    }
}

/// A Killing field of the round seven-sphere. Left `sp(2)` fields commute with
/// the right scalar action and therefore descend to CP3; right fields generate
/// the fibres.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum KillingField {
    Left(Sp2),
    Right(Quaternion),
}

impl KillingField {
    pub fn value(&self, p: HPoint) -> HPoint {
        match self {
            Self::Left(m) => m.apply(p),
            Self::Right(u) => p.right_mul(*u),
        }
    }

    pub fn is_projectable(&self) -> bool {
        matches!(self, Self::Left(_))
    }

    /// Lie bracket of vector fields, `[X, Y] = D_X Y - D_Y X`. For left fields
    /// this is the field of `-[M, N]`.
    pub fn bracket(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (Self::Left(m), Self::Left(n)) => Some(Self::Left(n.bracket(m))),
            (Self::Right(u), Self::Right(v)) => Some(Self::Right(*u * *v - *v * *u)),
            _ => None,
        }
    }

    /// Time-`s` flow applied to `p`.
    pub fn flow(&self, p: HPoint, s: f64) -> HPoint {
        match self {
            Self::Left(m) => m.flow(s).apply(p),
            Self::Right(u) => p.right_mul(u.scale(s).exp()),
        }
    }
}

impl AmbientField for KillingField {
    fn value(&self, q: HPoint) -> HPoint {
        KillingField::value(self, q)
    }
    fn derivative(&self, _q: HPoint, dir: HPoint) -> HPoint {
        KillingField::value(self, dir)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halgebra::Quaternion as Q;

    fn point() -> SpherePoint {
        SpherePoint::normalize(HPoint::new(Q::new(0.3, -0.2, 0.5, 0.1), Q::new(0.4, 0.6, -0.1, 0.2))).unwrap()
    }

    fn generic() -> Sp2 {
        Sp2::from_params([0.3, -0.1, 0.7, 0.2, 0.5, -0.4, 0.9, 0.1, -0.6, 0.25])
    }

    #[test]
    fn params_round_trip_and_antihermitian() {
        let m = generic();
        assert_eq!(Sp2::from_params(m.params()), m);
        assert!(m.matrix().is_antihermitian(0.0));
    }

    #[test]
    fn killing_values_are_tangent() {
        let p = point();
        for k in 0..Sp2::DIM {
            let v = Sp2::basis(k).apply(p.point());
            assert!(v.dot(p.point()).abs() < 1e-15);
        }
    }

    #[test]
    fn left_fields_commute_with_right_scalars() {
        let m = generic();
        let x = point().point();
        let u = Q::new(0.2, 0.4, -0.3, 0.8);
        assert!(m.apply(x.right_mul(u)).max_abs_diff(m.apply(x).right_mul(u)) < 1e-15);
    }

    #[test]
    fn prescribed_value() {
        let p = point();
        let v =
            crate::halgebra::tangent_project(&p, HPoint::new(Q::new(0.1, 0.9, -0.3, 0.2), Q::new(-0.5, 0.0, 0.7, 0.3)));
        let m = Sp2::with_value_at(&p, v);
        assert!(m.matrix().is_antihermitian(1e-15));
        assert!(m.apply(p.point()).max_abs_diff(v) < 1e-15);
    }

    #[test]
    fn flow_is_unitary_and_matches_derivative() {
        let m = generic();
        let g = m.flow(0.8);
        let p = point().point();
        assert!((g.apply(p).norm() - 1.0).abs() < 1e-14);
        let prod = g.adjoint() * g;
        assert!((prod - QMat2::IDENTITY).max_abs() < 1e-14);
        let h = 1e-5;
        let fd = (m.flow(h).apply(p) - m.flow(-h).apply(p)).scale(0.5 / h);
        assert!(fd.max_abs_diff(m.apply(p)) < 1e-9);
    }

    #[test]
    fn flow_bracket_matches_algebraic_bracket() {
        // Commutator of flows: phi^Y_{-s} phi^X_{-s} phi^Y_s phi^X_s p = p + s^2 [X,Y] + O(s^3).
        let x = KillingField::Left(generic());
        let y = KillingField::Left(Sp2::from_params([0.0, 0.4, -0.2, 0.6, 0.0, 0.1, -0.3, 0.5, 0.2, 0.0]));
        let p = point().point();
        let bracket = x.bracket(&y).unwrap().value(p);
        let loop_at = |s: f64| y.flow(x.flow(y.flow(x.flow(p, s), s), -s), -s);
        // symmetric combination cancels the O(s^3) term
        let s = 1e-3;
        let est = (loop_at(s) - p).scale(1.0 / (s * s));
        assert!(est.max_abs_diff(bracket) < 1e-2);
        let fine = 2e-4;
        let est_fine = (loop_at(fine) - p).scale(1.0 / (fine * fine));
        assert!(est_fine.max_abs_diff(bracket) < est.max_abs_diff(bracket));
        // the global sign: the algebraic commutator [M, N] has the opposite sign
        // pushforward form (L_X Y)(p) = d/ds dphi^X_{-s} Y(phi^X_s p), central differences
        let (KillingField::Left(mx), KillingField::Left(my)) = (x, y) else { unreachable!() };
        let push = |s: f64| mx.flow(-s).apply(my.apply(mx.flow(s).apply(p)));
        let h = 1e-5;
        let lie = (push(h) - push(-h)).scale(0.5 / h);
        assert!(lie.max_abs_diff(bracket) < 1e-6);
        let Some(KillingField::Left(b)) = x.bracket(&y) else { unreachable!() };
        assert!(b.add(&mx.bracket(&my)).matrix().max_abs() < 1e-15);
    }
}
