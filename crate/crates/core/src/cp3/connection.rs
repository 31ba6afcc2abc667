//! Levi-Civita connection of `g_a` on CP3, evaluated through Killing frames.

use core::cell::OnceCell;

use nalgebra::{Matrix6, SymmetricEigen, Vector6};

use super::structures::{horizontal_basis, horizontal_project, metric};
use crate::error::{GeoError, Result};
use crate::halgebra::{sphere_exp, HPoint, KillingField, Sp2, SpherePoint};

pub const DEFAULT_STEP: f64 = 1e-5;
/// Frames whose `g1` Gram matrix is worse conditioned than this are rejected.
pub const MAX_FRAME_CONDITION: f64 = 1e6;

/// How `g_a(∇_X Y, Z)` is evaluated for Killing fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConnectionMode {
    /// Six-term Koszul formula, scalar derivatives by central differences.
    #[default]
    FiniteDifference,
    /// Koszul formula with the derivative terms replaced through the Killing
    /// equation: `2g(∇_X Y, Z) = g([X,Y],Z) + g([X,Z],Y) + g([Y,Z],X)`.
    Killing,
}

/// Six `sp(2)` generators whose fields span the horizontal space at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KillingFrame(pub [Sp2; 6]);

impl KillingFrame {
    /// Generators taking the values of [`horizontal_basis`] at `p`.
    pub fn adapted(p: &SpherePoint) -> Self {
        let b = horizontal_basis(p);
        Self(core::array::from_fn(|k| Sp2::with_value_at(p, b[k])))
    }

    pub fn field(&self, k: usize) -> KillingField {
        KillingField::Left(self.0[k])
    }

    /// Horizontal values of the six fields at `q`.
    pub fn values(&self, q: &SpherePoint) -> [HPoint; 6] {
        core::array::from_fn(|k| horizontal_project(q, self.0[k].apply(q.point())))
    }
}

fn gram_with(values: &[HPoint; 6], inner: impl Fn(HPoint, HPoint) -> f64) -> Matrix6<f64> {
    Matrix6::from_fn(|r, c| inner(values[r], values[c]))
}

fn condition(m: &Matrix6<f64>) -> f64 {
    let ev = SymmetricEigen::new(*m).eigenvalues;
    let (lo, hi) = ev.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &e| (lo.min(e.abs()), hi.max(e.abs())));
    if lo > 0.0 {
        hi / lo
    } else {
        f64::INFINITY
    }
}

/// Metric parameter, base lift and Killing frame: everything needed to
/// evaluate `g_a` and `∇^a` at one point.
#[derive(Clone, Debug)]
pub struct GeoContext {
    a: f64,
    base: SpherePoint,
    fd_step: f64,
    mode: ConnectionMode,
    frame: KillingFrame,
    values: [HPoint; 6],
    frame_inv: Matrix6<f64>,
    condition: f64,
    table: OnceCell<[[HPoint; 6]; 6]>,
}

impl GeoContext {
    pub fn new(a: f64, base: SpherePoint) -> Result<Self> {
        Self::with_frame(a, base, KillingFrame::adapted(&base))
    }

    /// Uses a prescribed frame; needed when coefficients must vary smoothly
    /// between nearby points.
    pub fn with_frame(a: f64, base: SpherePoint, frame: KillingFrame) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(GeoError::InvalidMetricParameter(a));
        }
        let values = frame.values(&base);
        let g1 = gram_with(&values, |x, y| x.dot(y));
        let condition = condition(&g1);
        if !(condition <= MAX_FRAME_CONDITION) {
            return Err(GeoError::DegenerateFrame(condition));
        }
        let frame_inv = g1.try_inverse().ok_or(GeoError::DegenerateFrame(condition))?;
        Ok(Self {
            a,
            base,
            fd_step: DEFAULT_STEP,
            mode: ConnectionMode::default(),
            frame,
            values,
            frame_inv,
            condition,
            table: OnceCell::new(),
        })
    }

    pub fn with_step(mut self, h: f64) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(GeoError::InvalidInput("finite-difference step must be positive"));
        }
        self.fd_step = h;
        self.table = OnceCell::new();
        Ok(self)
    }

    pub fn with_mode(mut self, mode: ConnectionMode) -> Self {
        self.mode = mode;
        self.table = OnceCell::new();
        self
    }

    /// Same frame, step and mode at another lift.
    pub fn moved_to(&self, base: SpherePoint) -> Result<Self> {
        Ok(Self::with_frame(self.a, base, self.frame)?.with_step(self.fd_step)?.with_mode(self.mode))
    }

    /// Same point, frame, step and mode for another metric parameter.
    pub fn with_a(&self, a: f64) -> Result<Self> {
        Ok(Self::with_frame(a, self.base, self.frame)?.with_step(self.fd_step)?.with_mode(self.mode))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn base(&self) -> &SpherePoint {
        &self.base
    }

    pub fn fd_step(&self) -> f64 {
        self.fd_step
    }

    pub fn mode(&self) -> ConnectionMode {
        self.mode
    }

    pub fn frame(&self) -> &KillingFrame {
        &self.frame
    }

    /// Condition number of the `g1` Gram matrix of the frame values.
    pub fn condition(&self) -> f64 {
        self.condition
    }

    /// `g1` is the one metric on which `P` is not needed for isometry
    /// invariance to fail; callers may want to special-case it.
    pub fn is_fubini_study(&self) -> bool {
        self.a == 1.0
    }

    pub fn metric(&self, x: HPoint, y: HPoint) -> f64 {
        metric(self.a, &self.base, x, y)
    }

    pub fn horizontal(&self, v: HPoint) -> HPoint {
        horizontal_project(&self.base, v)
    }

    /// Coefficients of a horizontal vector in the frame values at the base.
    pub fn coefficients(&self, v: HPoint) -> [f64; 6] {
        let rhs = Vector6::from_fn(|k, _| self.values[k].dot(v));
        let c = self.frame_inv * rhs;
        core::array::from_fn(|k| c[k])
    }

    fn combine(&self, c: &Vector6<f64>) -> HPoint {
        (0..6).fold(HPoint::ZERO, |acc, k| acc + self.values[k].scale(c[k]))
    }

    /// The vector whose `g_a` products with the six frame values are `b`.
    fn raise(&self, b: Vector6<f64>) -> Result<HPoint> {
        let ga = gram_with(&self.values, |x, y| self.metric(x, y));
        let c = ga.try_inverse().ok_or(GeoError::DegenerateFrame(self.condition))? * b;
        Ok(self.combine(&c))
    }

    fn field_value(&self, q: &SpherePoint, f: &KillingField) -> HPoint {
        horizontal_project(q, f.value(q.point()))
    }

    /// Central difference of `q -> g_a(Y(q), Z(q))` along the great circle
    /// leaving the base in the horizontal direction `x`.
    fn derivative_of_product(&self, x: HPoint, y: &KillingField, z: &KillingField) -> Result<f64> {
        if x.norm() < 1e-300 {
            return Ok(0.0);
        }
        let h = self.fd_step;
        let f = |s: f64| -> Result<f64> {
            let q = sphere_exp(&self.base, x, s)?;
            Ok(metric(self.a, &q, self.field_value(&q, y), self.field_value(&q, z)))
        };
        Ok((f(h)? - f(-h)?) / (2.0 * h))
    }

    fn bracket(x: &KillingField, y: &KillingField) -> Result<KillingField> {
        match (x, y) {
            (KillingField::Left(_), KillingField::Left(_)) => Ok(x.bracket(y).expect("left fields")),
            _ => Err(GeoError::InvalidInput("connection needs projectable (left) Killing fields")),
        }
    }

    /// `2 g_a(∇_X Y, Z)` for Killing fields `X, Y, Z`.
    fn koszul_scalar(&self, x: &KillingField, y: &KillingField, z: &KillingField) -> Result<f64> {
        let p = &self.base;
        let (xv, yv, zv) = (self.field_value(p, x), self.field_value(p, y), self.field_value(p, z));
        let g = |u: HPoint, v: HPoint| self.metric(u, v);
        let xy = self.field_value(p, &Self::bracket(x, y)?);
        let yz = self.field_value(p, &Self::bracket(y, z)?);
        let zx = self.field_value(p, &Self::bracket(z, x)?);
        Ok(match self.mode {
            ConnectionMode::FiniteDifference => {
                self.derivative_of_product(xv, y, z)? + self.derivative_of_product(yv, z, x)?
                    - self.derivative_of_product(zv, x, y)?
                    + g(xy, zv)
                    - g(yz, xv)
                    + g(zx, yv)
            }
            ConnectionMode::Killing => g(xy, zv) - g(zx, yv) + g(yz, xv),
        })
    }

    /// `∇^a_X Y` at the base for projectable Killing fields.
    pub fn koszul_nabla(&self, x: &KillingField, y: &KillingField) -> Result<HPoint> {
        let mut b = Vector6::zeros();
        for k in 0..6 {
            b[k] = 0.5 * self.koszul_scalar(x, y, &self.frame.field(k))?;
        }
        self.raise(b)
    }

    /// The cached table `∇_{Z_m} Z_k` of the frame fields.
    pub fn frame_table(&self) -> Result<&[[HPoint; 6]; 6]> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let mut t = [[HPoint::ZERO; 6]; 6];
        for (m, row) in t.iter_mut().enumerate() {
            for (k, cell) in row.iter_mut().enumerate() {
                *cell = self.koszul_nabla(&self.frame.field(m), &self.frame.field(k))?;
            }
        }
        Ok(self.table.get_or_init(|| t))
    }

    /// `∇_x Y` for a tangent vector `x` and a Killing field `Y`.
    pub fn nabla_killing(&self, x: HPoint, y: &KillingField) -> Result<HPoint> {
        let xf = KillingField::Left(Sp2::with_value_at(&self.base, self.horizontal(x)));
        self.koszul_nabla(&xf, y)
    }

    /// `∇_x W` for a horizontal vector field `W` given along a curve through
    /// the base: `path(s)` returns the lift at time `s` and the horizontal
    /// value of `W` there, with `path(0)` at the base and velocity `x`. The
    /// lifts may carry any smoothly varying gauge.
    pub fn nabla_along<F>(&self, x: HPoint, path: F) -> Result<HPoint>
    where
        F: Fn(f64) -> Result<(SpherePoint, HPoint)>,
    {
        let x = self.horizontal(x);
        let coeff = |s: f64| -> Result<Vector6<f64>> {
            let (q, w) = path(s)?;
            let vals = self.frame.values(&q);
            let g1 = gram_with(&vals, |u, v| u.dot(v));
            let rhs = Vector6::from_fn(|k, _| vals[k].dot(w));
            g1.lu().solve(&rhs).ok_or(GeoError::DegenerateFrame(f64::INFINITY))
        };
        let h = self.fd_step;
        let d = (coeff(h)? - coeff(-h)?) / (2.0 * h);
        let f = coeff(0.0)?;
        let table = self.frame_table()?;
        let cx = self.coefficients(x);
        let mut out = self.combine(&d);
        for k in 0..6 {
            let nabla_zk = (0..6).fold(HPoint::ZERO, |acc, m| acc + table[m][k].scale(cx[m]));
            out += nabla_zk.scale(f[k]);
        }
        Ok(out)
    }

    /// [`nabla_along`](Self::nabla_along) with the great circle in direction `x`.
    pub fn nabla_field<F>(&self, x: HPoint, field: F) -> Result<HPoint>
    where
        F: Fn(&SpherePoint) -> Result<HPoint>,
    {
        let x = self.horizontal(x);
        if x.norm() < 1e-300 {
            return Ok(HPoint::ZERO);
        }
        let base = self.base;
        self.nabla_along(x, |s| {
            let q = sphere_exp(&base, x, s)?;
            Ok((q, field(&q)?))
        })
    }
}
