//! The verification suites behind the subcommands.

use core::f64::consts::FRAC_PI_4;

use nkcp3_core::cp3::{identity_suite, j1, sectional_curvature, GeoContext, Order};
use nkcp3_core::family::{
    family_shape, hopf_eigen_ga, mean_curvature_family, mirror_isometry_check, nonhorizontal_variants,
    principal_curvatures_closed, scalar_curvature_closed, scalar_curvature_gauss, scalar_curvature_reference,
    shape_trace_closed, t_grid, twistor_image, twistor_residual, FamilyChart, FamilyPoint,
};
use nkcp3_core::hyper::{
    codazzi_obstruction, csc_rhs_cyclic, is_hopf, log_grid, principal_curvatures, second_fundamental_form, tu_closed,
    tu_measured_closed, tu_obstruction, AlphaRoute, HypersurfaceChart, Matrix5, Moved, Params, Regauged, ShapeData,
    Structure, Vector5,
};
use nkcp3_core::sampling::{gaussian, horizontal_unit, sample_rng, sp2_element, sphere_point, unit_quaternion};
use nkcp3_core::Result as GeoResult;

use crate::config::RunConfig;
use crate::report::{Check, FamilyRow, Report};

/// Largest change of the hypersurface invariants tolerated under gauge
/// rotations and isometries.
pub const INVARIANCE_TOL: f64 = 1e-8;

pub const VERIFY_A: [f64; 4] = [0.5, 1.0, 2.0, 5.0];
pub const FAMILY_A: [f64; 2] = [1.0, 2.0];
pub const OBSTRUCTION_THETA: [f64; 5] = [0.1, 0.4, 0.7, 1.0, 1.3];

fn obstruction_a() -> Vec<f64> {
    log_grid(0.01, 100.0, 41)
}

fn order_tol(cfg: &RunConfig, order: Order) -> f64 {
    match order {
        Order::Algebraic => cfg.tol_algebraic,
        Order::First => cfg.tol_first_order,
        Order::Second => cfg.tol_second_order,
    }
}

/// Structure-tensor identities, curvature cross-checks and invariance of
/// the hypersurface invariants.
pub fn verify(cfg: &RunConfig) -> Report {
    let mut rep = Report::new("verify", cfg.seed, cfg.fd_step);
    for a in cfg.a_or(&VERIFY_A) {
        match identity_suite(a, cfg.fd_step, cfg.samples, cfg.seed) {
            Ok(r) => {
                for c in &r.checks {
                    rep.push(Check::below(format!("a={a}/{}", c.name), c.residual, order_tol(cfg, c.order)));
                }
                rep.note(format!("a={a}/constant_type_fit"), r.constant_type_fit);
            }
            Err(e) => rep.error(format!("a={a}/identity_suite"), e),
        }
    }
    match holomorphic_curvature_gap(cfg) {
        Ok(v) => rep.push(Check::below("a=1/holomorphic_sectional_curvature", v, cfg.tol_first_order)),
        Err(e) => rep.error("a=1/holomorphic_sectional_curvature", e),
    }
    for a in cfg.a_or(&VERIFY_A) {
        match invariance(a, cfg) {
            Ok(v) => {
                rep.push(Check::below(format!("a={a}/invariance_angle"), v[0], INVARIANCE_TOL));
                rep.push(Check::below(format!("a={a}/invariance_lambda"), v[1], INVARIANCE_TOL));
                rep.push(Check::below(format!("a={a}/invariance_principal_curvatures"), v[2], INVARIANCE_TOL));
            }
            Err(e) => rep.error(format!("a={a}/invariance"), e),
        }
    }
    rep
}

/// `max |K(X, J1 X) - 4|` for the Fubini-Study metric.
pub fn holomorphic_curvature_gap(cfg: &RunConfig) -> GeoResult<f64> {
    let mut worst = 0.0f64;
    for k in 0..cfg.samples {
        let mut rng = sample_rng(cfg.seed, k as u64);
        let p = sphere_point(&mut rng);
        let x = horizontal_unit(&mut rng, &p);
        worst = worst.max((sectional_curvature(1.0, &p, x, j1(x))? - 4.0).abs());
    }
    Ok(worst)
}

fn shape_of<C: HypersurfaceChart>(a: f64, chart: &C, u: &Params, route: AlphaRoute) -> GeoResult<ShapeData> {
    let ctx = GeoContext::new(a, chart.point(u)?)?;
    second_fundamental_form(&ctx, chart, u, route)
}

fn invariants(s: &ShapeData) -> GeoResult<(f64, f64, [f64; 5])> {
    Ok((s.theta_a, is_hopf(s, Structure::J, INVARIANCE_TOL)?.lambda, principal_curvatures(s)))
}

fn max_change(x: &(f64, f64, [f64; 5]), y: &(f64, f64, [f64; 5]), out: &mut [f64; 3]) {
    out[0] = out[0].max((x.0 - y.0).abs());
    out[1] = out[1].max((x.1 - y.1).abs());
    for (p, q) in x.2.iter().zip(y.2) {
        out[2] = out[2].max((p - q).abs());
    }
}

/// Largest change of `θ_a`, `α(ξ, ξ)` and the principal curvatures under a
/// random gauge rotation of the lift and a random element of `Sp(2)`, on a
/// member of the family and on a non-horizontal unitary image of it.
pub fn invariance(a: f64, cfg: &RunConfig) -> GeoResult<[f64; 3]> {
    let mut worst = [0.0f64; 3];
    for k in 0..cfg.samples.min(10) {
        let mut rng = sample_rng(cfg.seed ^ 0x1417, k as u64);
        let chart = FamilyChart::new(0.6, unit_quaternion(&mut rng), unit_quaternion(&mut rng))?;
        let u: Params = core::array::from_fn(|_| 0.2 * gaussian(&mut rng));
        let phase: [f64; 6] = core::array::from_fn(|_| gaussian(&mut rng));
        let element = sp2_element(&mut rng).flow(1.0);

        let base = invariants(&shape_of(a, &chart, &u, AlphaRoute::Auto)?)?;
        for other in [
            shape_of(a, &Regauged { inner: chart, phase }, &u, AlphaRoute::Auto)?,
            shape_of(a, &Regauged { inner: chart, phase }, &u, AlphaRoute::Chart)?,
            shape_of(a, &Moved { inner: chart, element }, &u, AlphaRoute::Auto)?,
        ] {
            max_change(&base, &invariants(&other)?, &mut worst);
        }

        let [_, mixed] = nonhorizontal_variants(chart);
        let base = invariants(&shape_of(a, &mixed, &u, AlphaRoute::Chart)?)?;
        let regauged = Regauged { inner: mixed, phase };
        max_change(&base, &invariants(&shape_of(a, &regauged, &u, AlphaRoute::Chart)?)?, &mut worst);
        let moved = Moved { inner: mixed, element };
        max_change(&base, &invariants(&shape_of(a, &moved, &u, AlphaRoute::Chart)?)?, &mut worst);
    }
    Ok(worst)
}

fn tag(t: f64, a: f64) -> String {
    format!("t={t:.6} a={a}")
}

fn max_gap(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}

/// One cell of the family table, evaluated at a seeded point of `H_t`.
pub fn family_row(t: f64, a: f64, cfg: &RunConfig, index: u64) -> GeoResult<FamilyRow> {
    let mut rng = sample_rng(cfg.seed, index);
    let point = FamilyPoint::new(t, unit_quaternion(&mut rng), unit_quaternion(&mut rng))?;
    let shape = family_shape(a, &point)?;
    let (radius, height) = twistor_image(t)?;
    let s = (t - FRAC_PI_4).abs();
    let mirror_residual =
        if s > 1e-12 { Some(mirror_isometry_check(s, a, cfg.samples.min(20), cfg.seed)?) } else { None };
    Ok(FamilyRow {
        t,
        a,
        theta_a: shape.theta_a,
        lambda_closed: hopf_eigen_ga(a, t)?,
        lambda_numeric: is_hopf(&shape, Structure::J, cfg.tol_first_order)?.lambda,
        principal_closed: principal_curvatures_closed(a, t)?,
        principal_numeric: principal_curvatures(&shape),
        mean_curvature: mean_curvature_family(a, t)?,
        trace_numeric: shape.mean_curvature(),
        scalar_reference: scalar_curvature_reference(a, t)?,
        scalar_numeric: scalar_curvature_gauss(&shape)?,
        twistor_radius: radius,
        twistor_height: height,
        twistor_residual: twistor_residual(&point)?,
        mirror_residual,
        error: None,
    })
}

fn row_checks(rep: &mut Report, row: &FamilyRow, cfg: &RunConfig) -> GeoResult<()> {
    let name = tag(row.t, row.a);
    rep.push(Check::below(format!("{name}/theta_a"), row.theta_a, cfg.tol_algebraic));
    rep.push(Check::below(
        format!("{name}/hopf_eigenvalue"),
        (row.lambda_numeric - row.lambda_closed).abs(),
        cfg.tol_first_order,
    ));
    rep.push(Check::below(
        format!("{name}/principal_curvatures"),
        max_gap(&row.principal_numeric, &row.principal_closed),
        cfg.tol_first_order,
    ));
    rep.push(Check::below(
        format!("{name}/shape_trace"),
        (row.trace_numeric - shape_trace_closed(row.a, row.t)?).abs(),
        cfg.tol_first_order,
    ));
    rep.push(Check::below(
        format!("{name}/scalar_curvature"),
        (row.scalar_numeric - scalar_curvature_closed(row.a, row.t)?).abs(),
        cfg.tol_first_order,
    ));
    rep.push(Check::below(format!("{name}/twistor"), row.twistor_residual, cfg.tol_algebraic));
    if let Some(m) = row.mirror_residual {
        rep.push(Check::below(format!("{name}/mirror_metric"), m, cfg.tol_algebraic));
    }
    rep.note(format!("{name}/scalar_reference_gap"), (row.scalar_reference - row.scalar_numeric).abs());
    Ok(())
}

/// The family table: one row per `(t, a)` in declared order.
pub fn family(cfg: &RunConfig) -> Report {
    let mut rep = Report::new("family", cfg.seed, cfg.fd_step);
    let ts = if cfg.t_list.is_empty() { t_grid().to_vec() } else { cfg.t_list.clone() };
    let mut index = 0;
    for &t in &ts {
        for a in cfg.a_or(&FAMILY_A) {
            let outcome = family_row(t, a, cfg, index).and_then(|row| {
                row_checks(&mut rep, &row, cfg)?;
                Ok(row)
            });
            match outcome {
                Ok(row) => rep.rows.push(row),
                Err(e) => {
                    rep.rows.push(FamilyRow { t, a, error: Some(e.to_string()), ..FamilyRow::default() });
                    rep.error(tag(t, a), e);
                }
            }
            index += 1;
        }
    }
    rep
}

/// `max |S(-α((U∧X)Y, Z) - α(Y, (U∧X)Z))|` over random symmetric `α` and
/// random vectors in an orthonormal frame.
pub fn csc_max(draws: usize, seed: u64) -> f64 {
    let mut worst = 0.0f64;
    for k in 0..draws {
        let mut rng = sample_rng(seed ^ 0xc5c, k as u64);
        let m = Matrix5::from_fn(|_, _| gaussian(&mut rng));
        let alpha = (m + m.transpose()) * 0.5;
        let v: [Vector5; 4] = core::array::from_fn(|_| Vector5::from_fn(|_, _| gaussian(&mut rng)));
        worst = worst.max(csc_rhs_cyclic(&alpha, &Matrix5::identity(), &v[0], &v[1], &v[2], &v[3]).abs());
    }
    worst
}

/// Obstruction scalars over the metric grid.
pub fn obstructions(cfg: &RunConfig) -> Report {
    let mut rep = Report::new("obstructions", cfg.seed, cfg.fd_step);
    let grid = cfg.a_or(&obstruction_a());

    let scan = |rep: &mut Report, name: &str, thetas: &[f64]| {
        let (mut gap, mut min_abs) = (0.0f64, f64::INFINITY);
        for &a in &grid {
            for &theta in thetas {
                match codazzi_obstruction(a, theta) {
                    Ok(v) => {
                        gap = gap.max(v.agreement());
                        min_abs = min_abs.min(v.gap_from_zero.min(v.numeric.abs()));
                    }
                    Err(e) => rep.error(format!("{name}/a={a}/theta={theta}"), e),
                }
            }
        }
        rep.push(Check::below(format!("{name}/closed_vs_numeric"), gap, cfg.tol_first_order));
        rep.push(Check::above(format!("{name}/min_abs"), min_abs, 0.0));
    };
    scan(&mut rep, "codazzi_horizontal", &[0.0]);
    scan(&mut rep, "codazzi_nonhorizontal", &OBSTRUCTION_THETA);

    let min_reference = grid.iter().map(|&a| tu_closed(a)).fold(f64::INFINITY, f64::min);
    rep.push(Check::above("totally_umbilical/min_reference", min_reference, 0.0));
    let (mut gap, mut min_measured, mut reference_gap) = (0.0f64, f64::INFINITY, 0.0f64);
    for &a in &grid {
        match tu_obstruction(a) {
            Ok(v) => {
                gap = gap.max((v.numeric - tu_measured_closed(a)).abs());
                min_measured = min_measured.min(v.numeric);
                reference_gap = reference_gap.max(v.agreement());
            }
            Err(e) => rep.error(format!("totally_umbilical/a={a}"), e),
        }
    }
    rep.push(Check::below("totally_umbilical/closed_vs_numeric", gap, cfg.tol_first_order));
    rep.push(Check::above("totally_umbilical/min_numeric", min_measured, 0.0));
    rep.note("totally_umbilical/reference_vs_numeric", reference_gap);

    rep.push(Check::below("csc_rhs_cyclic", csc_max(cfg.samples * 10, cfg.seed), cfg.tol_algebraic));
    rep
}
