//! Report serialization. Numbers in CSV and text use 17 significant digits.

use crate::report::{FamilyRow, Report};

pub fn to_json(reports: &[Report]) -> serde_json::Result<String> {
    let mut s = match reports {
        [one] => serde_json::to_string_pretty(one)?,
        many => serde_json::to_string_pretty(many)?,
    };
    s.push('\n');
    Ok(s)
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

const ROW_HEADER: [&str; 24] = [
    "t",
    "a",
    "theta_a",
    "lambda_closed",
    "lambda_numeric",
    "k1_closed",
    "k2_closed",
    "k3_closed",
    "k4_closed",
    "k5_closed",
    "k1_numeric",
    "k2_numeric",
    "k3_numeric",
    "k4_numeric",
    "k5_numeric",
    "mean_curvature",
    "trace_numeric",
    "scalar_reference",
    "scalar_numeric",
    "twistor_radius",
    "twistor_height",
    "twistor_residual",
    "mirror_residual",
    "error",
];

fn row_record(r: &FamilyRow) -> Vec<String> {
    let mut out = vec![num(r.t), num(r.a), num(r.theta_a), num(r.lambda_closed), num(r.lambda_numeric)];
    out.extend(r.principal_closed.iter().map(|&x| num(x)));
    out.extend(r.principal_numeric.iter().map(|&x| num(x)));
    out.extend([r.mean_curvature, r.trace_numeric, r.scalar_reference, r.scalar_numeric].map(num));
    out.extend([r.twistor_radius, r.twistor_height, r.twistor_residual].map(num));
    out.push(r.mirror_residual.map(num).unwrap_or_default());
    out.push(r.error.clone().unwrap_or_default());
    out
}

/// The family table when the only report has rows, otherwise one line per check.
pub fn to_csv(reports: &[Report]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match reports {
        [one] if !one.rows.is_empty() => {
            w.write_record(ROW_HEADER)?;
            for r in &one.rows {
                w.write_record(row_record(r))?;
            }
        }
        _ => {
            w.write_record(["suite", "name", "value", "threshold", "relation", "pass"])?;
            for rep in reports {
                for c in &rep.checks {
                    let rel = match c.relation {
                        crate::report::Relation::Below => "below",
                        crate::report::Relation::Above => "above",
                    };
                    w.write_record([
                        rep.suite.clone(),
                        c.name.clone(),
                        num(c.value),
                        num(c.threshold),
                        rel.to_string(),
                        c.pass.to_string(),
                    ])?;
                }
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn to_text(reports: &[Report]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for rep in reports {
        let failed = rep.failures().count();
        let _ = writeln!(
            s,
            "{}: {} ({} checks, {} failed, seed {}, step {:e})",
            rep.suite,
            if rep.pass { "PASS" } else { "FAIL" },
            rep.checks.len(),
            failed,
            rep.seed,
            rep.step
        );
        for c in rep.failures() {
            let _ = writeln!(s, "  FAIL {} = {:.16e} (threshold {:e})", c.name, c.value, c.threshold);
        }
        for e in &rep.errors {
            let _ = writeln!(s, "  error {e}");
        }
        for i in &rep.info {
            let _ = writeln!(s, "  info {} = {:.16e}", i.name, i.value);
        }
    }
    s
}
