use serde_json::{json, Value};
use spinnet::asymptotics::{
    d_sweep, eq1_window, pr_equilateral_window, six_j_ponzano_regge, ComparisonRow, RegimeFlags,
};
use spinnet::wigner::{six_j_oracle, SixJLabels};

use crate::args::AsymCommand;
use crate::output::{col, fmt_f64, fmt_opt, half_json, spin_json, Column, Report};
use crate::CliError;

fn flag_names(f: &RegimeFlags) -> Vec<&'static str> {
    let mut v = Vec::new();
    if f.near_singular {
        v.push("near_singular");
    }
    if f.small_spin {
        v.push("small_spin");
    }
    if f.large_coupling {
        v.push("large_coupling");
    }
    v
}

fn flag_cell(f: &RegimeFlags) -> String {
    let names = flag_names(f);
    if names.is_empty() {
        "-".to_string()
    } else {
        names.join("|")
    }
}

/// Comparison columns shared by every table.
const COMPARISON: [Column; 6] =
    [col("exact"), col("asymptotic"), col("abs_error"), col("rel_error"), col("flags"), col("note")];

fn comparison_cells<I>(r: &ComparisonRow<I>) -> Vec<String> {
    vec![
        fmt_f64(r.exact),
        fmt_opt(r.asymptotic),
        fmt_opt(r.abs_error),
        fmt_opt(r.rel_error),
        flag_cell(&r.flags),
        r.note.clone().unwrap_or_default(),
    ]
}

fn comparison_json<I>(r: &ComparisonRow<I>) -> Value {
    json!({
        "exact": r.exact,
        "asymptotic": r.asymptotic,
        "abs_error": r.abs_error,
        "rel_error": r.rel_error,
        "flags": flag_names(&r.flags),
        "excluded": r.excluded,
        "note": r.note,
    })
}

fn labels_json(l: &SixJLabels) -> Value {
    Value::Array(l.spins().iter().map(|s| spin_json(*s)).collect())
}

fn with_fields(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

pub fn run(cmd: AsymCommand) -> Result<Report, CliError> {
    match cmd {
        AsymCommand::D { j, m, mp, theta, scales } => {
            let js = if scales.is_empty() { vec![j] } else { scales };
            let rows = d_sweep(m, mp, theta, &js);
            let mut columns = vec![col("j"), col("m"), col("mp"), col("theta")];
            columns.extend(COMPARISON);
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let head =
                        json!({ "j": spin_json(r.inputs.j), "m": half_json(m), "mp": half_json(mp), "theta": theta });
                    with_fields(head, comparison_json(r))
                })
                .collect();
            let mut report = Report::new(json!({ "command": "asym d", "rows": json_rows }), columns);
            for r in &rows {
                let mut cells = vec![r.inputs.j.to_string(), m.to_string(), mp.to_string(), fmt_f64(theta)];
                cells.extend(comparison_cells(r));
                report.rows.push(cells);
            }
            Ok(report)
        }
        AsymCommand::SixJEq1 { base, j12, scales } => {
            let bases = if scales.is_empty() { vec![base] } else { scales };
            let mut columns = vec![col("base"), col("j12"), col("j23")];
            columns.extend(COMPARISON);
            columns.extend([col("excluded"), col("median_rel_error")]);
            let mut report = Report::new(Value::Null, columns);
            let mut blocks = Vec::new();
            for k in bases {
                let w = eq1_window(k, j12);
                let median = fmt_opt(w.median_rel_error);
                let mut json_rows = Vec::new();
                for r in &w.rows {
                    let mut cells = vec![k.to_string(), j12.to_string(), r.inputs.j23.to_string()];
                    cells.extend(comparison_cells(r));
                    cells.extend([r.excluded.to_string(), median.clone()]);
                    report.rows.push(cells);
                    json_rows.push(with_fields(json!({ "labels": labels_json(&r.inputs) }), comparison_json(r)));
                }
                report.notes.push(format!(
                    "base {k}: median relative error {} over {} rows",
                    median,
                    w.rows.iter().filter(|r| !r.excluded).count()
                ));
                blocks.push(json!({
                    "base": spin_json(k),
                    "j12": spin_json(j12),
                    "median_rel_error": w.median_rel_error,
                    "rows": json_rows,
                }));
            }
            report.json = json!({ "command": "asym 6j-eq1", "blocks": blocks });
            Ok(report)
        }
        AsymCommand::SixJPr { equilateral: _, scales, width, labels } => {
            if let Some(l) = labels {
                let l = SixJLabels::new(l[0], l[1], l[2], l[3], l[4], l[5]);
                let exact = six_j_oracle(&l).to_f64();
                let row = ComparisonRow::compare(l, exact, six_j_ponzano_regge(&l));
                let mut columns = vec![col("labels")];
                columns.extend(COMPARISON);
                let doc = json!({
                    "command": "asym 6j-pr",
                    "rows": [with_fields(json!({ "labels": labels_json(&l) }), comparison_json(&row))],
                });
                let mut report = Report::new(doc, columns);
                let mut cells = vec![l.to_string()];
                cells.extend(comparison_cells(&row));
                report.rows.push(cells);
                return Ok(report);
            }
            if width == 0 {
                return Err(CliError::Usage("--width must be at least 1".into()));
            }
            let mut columns = vec![col("scale"), col("k")];
            columns.extend(COMPARISON);
            columns.extend([col("rms_error"), col("relative_rms"), col("envelope_ratio")]);
            let mut report = Report::new(Value::Null, columns);
            let mut blocks = Vec::new();
            for start in scales {
                let w = pr_equilateral_window(start, width);
                let summary = [fmt_f64(w.rms_error), fmt_f64(w.relative_rms), fmt_f64(w.envelope_ratio)];
                let mut json_rows = Vec::new();
                for r in &w.rows {
                    let k = r.inputs.j1;
                    let mut cells = vec![start.to_string(), k.to_string()];
                    cells.extend(comparison_cells(r));
                    cells.extend(summary.iter().cloned());
                    report.rows.push(cells);
                    json_rows.push(with_fields(json!({ "k": spin_json(k) }), comparison_json(r)));
                }
                blocks.push(json!({
                    "scale": start,
                    "width": width,
                    "rms_error": w.rms_error,
                    "relative_rms": w.relative_rms,
                    "envelope_ratio": w.envelope_ratio,
                    "rows": json_rows,
                }));
            }
            report.json = json!({ "command": "asym 6j-pr", "equilateral": true, "blocks": blocks });
            Ok(report)
        }
    }
}
