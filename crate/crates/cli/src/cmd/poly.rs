use serde_json::{json, Map, Value};
use spinnet::arith::Rational;
use spinnet::orthopoly::{check_difference_equation, check_orthogonality, Family, FamilySpec};

use crate::args::{FamilyArgs, PolyCommand};
use crate::output::{col, exact_col, fmt_f64, rational_json, Report};
use crate::CliError;

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn given(args: &FamilyArgs) -> Vec<(&'static str, Option<&Rational>)> {
    vec![
        ("alpha", args.alpha.as_ref()),
        ("beta", args.beta.as_ref()),
        ("p", args.p.as_ref()),
        ("gamma", args.gamma.as_ref()),
        ("mu", args.mu.as_ref()),
        ("a", args.a.as_ref()),
        ("b", args.b.as_ref()),
        ("c", args.c.as_ref()),
    ]
}

fn needed(family: Family) -> (&'static [&'static str], bool) {
    match family {
        Family::Hahn => (&["alpha", "beta"], true),
        Family::Kravchuk => (&["p"], true),
        Family::Meixner => (&["gamma", "mu"], false),
        Family::Charlier => (&["mu"], false),
        Family::Racah => (&["alpha", "beta", "a", "b"], false),
        Family::DualHahn => (&["a", "b", "c"], false),
    }
}

/// Builds the family from its flags, rejecting missing and unrelated ones.
fn build_spec(args: &FamilyArgs) -> Result<FamilySpec, CliError> {
    let family = args.family;
    let (names, uses_n) = needed(family);
    for (name, value) in given(args) {
        if value.is_some() && !names.contains(&name) {
            return Err(usage(format!("--{name} does not apply to --family {family}")));
        }
    }
    if args.big_n.is_some() && !uses_n {
        return Err(usage(format!("--N does not apply to --family {family}")));
    }
    let get = |name: &str| -> Result<Rational, CliError> {
        given(args)
            .into_iter()
            .find(|(n, _)| *n == name)
            .and_then(|(_, v)| v.cloned())
            .ok_or_else(|| usage(format!("--family {family} needs --{name}")))
    };
    let big_n = || args.big_n.ok_or_else(|| usage(format!("--family {family} needs --N")));
    let spec = match family {
        Family::Hahn => FamilySpec::hahn(get("alpha")?, get("beta")?, big_n()?),
        Family::Kravchuk => FamilySpec::kravchuk(get("p")?, big_n()?),
        Family::Meixner => FamilySpec::meixner(get("gamma")?, get("mu")?),
        Family::Charlier => FamilySpec::charlier(get("mu")?),
        Family::Racah => FamilySpec::racah(get("alpha")?, get("beta")?, get("a")?, get("b")?),
        Family::DualHahn => FamilySpec::dual_hahn(get("a")?, get("b")?, get("c")?),
    };
    spec.map_err(usage)
}

fn params_json(args: &FamilyArgs) -> Value {
    let mut map = Map::new();
    for (name, value) in given(args) {
        if let Some(v) = value {
            map.insert(name.to_string(), rational_json(v));
        }
    }
    if let Some(n) = args.big_n {
        map.insert("N".to_string(), json!(n));
    }
    Value::Object(map)
}

fn to_f64(q: &Rational) -> f64 {
    spinnet::arith::rational_to_f64(q)
}

/// Degrees `0..=max_n` clipped to the family's finite range, with a note
/// when clipping happened.
fn degrees(spec: &FamilySpec, max_n: u32, notes: &mut Vec<String>) -> u32 {
    match spec.max_degree() {
        Some(top) if top < max_n => {
            notes.push(format!("degrees above {top} are not defined for this support; checked up to {top}"));
            top
        }
        _ => max_n,
    }
}

pub fn run(cmd: PolyCommand) -> Result<Report, CliError> {
    match cmd {
        PolyCommand::Eval { family, n, x } => {
            let spec = build_spec(&family)?;
            let value = spec.eval(n, &x).map_err(usage)?;
            let doc = json!({
                "command": "poly eval",
                "family": spec.family().to_string(),
                "params": params_json(&family),
                "n": n,
                "s": rational_json(&x),
                "value": rational_json(&value),
                "float": to_f64(&value),
            });
            let mut report =
                Report::new(doc, vec![col("family"), col("n"), col("s"), exact_col("value"), col("float")]);
            report.rows.push(vec![
                spec.family().to_string(),
                n.to_string(),
                x.to_string(),
                value.to_string(),
                fmt_f64(to_f64(&value)),
            ]);
            Ok(report)
        }
        PolyCommand::CheckOrtho { family, max_n } => {
            let spec = build_spec(&family)?;
            let mut notes = Vec::new();
            let top = degrees(&spec, max_n, &mut notes);
            let columns = vec![
                col("n"),
                col("m"),
                exact_col("sum"),
                exact_col("expected"),
                exact_col("residual"),
                col("verdict"),
            ];
            let mut rows = Vec::new();
            let mut pairs = Vec::new();
            let mut failures = 0;
            for n in 0..=top {
                let norm = spec.norm_sq(n).map_err(usage)?;
                for m in 0..=top {
                    let sum = check_orthogonality(&spec, n, m).map_err(usage)?;
                    let expected = if n == m { norm.clone() } else { Rational::default() };
                    let residual = &sum - &expected;
                    let pass = residual == Rational::default();
                    failures += usize::from(!pass);
                    let verdict = if pass { "PASS" } else { "FAIL" };
                    rows.push(vec![
                        n.to_string(),
                        m.to_string(),
                        sum.to_string(),
                        expected.to_string(),
                        residual.to_string(),
                        verdict.to_string(),
                    ]);
                    pairs.push(json!({
                        "n": n, "m": m,
                        "sum": rational_json(&sum),
                        "expected": rational_json(&expected),
                        "residual": rational_json(&residual),
                        "verdict": verdict,
                    }));
                }
            }
            let doc = json!({
                "command": "poly check-ortho",
                "family": spec.family().to_string(),
                "params": params_json(&family),
                "max_n": top,
                "pairs": pairs,
                "verdict": if failures == 0 { "PASS" } else { "FAIL" },
            });
            let mut report = Report::new(doc, columns);
            report.rows = rows;
            report.notes = notes;
            report.notes.push(format!(
                "{} of {} pairs pass",
                (top as usize + 1).pow(2) - failures,
                (top as usize + 1).pow(2)
            ));
            if failures > 0 {
                report.failure = Some(format!("{failures} orthogonality sums differ from d_n² δ_nm"));
            }
            Ok(report)
        }
        PolyCommand::CheckDiffeq { family, n, max_n } => {
            let spec = build_spec(&family)?;
            let mut notes = Vec::new();
            let list: Vec<u32> = match n {
                Some(n) => vec![n],
                None => (0..=degrees(&spec, max_n, &mut notes)).collect(),
            };
            let columns = vec![col("n"), col("points"), exact_col("max_residual"), col("verdict")];
            let mut rows = Vec::new();
            let mut entries = Vec::new();
            let mut failures = 0;
            for n in list {
                let r = check_difference_equation(&spec, n).map_err(usage)?;
                let pass = r.is_exact_zero();
                failures += usize::from(!pass);
                let verdict = if pass { "PASS" } else { "FAIL" };
                rows.push(vec![n.to_string(), r.points.len().to_string(), r.max_abs.to_string(), verdict.to_string()]);
                let points: Vec<Value> = r
                    .points
                    .iter()
                    .map(|(s, res)| json!({ "s": rational_json(s), "residual": rational_json(res) }))
                    .collect();
                entries.push(
                    json!({ "n": n, "points": points, "max_residual": rational_json(&r.max_abs), "verdict": verdict }),
                );
            }
            let doc = json!({
                "command": "poly check-diffeq",
                "family": spec.family().to_string(),
                "params": params_json(&family),
                "degrees": entries,
                "verdict": if failures == 0 { "PASS" } else { "FAIL" },
            });
            let mut report = Report::new(doc, columns);
            report.rows = rows;
            report.notes = notes;
            if failures > 0 {
                report.failure = Some(format!("{failures} degrees leave a nonzero residual"));
            }
            Ok(report)
        }
    }
}
