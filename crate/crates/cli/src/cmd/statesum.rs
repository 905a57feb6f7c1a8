use std::path::Path;

use serde_json::{json, Value};
use spinnet::par;
use spinnet::statesum::{
    cutoff_sweep, evaluate_sum, load_triangulation, pachner_23_check, CutoffPolicy, PachnerBoundary, PachnerReport,
    StateSum, StateSumError, Triangulation, PACHNER_EDGES,
};
use spinnet::{RadicalSum, Spin};

use crate::args::{Check, StatesumArgs};
use crate::output::{col, exact_col, exact_json, float_cells, spin_json, Report};
use crate::CliError;

fn sum_error(e: StateSumError) -> CliError {
    match e {
        StateSumError::InadmissibleBoundary { .. } => CliError::Document(e.to_string()),
        StateSumError::NonIntegerPhase { .. } => CliError::Usage(e.to_string()),
    }
}

fn load(path: &Path) -> Result<Triangulation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Document(format!("{}: {e}", path.display())))?;
    load_triangulation(&text).map_err(|e| CliError::Document(format!("{}: {e}", path.display())))
}

fn sum_json(s: &StateSum) -> Value {
    json!({
        "lambda": spin_json(s.lambda),
        "colorings": s.colorings,
        "exact": exact_json(&s.exact),
    })
}

fn evaluate(args: &StatesumArgs, path: &Path) -> Result<Report, CliError> {
    let t = load(path)?;
    let convention = args.phase.convention();
    let sums = if args.sweep.is_empty() {
        let lambda = args.lambda.unwrap_or(Spin::ZERO);
        vec![evaluate_sum(&t, CutoffPolicy::new(lambda), convention).map_err(sum_error)?]
    } else {
        cutoff_sweep(&t, &args.sweep, convention).map_err(sum_error)?
    };
    let boundary: Vec<Value> =
        t.edges.iter().filter_map(|e| e.spin.map(|s| json!({ "id": e.id, "spin": spin_json(s) }))).collect();
    let internal: Vec<&str> = t.internal.iter().map(|&i| t.edges[i].id.as_str()).collect();
    let doc = json!({
        "command": "statesum",
        "input": path.display().to_string(),
        "phase": args.phase.to_string(),
        "tetrahedra": t.tetrahedra.len(),
        "boundary_edges": boundary,
        "internal_edges": internal,
        "results": sums.iter().map(sum_json).collect::<Vec<_>>(),
    });
    let columns = vec![col("lambda"), col("colorings"), exact_col("exact"), col("value"), col("error_bound")];
    let mut report = Report::new(doc, columns);
    for s in &sums {
        let (value, bound) = float_cells(&s.exact);
        report.rows.push(vec![s.lambda.to_string(), s.colorings.to_string(), s.exact.to_string(), value, bound]);
    }
    report.notes.push(format!(
        "{} tetrahedra, {} internal edges, phase {}",
        t.tetrahedra.len(),
        t.internal.len(),
        args.phase
    ));
    Ok(report)
}

fn boundary_json(b: &PachnerBoundary) -> Value {
    let map: serde_json::Map<String, Value> =
        PACHNER_EDGES.iter().zip(b.spins).map(|(e, s)| (e.to_string(), spin_json(s))).collect();
    Value::Object(map)
}

fn boundary_cell(b: &PachnerBoundary) -> String {
    b.spins.iter().map(|s| s.twice().to_string()).collect::<Vec<_>>().join(" ")
}

fn report_json(index: usize, r: &PachnerReport) -> Value {
    json!({
        "index": index,
        "boundary": boundary_json(&r.boundary),
        "lambda": spin_json(r.lambda),
        "range_top": r.range_top.map(spin_json),
        "two_side": exact_json(&r.two_side),
        "three_side": exact_json(&r.three_side),
        "gap": exact_json(&r.gap),
        "verdict": if r.equal { "PASS" } else { "FAIL" },
    })
}

fn pachner(args: &StatesumArgs) -> Result<Report, CliError> {
    let max_twice = args.max_spin.twice();
    let lambda = args.lambda.unwrap_or_else(|| Spin::from_twice(2 * max_twice));
    let boundaries = PachnerBoundary::seeded(args.seed, args.count, max_twice);
    let results = par::map_ordered(&boundaries, |b| pachner_23_check(b, CutoffPolicy::new(lambda)));
    let reports = results.into_iter().collect::<Result<Vec<_>, _>>().map_err(sum_error)?;

    let passed = reports.iter().filter(|r| r.equal).count();
    let doc = json!({
        "command": "statesum --check pachner23",
        "seed": args.seed,
        "max_spin": spin_json(args.max_spin),
        "lambda": spin_json(lambda),
        "boundary_edges": PACHNER_EDGES,
        "checks": reports.iter().enumerate().map(|(i, r)| report_json(i, r)).collect::<Vec<_>>(),
        "passed": passed,
        "total": reports.len(),
        "verdict": if passed == reports.len() { "PASS" } else { "FAIL" },
    });
    let columns = vec![
        col("index"),
        col("boundary_twice"),
        col("range_top"),
        col("two_side"),
        col("three_side"),
        exact_col("gap"),
        col("verdict"),
    ];
    let mut report = Report::new(doc, columns);
    for (i, r) in reports.iter().enumerate() {
        let value = |x: &RadicalSum| float_cells(x).0;
        report.rows.push(vec![
            i.to_string(),
            boundary_cell(&r.boundary),
            r.range_top.map(|s| s.to_string()).unwrap_or_default(),
            value(&r.two_side),
            value(&r.three_side),
            r.gap.to_string(),
            (if r.equal { "PASS" } else { "FAIL" }).to_string(),
        ]);
    }
    let edges = PACHNER_EDGES.join(" ");
    report.notes.push(format!("boundary_twice lists doubled spins of {edges}"));
    report.notes.push(format!("pachner23: {passed}/{} PASS at lambda {lambda}", reports.len()));
    if passed != reports.len() {
        report.failure = Some(format!("{} of {} configurations differ", reports.len() - passed, reports.len()));
    }
    Ok(report)
}

pub fn run(args: StatesumArgs) -> Result<Report, CliError> {
    match (args.check, &args.input) {
        (Some(Check::Pachner23), _) => pachner(&args),
        (None, Some(path)) => evaluate(&args, path),
        (None, None) => Err(CliError::Usage("--input is required".into())),
    }
}
