use serde_json::{json, Map, Value};
use spinnet::wigner::{
    clebsch_gordan, nine_j_with, recoupling_u, six_j, three_j, twelve_j_second_kind_with, SixJLabels, SixJPath,
    TwelveJLabels,
};
use spinnet::{HalfInt, RadicalSum, Spin};

use crate::args::{PathChoice, WignerCommand};
use crate::output::{col, exact_col, exact_json, float_cells, half_json, spin_json, Report};
use crate::CliError;

fn inputs(names: &[&str], spins: &[Spin], halves: &[(&str, HalfInt)]) -> Value {
    let mut map = Map::new();
    for (n, s) in names.iter().zip(spins) {
        map.insert(n.to_string(), spin_json(*s));
    }
    for (n, m) in halves {
        map.insert(n.to_string(), half_json(*m));
    }
    Value::Object(map)
}

fn paths(choice: PathChoice) -> Vec<SixJPath> {
    match choice {
        PathChoice::Racah => vec![SixJPath::Racah],
        PathChoice::Oracle => vec![SixJPath::Oracle],
        PathChoice::Both => vec![SixJPath::Racah, SixJPath::Oracle],
    }
}

fn path_name(p: SixJPath) -> &'static str {
    match p {
        SixJPath::Racah => "racah",
        SixJPath::Oracle => "oracle",
    }
}

/// One or more evaluations of the same symbol, with a verdict when two paths
/// were compared.
fn symbol_report(command: &str, symbol: String, inputs: Value, results: Vec<(Option<&str>, RadicalSum)>) -> Report {
    let columns = vec![col("symbol"), col("path"), exact_col("exact"), col("value"), col("error_bound")];
    let verdict = (results.len() > 1).then(|| results.windows(2).all(|w| w[0].1 == w[1].1));
    let json_results: Vec<Value> = results
        .iter()
        .map(|(p, v)| {
            let mut obj = json!({ "exact": exact_json(v) });
            if let Some(p) = p {
                obj["path"] = json!(p);
            }
            obj
        })
        .collect();
    let mut doc = json!({ "command": command, "inputs": inputs, "results": json_results });
    if let Some(agree) = verdict {
        doc["verdict"] = json!(if agree { "agree" } else { "disagree" });
    }
    let mut report = Report::new(doc, columns);
    for (p, v) in &results {
        let (value, bound) = float_cells(v);
        report.rows.push(vec![symbol.clone(), p.unwrap_or("").to_string(), v.to_string(), value, bound]);
    }
    if let Some(agree) = verdict {
        report.notes.push(format!("verdict: {}", if agree { "agree" } else { "disagree" }));
        if !agree {
            report.failure = Some(format!("{command}: evaluation paths disagree for {symbol}"));
        }
    }
    report
}

fn fmt_spins(spins: &[Spin]) -> String {
    spins.iter().map(Spin::to_string).collect::<Vec<_>>().join(" ")
}

pub fn run(cmd: WignerCommand) -> Result<Report, CliError> {
    Ok(match cmd {
        WignerCommand::ThreeJ { values } => {
            let (j, m) = values.split_at(3);
            let j = j
                .iter()
                .map(|h| {
                    u32::try_from(h.twice())
                        .map(Spin::from_twice)
                        .map_err(|_| CliError::Usage(format!("spin '{h}' must be non-negative")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let v = three_j(j[0], j[1], j[2], m[0], m[1], m[2]);
            let symbol = format!("({}; {} {} {})", fmt_spins(&j), m[0], m[1], m[2]);
            let inp = inputs(&["j1", "j2", "j3"], &j, &[("m1", m[0]), ("m2", m[1]), ("m3", m[2])]);
            symbol_report("wigner 3j", symbol, inp, vec![(None, v.into())])
        }
        WignerCommand::Cg { j1, j2, m1, m2, j, m } => {
            let v = clebsch_gordan(j1, j2, m1, m2, j, m);
            let symbol = format!("<{j1} {m1} {j2} {m2} | {j} {m}>");
            let inp = inputs(&["j1", "j2", "j"], &[j1, j2, j], &[("m1", m1), ("m2", m2), ("m", m)]);
            symbol_report("wigner cg", symbol, inp, vec![(None, v.into())])
        }
        WignerCommand::SixJ { labels, path } => {
            let l = SixJLabels::new(labels[0], labels[1], labels[2], labels[3], labels[4], labels[5]);
            let results = paths(path).into_iter().map(|p| (Some(path_name(p)), six_j(&l, p).into())).collect();
            let inp = inputs(&["j1", "j2", "j12", "j3", "j", "j23"], &labels, &[]);
            symbol_report("wigner 6j", l.to_string(), inp, results)
        }
        WignerCommand::NineJ { labels, path } => {
            let arr = [0, 1, 2].map(|r| [0, 1, 2].map(|c| labels[3 * r + c]));
            let results = paths(path).into_iter().map(|p| (Some(path_name(p)), nine_j_with(&arr, p))).collect();
            let names = ["j11", "j12", "j13", "j21", "j22", "j23", "j31", "j32", "j33"];
            let symbol =
                format!("{{{}; {}; {}}}", fmt_spins(&labels[0..3]), fmt_spins(&labels[3..6]), fmt_spins(&labels[6..9]));
            symbol_report("wigner 9j", symbol, inputs(&names, &labels, &[]), results)
        }
        WignerCommand::TwelveJ { labels, path } => {
            let t: Vec<u32> = labels.iter().map(|s| s.twice()).collect();
            let arr = TwelveJLabels::from_twice(
                [t[0], t[1], t[2], t[3]],
                [t[4], t[5], t[6], t[7]],
                [t[8], t[9], t[10], t[11]],
            );
            let results =
                paths(path).into_iter().map(|p| (Some(path_name(p)), twelve_j_second_kind_with(&arr, p))).collect();
            let names = ["j1", "j2", "j3", "j4", "l1", "l2", "l3", "l4", "k1", "k2", "k3", "k4"];
            let symbol = format!(
                "{{{}; {}; {}}}",
                fmt_spins(&labels[0..4]),
                fmt_spins(&labels[4..8]),
                fmt_spins(&labels[8..12])
            );
            symbol_report("wigner 12j", symbol, inputs(&names, &labels, &[]), results)
        }
        WignerCommand::U { labels } => {
            let [j1, j2, j3, j, j12, j23] = [0, 1, 2, 3, 4, 5].map(|i| labels[i]);
            let v = recoupling_u(j1, j2, j3, j, j12, j23);
            let symbol = format!("U({}; {j12}, {j23})", fmt_spins(&labels[0..4]));
            let inp = inputs(&["j1", "j2", "j3", "j", "j12", "j23"], &labels, &[]);
            symbol_report("wigner u", symbol, inp, vec![(None, v.into())])
        }
    })
}
