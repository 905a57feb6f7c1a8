use serde_json::{json, Value};
use spinnet::arith::Rational;
use spinnet::{HalfInt, RadicalSum, Spin};

/// Bits used for the dyadic evaluation printed next to exact values.
pub const PRECISION: u32 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug)]
pub struct Column {
    pub name: &'static str,
    /// Exact-value columns are left out of CSV output.
    pub exact: bool,
}

pub const fn col(name: &'static str) -> Column {
    Column { name, exact: false }
}

pub const fn exact_col(name: &'static str) -> Column {
    Column { name, exact: true }
}

/// The result of one command: a JSON document plus the same content as rows
/// for the table and CSV renderings.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    /// Set when a check failed; the command exits with status 3 after
    /// printing.
    pub failure: Option<String>,
}

impl Report {
    pub fn new(json: Value, columns: Vec<Column>) -> Self {
        Report { json, columns, rows: Vec::new(), notes: Vec::new(), failure: None }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let keep: Vec<usize> = (0..self.columns.len()).filter(|&i| !self.columns[i].exact).collect();
        let mut out = String::new();
        let line = |cells: Vec<&str>| cells.into_iter().map(csv_cell).collect::<Vec<_>>().join(",") + "\n";
        out.push_str(&line(keep.iter().map(|&i| self.columns[i].name).collect()));
        for row in &self.rows {
            out.push_str(&line(keep.iter().map(|&i| row[i].as_str()).collect()));
        }
        out
    }

    fn render_table(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.name.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.columns.iter().map(|c| c.name).collect());
        for row in &self.rows {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
        }
        for note in &self.notes {
            out.push_str(note);
            out.push('\n');
        }
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn spin_json(s: Spin) -> Value {
    json!({ "twice": s.twice(), "value": s.to_string() })
}

pub fn half_json(m: HalfInt) -> Value {
    json!({ "twice": m.twice(), "value": m.to_string() })
}

pub fn rational_json(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

/// Lossless exact value with its certified floating-point reading.
pub fn exact_json(x: &RadicalSum) -> Value {
    let approx = x.eval(PRECISION);
    json!({
        "terms": serde_json::to_value(x).expect("radical sums serialize"),
        "display": x.to_string(),
        "value": approx.value(),
        "error_bound": approx.error_bound(),
    })
}

/// `(value, error_bound)` of an exact value, formatted for tables.
pub fn float_cells(x: &RadicalSum) -> (String, String) {
    let approx = x.eval(PRECISION);
    (fmt_f64(approx.value()), format!("{:e}", approx.error_bound()))
}

pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 || (1e-4..1e6).contains(&v.abs()) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}
