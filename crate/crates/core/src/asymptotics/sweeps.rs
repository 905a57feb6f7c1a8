use std::f64::consts::PI;

use serde::Serialize;

use super::{
    six_j_asymptotic_eq1, six_j_ponzano_regge, tet_geometry, wigner_d_asymptotic, wigner_d_exact, AsymptoticError,
    AsymptoticValue, RegimeFlags,
};
use crate::arith::{HalfInt, Spin};
use crate::par;
use crate::wigner::{six_j_oracle, SixJLabels};

/// One exact-versus-approximate comparison. When the approximation is not
/// defined for the inputs the error is recorded in `note` and the numeric
/// columns are empty.
#[derive(Clone, Debug, Serialize)]
pub struct ComparisonRow<I> {
    pub inputs: I,
    pub exact: f64,
    pub asymptotic: Option<f64>,
    pub abs_error: Option<f64>,
    pub rel_error: Option<f64>,
    pub flags: RegimeFlags,
    /// Set for rows left out of the summary statistics.
    pub excluded: bool,
    pub note: Option<String>,
}

impl<I> ComparisonRow<I> {
    /// Build a row from an exact value and the result of an approximation.
    pub fn compare(inputs: I, exact: f64, approx: Result<AsymptoticValue, AsymptoticError>) -> Self {
        match approx {
            Ok(v) => {
                let abs = (v.value - exact).abs();
                ComparisonRow {
                    inputs,
                    exact,
                    asymptotic: Some(v.value),
                    abs_error: Some(abs),
                    rel_error: (exact != 0.0).then(|| abs / exact.abs()),
                    flags: v.flags,
                    excluded: false,
                    note: None,
                }
            }
            Err(e) => ComparisonRow {
                inputs,
                exact,
                asymptotic: None,
                abs_error: None,
                rel_error: None,
                flags: RegimeFlags::default(),
                excluded: true,
                note: Some(e.to_string()),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DInputs {
    pub j: Spin,
    pub m: HalfInt,
    pub mp: HalfInt,
    pub theta: f64,
}

/// `d^j_{m,m'}(θ)` exact and asymptotic for each `j` in `js`.
pub fn d_sweep(m: HalfInt, mp: HalfInt, theta: f64, js: &[Spin]) -> Vec<ComparisonRow<DInputs>> {
    par::map_ordered(js, |&j| {
        let inputs = DInputs { j, m, mp, theta };
        ComparisonRow::compare(inputs, wigner_d_exact(j, m, mp, theta), wigner_d_asymptotic(j, m, mp, theta))
    })
}

/// The small-`j12` formula over every `j23` for labels
/// `{K K j12; K K j23}`.
#[derive(Clone, Debug, Serialize)]
pub struct Eq1Window {
    pub base: Spin,
    pub j12: Spin,
    pub rows: Vec<ComparisonRow<SixJLabels>>,
    /// Median relative error over the rows not excluded; `None` if none remain.
    pub median_rel_error: Option<f64>,
}

/// Rows within this many steps of either end of the allowed `j23` range sit
/// against a turning point and are left out of the median.
const EQ1_EDGE_ROWS: usize = 2;

pub fn eq1_window(base: Spin, j12: Spin) -> Eq1Window {
    let k = base.twice();
    let candidates: Vec<SixJLabels> = (0..=2 * k)
        .step_by(2)
        .map(|x| SixJLabels::from_twice([k, k, j12.twice(), k, k, x]))
        .filter(SixJLabels::is_admissible)
        .collect();
    let mut rows = par::map_ordered(&candidates, |l| {
        ComparisonRow::compare(*l, six_j_oracle(l).to_f64(), six_j_asymptotic_eq1(l))
    });
    let allowed: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].asymptotic.is_some()).collect();
    let keep =
        if allowed.len() > 2 * EQ1_EDGE_ROWS { &allowed[EQ1_EDGE_ROWS..allowed.len() - EQ1_EDGE_ROWS] } else { &[] };
    for (i, row) in rows.iter_mut().enumerate() {
        row.excluded = !keep.contains(&i);
    }
    let mut errors: Vec<f64> = rows.iter().filter(|r| !r.excluded).filter_map(|r| r.rel_error).collect();
    errors.sort_by(f64::total_cmp);
    let median_rel_error = match errors.len() {
        0 => None,
        n if n % 2 == 1 => Some(errors[n / 2]),
        n => Some(0.5 * (errors[n / 2 - 1] + errors[n / 2])),
    };
    Eq1Window { base, j12, rows, median_rel_error }
}

/// The tetrahedron formula on equilateral labels `j_i = k` for
/// `k = start, start+1, …`.
#[derive(Clone, Debug, Serialize)]
pub struct PrWindow {
    pub start: u32,
    pub width: u32,
    pub rows: Vec<ComparisonRow<SixJLabels>>,
    /// `√(Σ (approx - exact)²/n)`.
    pub rms_error: f64,
    /// `√(Σ (approx - exact)² / Σ exact²)`.
    pub relative_rms: f64,
    /// `√(2 · mean((exact · √(12πV))²))`: how well `1/√(12πV)` tracks the
    /// amplitude of the exact values. 1 is a perfect match.
    pub envelope_ratio: f64,
}

pub fn pr_equilateral_window(start: u32, width: u32) -> PrWindow {
    let labels: Vec<SixJLabels> = (start..start + width).map(|k| SixJLabels::from_twice([2 * k; 6])).collect();
    let rows =
        par::map_ordered(&labels, |l| ComparisonRow::compare(*l, six_j_oracle(l).to_f64(), six_j_ponzano_regge(l)));
    let (mut sq_err, mut sq_exact, mut sq_scaled) = (0.0, 0.0, 0.0);
    for row in &rows {
        sq_err += row.abs_error.unwrap_or(f64::NAN).powi(2);
        sq_exact += row.exact * row.exact;
        let length = row.inputs.j1.as_f64() + 0.5;
        let volume = tet_geometry([length; 6]).map(|g| g.volume).unwrap_or(f64::NAN);
        sq_scaled += row.exact * row.exact * 12.0 * PI * volume;
    }
    let n = rows.len().max(1) as f64;
    PrWindow {
        start,
        width,
        rms_error: (sq_err / n).sqrt(),
        relative_rms: (sq_err / sq_exact).sqrt(),
        envelope_ratio: (2.0 * sq_scaled / n).sqrt(),
        rows,
    }
}

/// Number of consecutive equilateral labels spanning one period of the
/// sampled oscillation. Each unit step in `k` advances the phase by
/// `6(π - arccos(1/3))`, which modulo `2π` is a small drift.
pub fn equilateral_oscillation_width() -> u32 {
    let step = 6.0 * (PI - (1.0f64 / 3.0).acos());
    let drift = (step + PI).rem_euclid(2.0 * PI) - PI;
    (2.0 * PI / drift.abs()).round() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oscillation_width_is_about_six() {
        assert_eq!(equilateral_oscillation_width(), 6);
    }

    #[test]
    fn small_j12_window_excludes_the_ends() {
        let w = eq1_window(Spin::integer(4), Spin::integer(1));
        let kept = w.rows.iter().filter(|r| !r.excluded).count();
        assert_eq!(kept + 2 * EQ1_EDGE_ROWS, w.rows.iter().filter(|r| r.asymptotic.is_some()).count());
        assert!(w.median_rel_error.is_some());
    }
}
