use serde::Serialize;

use super::{enumerate_colorings, Coloring, CutoffPolicy, PhaseConvention, StateSumError, Triangulation};
use crate::arith::{parity_sign, rat, ExactRadical, RadicalSum, Spin};
use crate::par;
use crate::wigner::six_j_racah;

/// Colorings are evaluated in batches of this size; each batch runs in
/// parallel and is folded into the total in enumeration order.
const BATCH: usize = 2048;

/// Bits of the dyadic approximation reported next to the exact value.
const EVAL_PRECISION: u32 = 96;

/// Exact state sum with its floating-point reading.
#[derive(Clone, Debug, Serialize)]
pub struct StateSum {
    pub lambda: Spin,
    pub phase: &'static str,
    pub colorings: u64,
    pub exact: RadicalSum,
    pub value: f64,
    pub error_bound: f64,
}

/// `(-1)^φ Π (2x_i+1) Π_k {6j}_k` for one coloring.
pub fn amplitude(
    t: &Triangulation,
    coloring: &Coloring,
    phase: &dyn PhaseConvention,
) -> Result<ExactRadical, StateSumError> {
    let spins = t.edge_spins(&coloring.0);
    let phi = phase.phase_twice(t, &spins);
    if phi % 2 != 0 {
        return Err(StateSumError::NonIntegerPhase {
            convention: phase.name(),
            coloring: format!("{:?}", coloring.assignment(t)),
        });
    }
    let dims: i64 = coloring.0.iter().map(|s| i64::from(s.dim())).product();
    let mut product = ExactRadical::rational(rat(parity_sign(phi / 2) * dims));
    for k in 0..t.tetrahedra.len() {
        product = &product * &six_j_racah(&t.labels(k, &spins));
        if product.is_zero() {
            break;
        }
    }
    Ok(product)
}

/// Sum of [`amplitude`] over every admissible coloring under the cutoff.
pub fn evaluate_sum(
    t: &Triangulation,
    cutoff: CutoffPolicy,
    phase: &dyn PhaseConvention,
) -> Result<StateSum, StateSumError> {
    let mut exact = RadicalSum::zero();
    let mut colorings = 0u64;
    let mut iter = enumerate_colorings(t, cutoff);
    loop {
        let batch: Vec<Coloring> = iter.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        colorings += batch.len() as u64;
        for term in par::map_ordered(&batch, |c| amplitude(t, c, phase)) {
            exact.add_term(term?);
        }
    }
    let approx = exact.eval(EVAL_PRECISION);
    Ok(StateSum {
        lambda: cutoff.lambda,
        phase: phase.name(),
        colorings,
        value: approx.value(),
        error_bound: approx.error_bound(),
        exact,
    })
}

/// [`evaluate_sum`] at each cutoff, in ascending order.
pub fn cutoff_sweep(
    t: &Triangulation,
    lambdas: &[Spin],
    phase: &dyn PhaseConvention,
) -> Result<Vec<StateSum>, StateSumError> {
    let mut sorted = lambdas.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.into_iter().map(|l| evaluate_sum(t, CutoffPolicy::new(l), phase)).collect()
}
