use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::labels::{RacahParams, SixJLabels};
use super::symmetry::{canonical_orientation, is_racah_oriented};
use crate::arith::{factorial, factorial_ratio, parity_sign, ExactRadical, HalfInt, Rational};

/// Which of the two independent 6j evaluations to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SixJPath {
    /// Through the Racah polynomial `u_n^{(α,β)}` with its weight and norm.
    #[default]
    Racah,
    /// Racah's single-sum formula with triangle coefficients.
    Oracle,
}

impl std::str::FromStr for SixJPath {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "racah" => Ok(SixJPath::Racah),
            "oracle" => Ok(SixJPath::Oracle),
            other => Err(format!("unknown 6j path '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamMapError {
    #[error("labels {0} are not admissible")]
    Inadmissible(SixJLabels),
    #[error("labels {labels} need a symmetry reflection first; try {suggestion}")]
    ReflectionNeeded { labels: SixJLabels, suggestion: SixJLabels },
}

/// Racah-polynomial parameters of a 6j symbol in a valid orientation:
/// `a = j3 - j2`, `b = j2 + j3 + 1`, `n = j12 - j1 + j2`,
/// `α = j1 - j2 - j3 + j`, `β = j1 - j2 + j3 - j`, `s = j23`.
///
/// The orientation must satisfy `j3 - j2 >= |j1 - j|`, `j2 + j3 <= j1 + j`
/// and `j1 - j2 >= |j3 - j|`; other labels are rejected with the canonical
/// reflection as a suggestion.
pub fn param_map(labels: &SixJLabels) -> Result<RacahParams, ParamMapError> {
    if !labels.is_admissible() {
        return Err(ParamMapError::Inadmissible(*labels));
    }
    if !is_racah_oriented(labels) {
        let suggestion = canonical_orientation(labels).expect("admissible labels have a valid orientation");
        return Err(ParamMapError::ReflectionNeeded { labels: *labels, suggestion });
    }
    let [j1, j2, j12, j3, j, j23] = labels.twice().map(|t| t as i32);
    Ok(RacahParams {
        alpha: HalfInt::from_twice(j1 - j2 - j3 + j),
        beta: HalfInt::from_twice(j1 - j2 + j3 - j),
        a: HalfInt::from_twice(j3 - j2),
        b: HalfInt::from_twice(j2 + j3 + 2),
        n: ((j12 - j1 + j2) / 2) as u32,
        s: HalfInt::from_twice(j23),
    })
}

/// The pieces of the Racah-path evaluation for labels already in a valid
/// orientation: `{6j} = u_n(s) · radical`.
pub(crate) struct RacahEvaluation {
    pub params: RacahParams,
    pub poly: Rational,
    pub radical: ExactRadical,
}

pub(crate) fn racah_evaluation(oriented: &SixJLabels) -> RacahEvaluation {
    let params = param_map(oriented).expect("caller passes a valid orientation");
    let spec = params.family().expect("valid orientation lies in the Racah domain");
    let s = params.s_rational();
    let poly = spec.eval(params.n, &s).expect("n and s lie in range");
    let rho = spec.weight(&s).expect("s lies in the support");
    let d2 = spec.norm_sq(params.n).expect("n lies in range");
    let [_, j2, j12, _, j, j23] = oriented.twice();
    // (-1)^{j2+j12+j+j23} √((2j12+1)(2j23+1)) {6j} = √(ρ(s)(2s+1)) / d_n · u_n(s)
    let sign = parity_sign(i64::from((j2 + j12 + j + j23) / 2));
    let dims = Rational::from_integer(BigInt::from((j12 + 1) * (j23 + 1)));
    let dx = Rational::from_integer(BigInt::from(j23 + 1));
    let radical = ExactRadical::new(Rational::from_integer(sign.into()), rho * dx / (d2 * dims));
    RacahEvaluation { params, poly, radical }
}

fn racah_uncached(oriented: &SixJLabels) -> ExactRadical {
    let ev = racah_evaluation(oriented);
    ev.radical.scale(&ev.poly)
}

type Cache = RwLock<HashMap<[u32; 6], ExactRadical>>;

fn racah_cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Number of canonical orientations evaluated so far through the Racah path.
pub fn racah_cache_len() -> usize {
    racah_cache().read().expect("6j cache poisoned").len()
}

/// 6j symbol through the Racah-polynomial correspondence. Inadmissible labels
/// give exact 0. Results are memoised per canonical orientation.
pub fn six_j_racah(labels: &SixJLabels) -> ExactRadical {
    if !labels.is_admissible() {
        return ExactRadical::zero();
    }
    let canonical = canonical_orientation(labels).expect("admissible labels have a valid orientation");
    let key = canonical.twice();
    if let Some(v) = racah_cache().read().expect("6j cache poisoned").get(&key) {
        return v.clone();
    }
    let value = racah_uncached(&canonical);
    // insert-once: a concurrent writer may have won, and its value is identical
    racah_cache().write().expect("6j cache poisoned").entry(key).or_insert(value).clone()
}

/// `(a+b-c)! (a-b+c)! (-a+b+c)!` and `(a+b+c+1)!` on doubled values.
fn triangle_parts(a: u32, b: u32, c: u32) -> (BigUint, BigUint) {
    let h = |x: u32| (x / 2) as usize;
    let num = factorial(h(a + b - c)) * factorial(h(a + c - b)) * factorial(h(b + c - a));
    (num, factorial(h(a + b + c) + 1))
}

/// 6j symbol through Racah's single-sum formula, independent of the
/// polynomial machinery. Inadmissible labels give exact 0.
pub fn six_j_oracle(labels: &SixJLabels) -> ExactRadical {
    if !labels.is_admissible() {
        return ExactRadical::zero();
    }
    let triads = labels.triads();
    let [a, b, c, d, e, f] = labels.twice();
    // triad sums α_i and the three column-pair sums β_k, all integers
    let alphas: Vec<usize> = triads.iter().map(|t| (t.iter().sum::<u32>() / 2) as usize).collect();
    let betas = [(a + b + d + e) / 2, (b + c + e + f) / 2, (a + c + d + f) / 2].map(|v| v as usize);
    let t_min = *alphas.iter().max().expect("four triads");
    let t_max = *betas.iter().min().expect("three pairs");

    // scale every term by L = Π (t_max - α_i)! Π (β_k - t_min)! to sum integers
    let mut sum = BigInt::zero();
    for t in t_min..=t_max {
        let mut term = factorial(t + 1);
        for &al in &alphas {
            term *= factorial_ratio(t_max - al, t - al);
        }
        for &be in &betas {
            term *= factorial_ratio(be - t_min, be - t);
        }
        let term = BigInt::from(term);
        if (t - t_min).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return ExactRadical::zero();
    }
    let mut scale = BigUint::one();
    for &al in &alphas {
        scale *= factorial(t_max - al);
    }
    for &be in &betas {
        scale *= factorial(be - t_min);
    }
    let sign = if t_min.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let coeff = Rational::new(sign * sum, BigInt::from(scale));

    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for [x, y, z] in triads {
        let (n, d) = triangle_parts(x, y, z);
        num *= n;
        den *= d;
    }
    ExactRadical::new(coeff, Rational::new(num.into(), den.into()))
}

/// 6j symbol through the chosen path.
pub fn six_j(labels: &SixJLabels, path: SixJPath) -> ExactRadical {
    match path {
        SixJPath::Racah => six_j_racah(labels),
        SixJPath::Oracle => six_j_oracle(labels),
    }
}
