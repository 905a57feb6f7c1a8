use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::labels::{NineJLabels, RacahParams, SixJLabels, TwelveJLabels};
use super::sixj::{racah_evaluation, six_j, SixJPath};
use super::symmetry::canonical_orientation;
use crate::arith::{parity_sign, triad_ok, ExactRadical, RadicalSum, Rational, Spin};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Recoupling coefficient
/// `U(j12, j23) = (-1)^{j1+j2+j3+j} √((2j12+1)(2j23+1)) {j1 j2 j12; j3 j j23}`.
///
/// Zero unless `(j1, j2, j12)` and `(j2, j3, j23)` couple and the 6j symbol is
/// admissible.
pub fn recoupling_u(j1: Spin, j2: Spin, j3: Spin, j: Spin, j12: Spin, j23: Spin) -> ExactRadical {
    if !triad_ok(j1.twice(), j2.twice(), j12.twice()) || !triad_ok(j2.twice(), j3.twice(), j23.twice()) {
        return ExactRadical::zero();
    }
    let sixj = six_j(&SixJLabels::new(j1, j2, j12, j3, j, j23), SixJPath::Racah);
    if sixj.is_zero() {
        return sixj;
    }
    let sum = j1.twice() + j2.twice() + j3.twice() + j.twice();
    let sign = parity_sign(i64::from(sum / 2));
    let norm = ExactRadical::new(int(sign), int(i64::from(j12.dim() * j23.dim())));
    &sixj * &norm
}

/// Doubled values `x` from `lo` to `hi` in steps of 2 with the parity of `lo`.
fn doubled_range(lo: u32, hi: u32) -> impl Iterator<Item = u32> {
    (lo..=hi).step_by(2)
}

/// 9j symbol
/// `Σ_x (-1)^{2x} (2x+1) {j1 j4 j7; j8 j9 x} {j2 j5 j8; j4 x j6} {j3 j6 j9; x j1 j2}`
/// for the array `[[j1 j2 j3], [j4 j5 j6], [j7 j8 j9]]`.
pub fn nine_j(labels: &NineJLabels) -> RadicalSum {
    nine_j_with(labels, SixJPath::Racah)
}

/// [`nine_j`] with an explicit 6j path.
pub fn nine_j_with(labels: &NineJLabels, path: SixJPath) -> RadicalSum {
    let t = labels.map(|row| row.map(Spin::twice));
    let rows_ok = (0..3).all(|r| triad_ok(t[r][0], t[r][1], t[r][2]));
    let cols_ok = (0..3).all(|c| triad_ok(t[0][c], t[1][c], t[2][c]));
    if !rows_ok || !cols_ok {
        return RadicalSum::zero();
    }
    let [[j1, j2, j3], [j4, j5, j6], [j7, j8, j9]] = *labels;
    let (a, b) = (j1.twice(), j9.twice());
    let (b2, b3) = (j6.twice(), j8.twice());
    let lo = a.abs_diff(b).max(b2.abs_diff(j2.twice())).max(j4.twice().abs_diff(b3));
    let hi = (a + b).min(b2 + j2.twice()).min(j4.twice() + b3);
    let mut total = RadicalSum::zero();
    if lo > hi {
        return total;
    }
    for x2 in doubled_range(lo, hi) {
        let x = Spin::from_twice(x2);
        let f1 = six_j(&SixJLabels::new(j1, j4, j7, j8, j9, x), path);
        let f2 = six_j(&SixJLabels::new(j2, j5, j8, j4, x, j6), path);
        let f3 = six_j(&SixJLabels::new(j3, j6, j9, x, j1, j2), path);
        if f1.is_zero() || f2.is_zero() || f3.is_zero() {
            continue;
        }
        let weight = int(parity_sign(i64::from(x2)) * i64::from(x.dim()));
        total.add_term((&(&f1 * &f2) * &f3).scale(&weight));
    }
    total
}

/// Range of doubled `x` in the 12j sum: `[max |j_i - k_i|, min (j_i + k_i)]`.
fn twelve_j_x_range(labels: &TwelveJLabels) -> Option<(u32, u32)> {
    let lo = (0..4).map(|i| labels.j[i].twice().abs_diff(labels.k[i].twice())).max()?;
    let hi = (0..4).map(|i| labels.j[i].twice() + labels.k[i].twice()).min()?;
    (lo <= hi).then_some((lo, hi))
}

/// `(2x+1)(-1)^{R+4x}`, or `None` when `R` is not an integer (every term then
/// vanishes by the triangle conditions).
fn twelve_j_weight(r_twice: u32, x2: u32) -> Option<i64> {
    if !r_twice.is_multiple_of(2) {
        return None;
    }
    // 4x = 2 · (2x) is always even, kept for fidelity with the expansion
    let sign = parity_sign(i64::from(r_twice / 2) + 2 * i64::from(x2));
    Some(sign * i64::from(x2 + 1))
}

/// 12j symbol of the second kind,
/// `Σ_x (2x+1)(-1)^{R+4x} Π_i {j_i k_i x; k_{i+1} j_{i+1} l_i}` with indices
/// taken cyclically and `R = Σ (j_i + l_i + k_i)`.
pub fn twelve_j_second_kind(labels: &TwelveJLabels) -> RadicalSum {
    twelve_j_second_kind_with(labels, SixJPath::Racah)
}

/// [`twelve_j_second_kind`] with an explicit 6j path.
pub fn twelve_j_second_kind_with(labels: &TwelveJLabels, path: SixJPath) -> RadicalSum {
    let mut total = RadicalSum::zero();
    let Some((lo, hi)) = twelve_j_x_range(labels) else {
        return total;
    };
    for x2 in doubled_range(lo, hi) {
        let Some(weight) = twelve_j_weight(labels.r_twice(), x2) else {
            return total;
        };
        let x = Spin::from_twice(x2);
        let mut product = ExactRadical::one();
        for i in 0..4 {
            product = &product * &six_j(&labels.factor(i, x), path);
            if product.is_zero() {
                break;
            }
        }
        total.add_term(product.scale(&int(weight)));
    }
    total
}

/// One 6j factor of the 12j expansion, written as a Racah polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct RacahFactor {
    /// The factor as it appears in the expansion.
    pub labels: SixJLabels,
    /// Its canonical orientation, on which the parameter map is valid.
    pub oriented: SixJLabels,
    pub params: RacahParams,
    /// `u_n^{(α,β)}(x(s), a, b)`.
    #[serde(skip)]
    pub poly: Rational,
    /// `(-1)^{…} √(ρ(s)Δx(s-1/2) / (d_n² (2j12+1)(2j23+1)))`, so that the 6j
    /// value is `poly · radical`.
    #[serde(skip)]
    pub radical: ExactRadical,
}

impl RacahFactor {
    fn new(labels: SixJLabels) -> Self {
        let oriented = canonical_orientation(&labels).expect("admissible factor");
        let ev = racah_evaluation(&oriented);
        RacahFactor { labels, oriented, params: ev.params, poly: ev.poly, radical: ev.radical }
    }

    /// The 6j value of this factor.
    pub fn value(&self) -> ExactRadical {
        self.radical.scale(&self.poly)
    }

    /// The orthonormal Racah function `√((2x+1)(2l+1)) {6j}`.
    pub fn orthonormal(&self) -> ExactRadical {
        let dims = i64::from(self.labels.j12.dim() * self.labels.j23.dim());
        &self.value() * &ExactRadical::new(Rational::one(), int(dims))
    }
}

/// The terms of the 12j expansion at one value of `x`.
#[derive(Clone, Debug, Serialize)]
pub struct TwelveJTerm {
    pub x: Spin,
    /// `(2x+1)(-1)^{R+4x}`.
    pub weight: i64,
    pub factors: [RacahFactor; 4],
}

/// The 12j symbol as a sum over `x` of products of four Racah polynomials,
/// one in each of the variables `l_1 … l_4`.
#[derive(Clone, Debug, Serialize)]
pub struct TwelveJExpansion {
    pub labels: TwelveJLabels,
    pub terms: Vec<TwelveJTerm>,
}

impl TwelveJExpansion {
    /// `Σ_x (2x+1)(-1)^{R+4x} Π u_{n_i}(l_i) · radical_i`.
    pub fn recombine(&self) -> RadicalSum {
        let mut total = RadicalSum::zero();
        for term in &self.terms {
            let mut product = ExactRadical::one();
            for f in &term.factors {
                product = &product * &(f.radical.scale(&f.poly));
            }
            total.add_term(product.scale(&int(term.weight)));
        }
        total
    }

    /// The reading with orthonormal factors `φ_i = √((2x+1)(2l_i+1)) {6j}_i`:
    /// `Σ_x (-1)^{R+4x} / (2x+1) · Π φ_i / Π √(2l_i+1)`, which equals
    /// [`TwelveJExpansion::recombine`].
    pub fn recombine_orthonormal(&self) -> RadicalSum {
        let l_dims: i64 = self.labels.l.iter().map(|l| i64::from(l.dim())).product();
        let inv_l = ExactRadical::new(Rational::one(), Rational::new(BigInt::one(), BigInt::from(l_dims)));
        let mut total = RadicalSum::zero();
        for term in &self.terms {
            let dim = i64::from(term.x.dim());
            let sign = term.weight.signum();
            let mut product = inv_l.clone();
            for f in &term.factors {
                product = &product * &f.orthonormal();
            }
            total.add_term(product.scale(&Rational::new(BigInt::from(sign), BigInt::from(dim))));
        }
        total
    }
}

/// Per-`x` decomposition of the 12j symbol into Racah-polynomial factors.
/// Values of `x` for which some factor is inadmissible are omitted.
pub fn twelve_j_as_multipoly(labels: &TwelveJLabels) -> TwelveJExpansion {
    let mut terms = Vec::new();
    if let Some((lo, hi)) = twelve_j_x_range(labels) {
        for x2 in doubled_range(lo, hi) {
            let Some(weight) = twelve_j_weight(labels.r_twice(), x2) else {
                break;
            };
            let x = Spin::from_twice(x2);
            let factor_labels: [SixJLabels; 4] = std::array::from_fn(|i| labels.factor(i, x));
            if !factor_labels.iter().all(SixJLabels::is_admissible) {
                continue;
            }
            terms.push(TwelveJTerm { x, weight, factors: factor_labels.map(RacahFactor::new) });
        }
    }
    TwelveJExpansion { labels: *labels, terms }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_zero_spins() {
        let z = Spin::ZERO;
        assert_eq!(recoupling_u(z, z, z, z, z, z), ExactRadical::one());
        assert_eq!(nine_j(&[[z; 3]; 3]), RadicalSum::from(ExactRadical::one()));
        let t = TwelveJLabels { j: [z; 4], l: [z; 4], k: [z; 4] };
        assert_eq!(twelve_j_second_kind(&t), RadicalSum::from(ExactRadical::one()));
        let e = twelve_j_as_multipoly(&t);
        assert_eq!(e.terms.len(), 1);
        for f in &e.terms[0].factors {
            assert_eq!(f.value(), ExactRadical::one());
        }
    }

    #[test]
    fn half_spin_u_matrix_is_orthogonal() {
        let h = Spin::from_twice(1);
        let values: Vec<Vec<ExactRadical>> = [0, 2]
            .iter()
            .map(|&a| {
                [0, 2].iter().map(|&b| recoupling_u(h, h, h, h, Spin::from_twice(a), Spin::from_twice(b))).collect()
            })
            .collect();
        for r in 0..2 {
            for s in 0..2 {
                let dot = RadicalSum::from_terms((0..2).map(|k| &values[r][k] * &values[s][k]));
                let expected = if r == s { RadicalSum::from(ExactRadical::one()) } else { RadicalSum::zero() };
                assert_eq!(dot, expected);
            }
        }
    }
}
