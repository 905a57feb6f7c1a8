use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::Signed;

use super::dfunc::wigner_d_exact;
use super::geometry::tet_geometry;
use super::{AsymptoticError, AsymptoticValue, RegimeFlags, SIN_THRESHOLD, SPIN_RATIO};
use crate::arith::{parity_sign, rational_to_f64, HalfInt, Rational};
use crate::wigner::SixJLabels;

/// `cos θ = ((2j23+1)² - (j1+j2+1)² - (j3+j+1)²) / (2 (j1+j2+1)(j3+j+1))`,
/// exactly.
pub fn eq1_cos_theta(labels: &SixJLabels) -> Rational {
    let [j1, j2, _, j3, j, j23] = labels.twice().map(i64::from);
    // work with doubled quantities: 2(j1+j2+1) = j1' + j2' + 2
    let p = BigInt::from(j1 + j2 + 2);
    let q = BigInt::from(j3 + j + 2);
    let r = BigInt::from(2 * j23 + 2);
    Rational::new(&r * &r - &p * &p - &q * &q, BigInt::from(2) * p * q)
}

/// Small-`j12` approximation
/// `{j1 j2 j12; j3 j j23} ≈ (-1)^{j2+j3+j23} d^{j12}_{j1-j2, j3-j}(θ) / √((j1+j2+1)(j3+j+1))`
/// with `θ` from [`eq1_cos_theta`].
///
/// Flags: `near_singular` when `sin θ < 0.1`, `small_spin` when the smallest
/// large spin is below 10, `large_coupling` when `j12` exceeds a tenth of it.
pub fn six_j_asymptotic_eq1(labels: &SixJLabels) -> Result<AsymptoticValue, AsymptoticError> {
    if !labels.is_admissible() {
        return Err(AsymptoticError::Inadmissible(*labels));
    }
    let cos = eq1_cos_theta(labels);
    if cos.abs() >= Rational::from_integer(1.into()) {
        return Err(AsymptoticError::ClassicallyForbidden { cos_theta: rational_to_f64(&cos) });
    }
    let [j1, j2, _, j3, j, j23] = labels.twice().map(i64::from);
    let theta = rational_to_f64(&cos).acos();
    let m = HalfInt::from_twice((j1 - j2) as i32);
    let mp = HalfInt::from_twice((j3 - j) as i32);
    let d = wigner_d_exact(labels.j12, m, mp, theta);
    let sum = j2 + j3 + j23;
    let sign = parity_sign(sum / 2) as f64;
    let norm = ((j1 + j2 + 2) as f64 / 2.0 * (j3 + j + 2) as f64 / 2.0).sqrt();
    let smallest = [j1, j2, j3, j].into_iter().min().expect("four spins") as f64 / 2.0;
    let flags = RegimeFlags {
        near_singular: theta.sin() < SIN_THRESHOLD,
        small_spin: smallest < SPIN_RATIO,
        large_coupling: SPIN_RATIO * labels.j12.as_f64() > smallest,
    };
    Ok(AsymptoticValue { value: sign * d / norm, flags })
}

/// Semiclassical formula `{6j} ≈ cos(Σ (j_i+1/2)(π - θ_i) + π/4) / √(12πV)`
/// on the tetrahedron with edge lengths `j_i + 1/2`.
///
/// Label slots map to tetrahedron edges as in
/// [`EDGE_VERTICES`](super::EDGE_VERTICES): `j1, j2, j12` bound one face and
/// `j3, j, j23` sit opposite them. The angles `θ_i` are interior dihedral
/// angles; the phase is built from the exterior angles `π - θ_i`.
///
/// Flags: `near_singular` when some `sin θ_i < 0.1` (a nearly flat
/// tetrahedron), `small_spin` when some edge is below a tenth of the
/// longest, the mixed regime the fully symmetric formula does not cover.
pub fn six_j_ponzano_regge(labels: &SixJLabels) -> Result<AsymptoticValue, AsymptoticError> {
    if !labels.is_admissible() {
        return Err(AsymptoticError::Inadmissible(*labels));
    }
    let lengths = labels.twice().map(|t| f64::from(t) / 2.0 + 0.5);
    let geometry = tet_geometry(lengths)?;
    let phase: f64 = lengths.iter().zip(geometry.exterior()).map(|(l, t)| l * t).sum::<f64>() + PI / 4.0;
    let value = phase.cos() / (12.0 * PI * geometry.volume).sqrt();
    let longest = lengths.iter().fold(0.0f64, |m, l| m.max(*l));
    let shortest = lengths.iter().fold(f64::INFINITY, |m, l| m.min(*l));
    let flags = RegimeFlags {
        near_singular: geometry.dihedral.iter().any(|t| t.sin() < SIN_THRESHOLD),
        small_spin: SPIN_RATIO * shortest < longest,
        large_coupling: false,
    };
    Ok(AsymptoticValue { value, flags })
}
