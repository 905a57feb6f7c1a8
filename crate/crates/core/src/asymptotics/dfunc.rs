use std::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::{AsymptoticError, AsymptoticValue, RegimeFlags, SIN_THRESHOLD, SPIN_RATIO};
use num_traits::Float;

use crate::arith::{factorial, ln_abs_rational, parity_sign, rational_to_f64, HalfInt, Rational, Spin};

/// Wigner little-d function `d^j_{m,m'}(θ)` to double precision.
///
/// Writing `cos θ = X/2^k` exactly, the finite sum over `s` becomes an integer
/// combination of `(2^k + X)^a (2^k - X)^b` with binomial weights, computed
/// exactly by a Horner pass. No cancellation happens in floating point; only
/// the final square root and the powers of `cos(θ/2)`, `sin(θ/2)` are
/// rounded. Projections outside `[-j, j]` or of the wrong parity give 0.
pub fn wigner_d_exact(j: Spin, m: HalfInt, mp: HalfInt, theta: f64) -> f64 {
    let (jj, mm, pp) = (j.twice() as i64, i64::from(m.twice()), i64::from(mp.twice()));
    if mm.abs() > jj || pp.abs() > jj || (jj + mm) % 2 != 0 || (jj + pp) % 2 != 0 {
        return 0.0;
    }
    // all of these are integers
    let j_plus_m = (jj + mm) / 2;
    let j_minus_m = (jj - mm) / 2;
    let j_plus_p = (jj + pp) / 2;
    let j_minus_p = (jj - pp) / 2;
    let m_minus_p = (mm - pp) / 2;

    let s_min = 0.max(-m_minus_p);
    let s_max = j_plus_p.min(j_minus_m);
    // powers of cos(θ/2) and sin(θ/2) at a given s; only the part above the
    // smallest power goes into the polynomial
    let base_cos = jj - m_minus_p - 2 * s_max;
    let base_sin = m_minus_p + 2 * s_min;
    let degree = (s_max - s_min) as usize;

    // cos θ = x_int / 2^shift, so (1 + cos θ)/2 = a / 2^(shift+1) and
    // (1 - cos θ)/2 = b / 2^(shift+1)
    let (mantissa, exponent, sign) = theta.cos().integer_decode();
    let shift = (-i64::from(exponent)).max(0) as usize;
    let x_int = BigInt::from(mantissa) << (i64::from(exponent).max(0) as usize);
    let x_int = if sign < 0 { -x_int } else { x_int };
    let unit = BigInt::one() << shift;
    let a = &unit + &x_int;
    let b = &unit - &x_int;

    // Σ_k (-1)^s C(j+m', s) C(j-m', j-m-s) a^(degree-k) b^k, k = s - s_min
    let mut acc = BigInt::zero();
    let mut b_pow = BigInt::one();
    for s in s_min..=s_max {
        let weight =
            BigInt::from(binomial(j_plus_p as u64, s as u64) * binomial(j_minus_p as u64, (j_minus_m - s) as u64));
        let term = weight * &b_pow;
        acc = acc * &a + if s % 2 == 0 { term } else { -term };
        b_pow *= &b;
    }
    if acc.is_zero() {
        return 0.0;
    }
    let (c, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    if (base_cos > 0 && c == 0.0) || (base_sin > 0 && sn == 0.0) {
        return 0.0;
    }
    let mut sign = parity_sign(m_minus_p) as f64;
    if acc.is_negative() {
        sign = -sign;
    }
    if c < 0.0 && base_cos % 2 == 1 {
        sign = -sign;
    }
    if sn < 0.0 && base_sin % 2 == 1 {
        sign = -sign;
    }
    // d² without the trig powers:
    // (j+m)!(j-m)! acc² / ((j+m')!(j-m')! 2^(2·degree·(shift+1)))
    let num: BigUint = factorial(j_plus_m as usize) * factorial(j_minus_m as usize) * acc.magnitude() * acc.magnitude();
    let den: BigUint = (factorial(j_plus_p as usize) * factorial(j_minus_p as usize)) << (2 * degree * (shift + 1));
    let sq = Rational::new(BigInt::from(num), BigInt::from(den));
    let magnitude = rational_to_f64(&sq).sqrt();
    let trig = c.abs().powi(base_cos as i32) * sn.abs().powi(base_sin as i32);
    let direct = magnitude * trig;
    if magnitude.is_finite() && magnitude > 0.0 && direct.is_finite() && direct > 0.0 {
        return sign * direct;
    }
    let ln = 0.5 * ln_abs_rational(&sq) + base_cos as f64 * c.abs().ln() + base_sin as f64 * sn.abs().ln();
    sign * ln.exp()
}

fn binomial(n: u64, k: u64) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Large-`j` approximation of `d^j_{m,m'}(θ)`:
/// `(-1)^{m-m'} √(2/(π(j-m))) ((2j+m-m'+1)/(2j-m+m'+1))^{(m+m')/2}
/// cos[(j+1/2)θ - (m-m'+1/2)π/2] / √(sin θ)`.
///
/// Flags `near_singular` when `sin θ < 0.1` and `small_spin` when
/// `j < 10 · max(|m|, |m'|, 1)`.
pub fn wigner_d_asymptotic(j: Spin, m: HalfInt, mp: HalfInt, theta: f64) -> Result<AsymptoticValue, AsymptoticError> {
    if !(theta > 0.0 && theta < PI) {
        return Err(AsymptoticError::SingularAngle { theta });
    }
    let jj = j.twice() as i64;
    let (mm, pp) = (i64::from(m.twice()), i64::from(mp.twice()));
    if mm.abs() >= jj || pp.abs() >= jj || (jj + mm) % 2 != 0 || (jj + pp) % 2 != 0 {
        return Err(AsymptoticError::ProjectionOutOfRange { j, m, mp });
    }
    let (jf, mf, pf) = (j.as_f64(), m.as_f64(), mp.as_f64());
    let sign = parity_sign((mm - pp) / 2) as f64;
    let amplitude = (2.0 / (PI * (jf - mf))).sqrt();
    let ratio = ((2.0 * jf + mf - pf + 1.0) / (2.0 * jf - mf + pf + 1.0)).powf((mf + pf) / 2.0);
    let phase = (jf + 0.5) * theta - (mf - pf + 0.5) * PI / 2.0;
    let value = sign * amplitude * ratio * phase.cos() / theta.sin().sqrt();
    let flags = RegimeFlags {
        near_singular: theta.sin() < SIN_THRESHOLD,
        small_spin: jf < SPIN_RATIO * mf.abs().max(pf.abs()).max(1.0),
        ..RegimeFlags::default()
    };
    Ok(AsymptoticValue { value, flags })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: u32) -> Spin {
        Spin::from_twice(t)
    }
    fn m(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn identity_rotation() {
        for jj in 0..8u32 {
            for a in (-(jj as i32)..=jj as i32).step_by(2) {
                for b in (-(jj as i32)..=jj as i32).step_by(2) {
                    let expected = if a == b { 1.0 } else { 0.0 };
                    assert_eq!(wigner_d_exact(s(jj), m(a), m(b), 0.0), expected);
                }
            }
        }
    }

    #[test]
    fn spin_half_matches_rotation_matrix() {
        // exp(-iθσ_y/2) = [[cos θ/2, -sin θ/2], [sin θ/2, cos θ/2]]
        for k in 0..20 {
            let t = 0.15 * f64::from(k);
            let (c, sn) = ((t / 2.0).cos(), (t / 2.0).sin());
            assert!((wigner_d_exact(s(1), m(1), m(1), t) - c).abs() < 1e-15);
            assert!((wigner_d_exact(s(1), m(1), m(-1), t) + sn).abs() < 1e-15);
            assert!((wigner_d_exact(s(1), m(-1), m(1), t) - sn).abs() < 1e-15);
        }
    }

    #[test]
    fn asymptotic_rejects_poles() {
        assert!(wigner_d_asymptotic(s(40), m(0), m(0), 0.0).is_err());
        assert!(wigner_d_asymptotic(s(40), m(0), m(0), PI).is_err());
        assert!(wigner_d_asymptotic(s(40), m(0), m(0), 1e-300).is_ok());
    }

    #[test]
    fn asymptotic_close_at_equator() {
        let exact = wigner_d_exact(s(40), m(0), m(0), PI / 2.0);
        let approx = wigner_d_asymptotic(s(40), m(0), m(0), PI / 2.0).unwrap();
        assert!(((approx.value - exact) / exact).abs() < 0.05);
        assert!(!approx.flags.small_spin && !approx.flags.near_singular);
    }
}
