//! Exact number types: doubled-integer spins, canonical radicals `q·√r`, and
//! finite sums of radicals with certified floating-point evaluation.

mod factorial;
mod primes;
mod radical;
mod spin;

pub use factorial::{factorial, factorial_ratio};
pub use primes::{extract_square, DEFAULT_TRIAL_BOUND};
pub use radical::{radical_eq, Approximation, ExactRadical, RadicalSum};
pub(crate) use spin::triad_ok;
pub use spin::{HalfInt, Spin, SpinParseError};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational.
pub type Rational = BigRational;

/// Builds `num / den` as a rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `(-1)^k` for a (possibly negative) integer `k`.
pub fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Rising factorial `(x)_k = x (x+1) … (x+k-1)`.
pub fn pochhammer(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Integer power of a rational, including negative exponents.
pub fn rpow(x: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Natural logarithm of a positive big integer, accurate to double precision.
pub(crate) fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    let shift = bits.saturating_sub(60);
    let top: BigUint = n >> shift;
    let top = u64::try_from(&top).expect("shifted to at most 60 bits") as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln |q|` for a nonzero rational.
pub(crate) fn ln_abs_rational(q: &Rational) -> f64 {
    ln_biguint(q.numer().magnitude()) - ln_biguint(q.denom().magnitude())
}

/// Converts a rational to `f64` (to within a couple of ulps), robust to
/// numerators and denominators far outside the `f64` range.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let n = q.numer().magnitude();
    let d = q.denom().magnitude();
    let shift = n.bits() as i64 - d.bits() as i64 - 64;
    let quotient = if shift >= 0 { n / (d << shift as u64) } else { (n << (-shift) as u64) / d };
    let mant = num_traits::ToPrimitive::to_f64(&quotient).expect("quotient has ~64 bits");
    let v = ldexp(mant, shift);
    if q.is_negative() {
        -v
    } else {
        v
    }
}

/// `x · 2^e` without intermediate overflow of the power.
pub(crate) fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}
