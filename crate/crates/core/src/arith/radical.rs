use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::primes::{extract_square, DEFAULT_TRIAL_BOUND};
use super::rational_to_f64;

/// An exact value `coeff · √radicand`.
///
/// Canonical form: `radicand` is a square-free positive integer (every square
/// of a prime up to the trial bound has been moved into `coeff`), and zero is
/// represented only as `0 · √0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactRadical {
    coeff: BigRational,
    radicand: BigUint,
}

impl ExactRadical {
    /// Canonicalises `coeff · √radicand` for a non-negative rational radicand.
    pub fn new(coeff: BigRational, radicand: BigRational) -> Self {
        Self::with_trial_bound(coeff, radicand, DEFAULT_TRIAL_BOUND)
    }

    /// As [`ExactRadical::new`] with an explicit trial-division bound.
    pub fn with_trial_bound(coeff: BigRational, radicand: BigRational, bound: u32) -> Self {
        assert!(!radicand.is_negative(), "radicand must be non-negative");
        if coeff.is_zero() || radicand.is_zero() {
            return Self::zero();
        }
        // √(p/q) = √(p q) / q
        let p = radicand.numer().magnitude();
        let q = radicand.denom().magnitude();
        let (sp, tp) = extract_square(p, bound);
        let (sq, tq) = extract_square(q, bound);
        // p/q reduced, so tp and tq are coprime and tp·tq stays square-free
        let scale = BigRational::new(BigInt::from(sp), BigInt::from(sq * &tq));
        ExactRadical { coeff: coeff * scale, radicand: tp * tq }
    }

    /// A rational number, `q · √1`.
    pub fn rational(q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            ExactRadical { coeff: q, radicand: BigUint::one() }
        }
    }

    /// `√r` for a non-negative integer.
    pub fn sqrt_of(r: u64) -> Self {
        Self::new(BigRational::one(), BigRational::from_integer(BigInt::from(r)))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        ExactRadical { coeff: BigRational::zero(), radicand: BigUint::zero() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    /// `-1`, `0` or `1`.
    pub fn signum(&self) -> i32 {
        match self.coeff.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// The exact rational `coeff² · radicand`.
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * BigRational::from_integer(BigInt::from(self.radicand.clone()))
    }

    /// Re-runs canonicalisation; the identity on canonical values.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeff.clone(), BigRational::from_integer(BigInt::from(self.radicand.clone())))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            ExactRadical { coeff: &self.coeff * q, radicand: self.radicand.clone() }
        }
    }

    /// Double-precision value.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let sign = f64::from(self.signum());
        // √(c² r), so huge or tiny coefficients never overflow separately
        let sq = self.square();
        let magnitude = rational_to_f64(&sq).sqrt();
        if magnitude.is_finite() && magnitude != 0.0 {
            sign * magnitude
        } else {
            sign * (0.5 * super::ln_abs_rational(&sq)).exp()
        }
    }
}

impl Default for ExactRadical {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for ExactRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() || self.is_zero() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "√{}", self.radicand)
        } else if self.coeff == -BigRational::one() {
            write!(f, "-√{}", self.radicand)
        } else {
            write!(f, "{}·√{}", self.coeff, self.radicand)
        }
    }
}

impl Mul for &ExactRadical {
    type Output = ExactRadical;

    fn mul(self, rhs: &ExactRadical) -> ExactRadical {
        if self.is_zero() || rhs.is_zero() {
            return ExactRadical::zero();
        }
        // both radicands square-free: √a √b = g √((a/g)(b/g)), g = gcd(a, b)
        let g = self.radicand.gcd(&rhs.radicand);
        let radicand = (&self.radicand / &g) * (&rhs.radicand / &g);
        let coeff = &self.coeff * &rhs.coeff * BigRational::from_integer(BigInt::from(g));
        ExactRadical { coeff, radicand }
    }
}

impl Mul for ExactRadical {
    type Output = ExactRadical;
    fn mul(self, rhs: ExactRadical) -> ExactRadical {
        &self * &rhs
    }
}

impl Neg for ExactRadical {
    type Output = ExactRadical;
    fn neg(self) -> ExactRadical {
        if self.is_zero() {
            self
        } else {
            ExactRadical { coeff: -self.coeff, radicand: self.radicand }
        }
    }
}

/// A finite sum of canonical radicals with pairwise distinct radicands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    // radicand → coefficient; no zero coefficients
    terms: BTreeMap<BigUint, BigRational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms<I: IntoIterator<Item = ExactRadical>>(terms: I) -> Self {
        let mut s = Self::zero();
        for t in terms {
            s.add_term(t);
        }
        s
    }

    pub fn add_term(&mut self, term: ExactRadical) {
        if term.is_zero() {
            return;
        }
        let ExactRadical { coeff, radicand } = term;
        match self.terms.entry(radicand) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = ExactRadical> + '_ {
        self.terms.iter().map(|(r, c)| ExactRadical { coeff: c.clone(), radicand: r.clone() })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the single term if the sum has at most one.
    pub fn as_single(&self) -> Option<ExactRadical> {
        match self.terms.len() {
            0 => Some(ExactRadical::zero()),
            1 => self.terms().next(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalSum { terms: self.terms.iter().map(|(r, c)| (r.clone(), c * q)).collect() }
    }

    pub fn mul_radical(&self, x: &ExactRadical) -> Self {
        Self::from_terms(self.terms().map(|t| &t * x))
    }

    /// Evaluates to `precision` bits after the binary point with a rigorous
    /// error bound. Precisions below 32 bits are raised to 32.
    pub fn eval(&self, precision: u32) -> Approximation {
        let precision = precision.max(32);
        let mut acc = BigRational::zero();
        let mut abs_irrational = BigRational::zero();
        for (r, c) in &self.terms {
            if r.is_one() {
                acc += c * BigRational::from_integer(BigInt::one() << precision);
                continue;
            }
            // floor(√r · 2^P), short of the true value by less than one unit
            let root = (r << (2 * precision as u64)).sqrt();
            acc += c * BigRational::from_integer(BigInt::from(root));
            abs_irrational += c.abs();
        }
        let mantissa = acc.round().to_integer();
        let rounding = &acc - BigRational::from_integer(mantissa.clone());
        let bound = abs_irrational + rounding.abs();
        Approximation { mantissa, precision, bound_units: bound.ceil().to_integer().into_parts().1 }
    }

    pub fn to_f64(&self) -> f64 {
        self.eval(64).value()
    }
}

impl From<ExactRadical> for RadicalSum {
    fn from(r: ExactRadical) -> Self {
        Self::from_terms([r])
    }
}

impl Add for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for t in rhs.terms() {
            out.add_term(t);
        }
        out
    }
}

impl Sub for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for t in rhs.terms() {
            out.add_term(-t);
        }
        out
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for a in self.terms() {
            for b in rhs.terms() {
                out.add_term(&a * &b);
            }
        }
        out
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Exact equality of two radical sums.
pub fn radical_eq(a: &RadicalSum, b: &RadicalSum) -> bool {
    a == b
}

/// Serialized as `{"num": "...", "den": "...", "radicand": "..."}` with every
/// integer written as a decimal string.
impl Serialize for ExactRadical {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExactRadical", 3)?;
        st.serialize_field("num", &self.coeff.numer().to_string())?;
        st.serialize_field("den", &self.coeff.denom().to_string())?;
        st.serialize_field("radicand", &self.radicand.to_string())?;
        st.end()
    }
}

/// Serialized as the list of its terms in ascending radicand order.
impl Serialize for RadicalSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms())
    }
}

/// A dyadic approximation `mantissa / 2^precision` with error at most
/// `bound_units / 2^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    mantissa: BigInt,
    precision: u32,
    bound_units: BigUint,
}

impl Approximation {
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// The approximation as an exact dyadic rational.
    pub fn exact_value(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), BigInt::one() << self.precision)
    }

    /// The error bound as an exact dyadic rational.
    pub fn exact_bound(&self) -> BigRational {
        BigRational::new(BigInt::from(self.bound_units.clone()), BigInt::one() << self.precision)
    }

    pub fn value(&self) -> f64 {
        rational_to_f64(&self.exact_value())
    }

    /// Error bound for [`Approximation::value`], including the rounding to
    /// `f64` and rounded upward.
    pub fn error_bound(&self) -> f64 {
        let dyadic = rational_to_f64(&self.exact_bound());
        let v = self.value().abs();
        let f64_rounding = if self.mantissa.is_zero() { 0.0 } else { v * 2f64.powi(-51) };
        (dyadic + f64_rounding) * (1.0 + 2f64.powi(-50))
    }
}
