use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A non-negative half-integer angular momentum `j`, stored as `2j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spin(u32);

/// A signed half-integer (magnetic quantum numbers, Racah parameters),
/// stored doubled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt(i32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinParseError {
    #[error("'{0}' is not an integer or a half-integer")]
    Malformed(String),
    #[error("spin '{0}' is negative")]
    Negative(String),
}

impl Spin {
    pub const ZERO: Spin = Spin(0);

    pub const fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    /// Integer spin `j`.
    pub const fn integer(j: u32) -> Self {
        Spin(2 * j)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// Dimension `2j + 1` of the representation.
    pub const fn dim(self) -> u32 {
        self.0 + 1
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub fn to_half(self) -> HalfInt {
        HalfInt(self.0 as i32)
    }
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn integer(m: i32) -> Self {
        HalfInt(2 * m)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn abs(self) -> HalfInt {
        HalfInt(self.0.abs())
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

fn fmt_doubled(twice: i64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if twice % 2 == 0 {
        write!(f, "{}", twice / 2)
    } else {
        write!(f, "{twice}/2")
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_doubled(i64::from(self.0), f)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_doubled(i64::from(self.0), f)
    }
}

/// Parses `"3"`, `"-1"`, `"5/2"` or `"2.5"` into a doubled integer.
fn parse_doubled(s: &str) -> Result<i64, SpinParseError> {
    let t = s.trim();
    let bad = || SpinParseError::Malformed(s.to_string());
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        match den.trim() {
            "1" => Ok(2 * num),
            "2" => Ok(num),
            _ => Err(bad()),
        }
    } else if let Some((int, frac)) = t.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: i64 = if int == "-" || int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let half = match frac.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => return Err(bad()),
        };
        Ok(2 * int + if neg { -half } else { half })
    } else {
        t.parse::<i64>().map(|v| 2 * v).map_err(|_| bad())
    }
}

impl FromStr for Spin {
    type Err = SpinParseError;

    /// Parses the spin value `j` itself (not the doubled value).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let twice = parse_doubled(s)?;
        if twice < 0 {
            return Err(SpinParseError::Negative(s.to_string()));
        }
        u32::try_from(twice).map(Spin).map_err(|_| SpinParseError::Malformed(s.to_string()))
    }
}

impl FromStr for HalfInt {
    type Err = SpinParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let twice = parse_doubled(s)?;
        i32::try_from(twice).map(HalfInt).map_err(|_| SpinParseError::Malformed(s.to_string()))
    }
}

/// Triangle condition with integer perimeter, on doubled values.
pub(crate) fn triad_ok(a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b
}

impl Spin {
    /// `true` if `(a, b, c)` satisfy the triangle inequalities and `a + b + c`
    /// is an integer.
    pub fn triad(a: Spin, b: Spin, c: Spin) -> bool {
        triad_ok(a.0, b.0, c.0)
    }
}
