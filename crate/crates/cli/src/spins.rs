//! Parsers for spin arguments.

use spinnet::{HalfInt, Spin};

/// A doubled integer (`3` is `j = 3/2`) or an explicit half-integer `p/2`.
pub fn doubled(s: &str) -> Result<i64, String> {
    let t = s.trim();
    let bad = || format!("'{s}' is neither a doubled integer like 3 nor a value like 3/2");
    match t.split_once('/') {
        Some((p, "2")) => p.trim().parse::<i64>().map_err(|_| bad()),
        Some(_) => Err(bad()),
        None => t.parse::<i64>().map_err(|_| bad()),
    }
}

pub fn doubled_spin(s: &str) -> Result<Spin, String> {
    let d = doubled(s)?;
    u32::try_from(d).map(Spin::from_twice).map_err(|_| format!("spin '{s}' must be non-negative"))
}

pub fn doubled_half(s: &str) -> Result<HalfInt, String> {
    let d = doubled(s)?;
    i32::try_from(d).map(HalfInt::from_twice).map_err(|_| format!("'{s}' is out of range"))
}

/// A spin given by its value: `20`, `5/2` or `2.5`.
pub fn spin_value(s: &str) -> Result<Spin, String> {
    s.parse::<Spin>().map_err(|e| e.to_string())
}

pub fn half_value(s: &str) -> Result<HalfInt, String> {
    s.parse::<HalfInt>().map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubled_forms() {
        assert_eq!(doubled_spin("3").unwrap(), Spin::from_twice(3));
        assert_eq!(doubled_spin("3/2").unwrap(), Spin::from_twice(3));
        assert_eq!(doubled_half("-1/2").unwrap(), HalfInt::from_twice(-1));
        assert_eq!(doubled_half("-2").unwrap(), HalfInt::from_twice(-2));
        assert!(doubled_spin("-2").is_err());
        assert!(doubled_spin("3/4").is_err());
        assert!(doubled_spin("x").is_err());
    }

    #[test]
    fn value_forms() {
        assert_eq!(spin_value("20").unwrap(), Spin::integer(20));
        assert_eq!(spin_value("5/2").unwrap(), Spin::from_twice(5));
    }
}
