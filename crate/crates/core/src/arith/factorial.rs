use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::One;

// Append-only: entries are never replaced once written.
static FACTORIALS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// `n!`, served from a process-wide append-only cache.
pub fn factorial(n: usize) -> BigUint {
    {
        let table = FACTORIALS.read().expect("factorial cache poisoned");
        if let Some(f) = table.get(n) {
            return f.clone();
        }
    }
    let mut table = FACTORIALS.write().expect("factorial cache poisoned");
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigUint::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// `n! / k!` for `k <= n`, computed as a falling product.
pub fn factorial_ratio(n: usize, k: usize) -> BigUint {
    assert!(k <= n, "factorial_ratio needs k <= n");
    (k + 1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(20), BigUint::from(2_432_902_008_176_640_000u64));
        assert_eq!(factorial(3), BigUint::from(6u32));
    }

    #[test]
    fn ratio_matches_quotient() {
        assert_eq!(factorial_ratio(10, 7), factorial(10) / factorial(7));
        assert_eq!(factorial_ratio(4, 4), BigUint::from(1u32));
    }

    #[test]
    fn concurrent_growth_is_consistent() {
        let handles: Vec<_> = (0..4).map(|t| std::thread::spawn(move || factorial(60 + t * 7))).collect();
        for (t, h) in handles.into_iter().enumerate() {
            let n = 60 + t * 7;
            let expect = (1..=n).fold(BigUint::one(), |a, i| a * BigUint::from(i));
            assert_eq!(h.join().unwrap(), expect);
        }
    }
}
