use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Default trial-division bound for square-factor extraction.
pub const DEFAULT_TRIAL_BOUND: u32 = 1_000_000;

static PRIMES: RwLock<(u32, Vec<u32>)> = RwLock::new((0, Vec::new()));

fn sieve(limit: u32) -> Vec<u32> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u32);
            let mut k = i * i;
            while k <= n {
                composite[k] = true;
                k += i;
            }
        }
    }
    out
}

/// Runs `f` over the primes `<= limit`, growing the shared sieve if needed.
fn with_primes<R>(limit: u32, f: impl FnOnce(&[u32]) -> R) -> R {
    {
        let guard = PRIMES.read().expect("prime table poisoned");
        if guard.0 >= limit {
            let end = guard.1.partition_point(|&p| p <= limit);
            return f(&guard.1[..end]);
        }
    }
    {
        let mut guard = PRIMES.write().expect("prime table poisoned");
        if guard.0 < limit {
            // sieve at least to the default bound so small requests share it
            let target = limit.max(DEFAULT_TRIAL_BOUND.min(1 << 16));
            *guard = (target, sieve(target));
        }
    }
    with_primes(limit, f)
}

/// Splits `m = s² · t`, removing every square of a prime `<= bound`.
///
/// If the cofactor left after trial division is itself a perfect square it is
/// absorbed as well. Any remaining square factor built from two distinct
/// large primes is left in `t` (the unfactored fallback).
pub fn extract_square(m: &BigUint, bound: u32) -> (BigUint, BigUint) {
    if m.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    if let Some(small) = m.to_u64() {
        let (s, t) = extract_square_u64(small, bound);
        return (BigUint::from(s), BigUint::from(t));
    }
    let mut rest = m.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    // small primes in blocks first; most radicands here are factorial-built
    with_primes(bound.min(1 << 16), |primes| {
        for &p in primes {
            if rest.is_one() {
                break;
            }
            let pb = p as u64;
            if let Some(r) = rest.to_u64() {
                if pb.saturating_mul(pb) > r {
                    break;
                }
            }
            let mut count = 0u32;
            loop {
                let (q, r) = num_integer::Integer::div_rem(&rest, &BigUint::from(p));
                if !r.is_zero() {
                    break;
                }
                rest = q;
                count += 1;
            }
            if count > 0 {
                square *= BigUint::from(p).pow(count / 2);
                if count % 2 == 1 {
                    free *= p;
                }
            }
        }
    });
    if bound > 1 << 16 && !rest.is_one() {
        with_primes(bound, |primes| {
            let start = primes.partition_point(|&p| p <= 1 << 16);
            for &p in &primes[start..] {
                if rest.is_one() {
                    break;
                }
                if let Some(r) = rest.to_u64() {
                    if (p as u64).saturating_mul(p as u64) > r {
                        break;
                    }
                }
                let mut count = 0u32;
                while (&rest % p).is_zero() {
                    rest /= p;
                    count += 1;
                }
                if count > 0 {
                    square *= BigUint::from(p).pow(count / 2);
                    if count % 2 == 1 {
                        free *= p;
                    }
                }
            }
        });
    }
    if !rest.is_one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            square *= root;
        } else {
            free *= rest;
        }
    }
    (square, free)
}

fn extract_square_u64(mut m: u64, bound: u32) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let limit = bound.min(((m as f64).sqrt() as u32).saturating_add(2));
    with_primes(limit.max(2), |primes| {
        for &p in primes {
            let p = p as u64;
            if p * p > m {
                break;
            }
            let mut count = 0;
            while m.is_multiple_of(p) {
                m /= p;
                count += 1;
            }
            for _ in 0..count / 2 {
                square *= p;
            }
            if count % 2 == 1 {
                free *= p;
            }
        }
    });
    if m > 1 {
        let root = (m as f64).sqrt().round() as u64;
        if root * root == m {
            square *= root;
        } else {
            free *= m;
        }
    }
    (square, free)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(n: u64) -> (u64, u64) {
        let (s, t) = extract_square(&BigUint::from(n), DEFAULT_TRIAL_BOUND);
        (s.to_u64().unwrap(), t.to_u64().unwrap())
    }

    #[test]
    fn extracts_small_squares() {
        assert_eq!(split(1), (1, 1));
        assert_eq!(split(12), (2, 3));
        assert_eq!(split(72), (6, 2));
        assert_eq!(split(97), (1, 97));
        assert_eq!(split(1_000_003u64 * 1_000_003), (1_000_003, 1));
    }

    #[test]
    fn big_factorial_products() {
        let f = super::super::factorial(40);
        let m = &f * &f * BigUint::from(6u32);
        let (s, t) = extract_square(&m, DEFAULT_TRIAL_BOUND);
        assert_eq!(s, f);
        assert_eq!(t, BigUint::from(6u32));
    }

    #[test]
    fn large_prime_square_beyond_bound_is_still_absorbed() {
        // 2^61 - 1 is prime; its square exceeds u64 and the trial bound
        let p = BigUint::from((1u64 << 61) - 1);
        let m = &p * &p * BigUint::from(10u32);
        let (s, t) = extract_square(&m, 1000);
        assert_eq!(s, p);
        assert_eq!(t, BigUint::from(10u32));
    }
}
