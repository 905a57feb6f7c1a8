//! Per-family closed forms: hypergeometric representation, weight, squared
//! norm and the coefficients of the difference equation.

use num_traits::{One, Signed};

use super::hyper::terminating;
use super::{DomainError, Family, FamilyParams, FamilySpec};
use crate::arith::{pochhammer, rat, rpow, Rational};

fn fact(n: u32) -> Rational {
    pochhammer(&rat(1), n as usize)
}

fn poch(x: &Rational, k: u32) -> Rational {
    pochhammer(x, k as usize)
}

/// `(-1)^n` as a rational.
fn alt(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Generalized binomial `(x choose k) = (x-k+1)_k / k!`.
fn binom(x: &Rational, k: u32) -> Rational {
    poch(&(x - rat(i64::from(k)) + rat(1)), k) / fact(k)
}

pub(super) fn validate(params: &FamilyParams) -> Result<(), DomainError> {
    let fail = |family: Family, reason: &str| Err(DomainError::Parameters { family, reason: reason.to_string() });
    let minus_one = rat(-1);
    match params {
        FamilyParams::Hahn { alpha, beta, n_points } => {
            if *n_points == 0 {
                return fail(Family::Hahn, "N must be at least 1");
            }
            if alpha <= &minus_one || beta <= &minus_one {
                return fail(Family::Hahn, "alpha and beta must exceed -1");
            }
        }
        FamilyParams::Kravchuk { p, n_max } => {
            if *n_max == 0 {
                return fail(Family::Kravchuk, "N must be at least 1");
            }
            if !p.is_positive() || p >= &rat(1) {
                return fail(Family::Kravchuk, "p must lie in (0, 1)");
            }
        }
        FamilyParams::Meixner { gamma, mu } => {
            if !gamma.is_positive() {
                return fail(Family::Meixner, "gamma must be positive");
            }
            if !mu.is_positive() || mu >= &rat(1) {
                return fail(Family::Meixner, "mu must lie in (0, 1)");
            }
        }
        FamilyParams::Charlier { mu } => {
            if !mu.is_positive() {
                return fail(Family::Charlier, "mu must be positive");
            }
        }
        FamilyParams::Racah { alpha, beta, a, b } => {
            let len = b - a;
            if !len.is_integer() || !len.is_positive() {
                return fail(Family::Racah, "b - a must be a positive integer");
            }
            if a <= &Rational::new((-1).into(), 2.into()) {
                return fail(Family::Racah, "a must exceed -1/2");
            }
            if alpha <= &minus_one {
                return fail(Family::Racah, "alpha must exceed -1");
            }
            if beta <= &minus_one || beta >= &(rat(2) * a + rat(1)) {
                return fail(Family::Racah, "beta must lie in (-1, 2a+1)");
            }
        }
        FamilyParams::DualHahn { a, b, c } => {
            let len = b - a;
            if !len.is_integer() || !len.is_positive() {
                return fail(Family::DualHahn, "b - a must be a positive integer");
            }
            if a <= &Rational::new((-1).into(), 2.into()) {
                return fail(Family::DualHahn, "a must exceed -1/2");
            }
            if c.abs() >= a + rat(1) {
                return fail(Family::DualHahn, "|c| must be below 1 + a");
            }
        }
    }
    Ok(())
}

impl FamilySpec {
    /// Number of support points `b - a` for the quadratic-lattice families.
    fn quad_len(a: &Rational, b: &Rational) -> u32 {
        let len = b - a;
        u32::try_from(len.to_integer()).expect("validated support length")
    }

    pub(super) fn poly_unchecked(&self, n: u32, s: &Rational) -> Rational {
        let one = rat(1);
        match &self.params {
            FamilyParams::Hahn { alpha, beta, n_points } => {
                let big_n = rat(i64::from(*n_points));
                let pre = alt(n) * poch(&(&big_n - rat(i64::from(n))), n) * poch(&(beta + &one), n) / fact(n);
                let series =
                    terminating(n, &[alpha + beta + rat(i64::from(n)) + &one, -s], &[beta + &one, &one - &big_n], &one);
                pre * series
            }
            FamilyParams::Kravchuk { p, n_max } => {
                let big_n = rat(i64::from(*n_max));
                let pre = alt(n) * rpow(p, i64::from(n)) * binom(&big_n, n);
                pre * terminating(n, &[-s], &[-big_n], &p.recip())
            }
            FamilyParams::Meixner { gamma, mu } => {
                let z = &one - mu.recip();
                poch(gamma, n) * terminating(n, &[-s], std::slice::from_ref(gamma), &z)
            }
            FamilyParams::Charlier { mu } => {
                let pre = rpow(&-mu, i64::from(n));
                pre * terminating(n, &[-s], &[], &-mu.recip())
            }
            FamilyParams::Racah { alpha, beta, a, b } => {
                let nq = rat(i64::from(n));
                let lower = [beta + &one, a - b + &one, a + b + alpha + &one];
                let pre = alt(n) * poch(&lower[0], n) * poch(&lower[1], n) * poch(&lower[2], n) / fact(n);
                let upper = [alpha + beta + &nq + &one, a - s, a + s + &one];
                pre * terminating(n, &upper, &lower, &one)
            }
            FamilyParams::DualHahn { a, b, c } => {
                let lower = [a - b + &one, a + c + &one];
                let pre = poch(&lower[0], n) * poch(&lower[1], n) / fact(n);
                pre * terminating(n, &[a - s, a + s + &one], &lower, &one)
            }
        }
    }

    /// `ρ(t+1)/ρ(t)` for the quadratic-lattice families.
    fn weight_ratio(&self, t: &Rational) -> Rational {
        let one = rat(1);
        match &self.params {
            FamilyParams::Racah { alpha, beta, a, b } => {
                let num = (a + t + &one) * (t - a + beta + &one) * (b + alpha + t + &one) * (b - t - &one);
                let den = (t - a + &one) * (b + t + &one) * (t + a - beta + &one) * (b + alpha - t - &one);
                num / den
            }
            FamilyParams::DualHahn { a, b, c } => {
                let num = (a + t + &one) * (c + t + &one) * (b - t - &one);
                let den = (t - a + &one) * (b + t + &one) * (t - c + &one);
                num / den
            }
            _ => unreachable!("linear families have closed-form weights"),
        }
    }

    pub(super) fn weight_unchecked(&self, s: &Rational) -> Rational {
        let one = rat(1);
        match &self.params {
            FamilyParams::Hahn { alpha, beta, n_points } => {
                let x = u32::try_from(s.to_integer()).expect("support point");
                let big_n = rat(i64::from(*n_points));
                poch(&(beta + &one), x) * poch(&(&big_n - s), x) / (fact(x) * poch(&(&big_n + alpha - s), x))
            }
            FamilyParams::Kravchuk { p, n_max } => {
                let x = u32::try_from(s.to_integer()).expect("support point");
                let q = &one - p;
                binom(&rat(i64::from(*n_max)), x) * rpow(p, i64::from(x)) * rpow(&q, i64::from(n_max - x))
            }
            FamilyParams::Meixner { gamma, mu } => {
                let x = u32::try_from(s.to_integer()).expect("support point");
                poch(gamma, x) * rpow(mu, i64::from(x)) / fact(x)
            }
            FamilyParams::Charlier { mu } => {
                let x = u32::try_from(s.to_integer()).expect("support point");
                rpow(mu, i64::from(x)) / fact(x)
            }
            FamilyParams::Racah { a, .. } | FamilyParams::DualHahn { a, .. } => {
                let mut w = Rational::one();
                let mut t = a.clone();
                while &t < s {
                    w *= self.weight_ratio(&t);
                    t += &one;
                }
                w
            }
        }
    }

    pub(super) fn norm_sq_unchecked(&self, n: u32) -> Rational {
        let one = rat(1);
        let nq = rat(i64::from(n));
        match &self.params {
            FamilyParams::Hahn { alpha, beta, n_points } => {
                let big_n = *n_points;
                // (α+β+n+1)_N / (α+β+2n+1), written without the 0/0 at n = 0
                let ab_ratio = if n == 0 {
                    poch(&(alpha + beta + rat(2)), big_n - 1)
                } else {
                    poch(&(alpha + beta + &nq + &one), big_n) / (alpha + beta + rat(2) * &nq + &one)
                };
                poch(&(beta + &one), n) * ab_ratio * fact(big_n - 1)
                    / (poch(&(alpha + &nq + &one), big_n - n - 1) * fact(n) * fact(big_n - n - 1))
            }
            FamilyParams::Kravchuk { p, n_max } => {
                let pq = p * (&one - p);
                binom(&rat(i64::from(*n_max)), n) * rpow(&pq, i64::from(n))
            }
            FamilyParams::Meixner { gamma, mu } => fact(n) * poch(gamma, n) / rpow(mu, i64::from(n)),
            FamilyParams::Charlier { mu } => fact(n) * rpow(mu, i64::from(n)),
            FamilyParams::Racah { alpha, beta, a, b } => {
                let c = {
                    let lower = [beta + &one, a - b + &one, a + b + alpha + &one];
                    alt(n) * poch(&lower[0], n) * poch(&lower[1], n) * poch(&lower[2], n) / fact(n)
                };
                let (ka, kb, kg, kd) = (beta.clone(), alpha.clone(), a - b, a + b);
                let len = Self::quad_len(a, b) - 1;
                let two = rat(2);
                let m = poch(&(&ka + &kb + &two), len) * poch(&-&kd, len)
                    / (poch(&(&ka - &kd + &one), len) * poch(&(&kb + &one), len));
                let h = m
                    * poch(&(&nq + &ka + &kb + &one), n)
                    * poch(&(&ka + &kb - &kg + &one), n)
                    * poch(&(&ka - &kd + &one), n)
                    * poch(&(&kb + &one), n)
                    * fact(n)
                    / (poch(&(&ka + &kb + &two), 2 * n)
                        * poch(&(&ka + &one), n)
                        * poch(&(&kb + &kd + &one), n)
                        * poch(&(&kg + &one), n));
                &c * &c * (two * a + &one) * h
            }
            FamilyParams::DualHahn { a, b, c } => {
                let len = Self::quad_len(a, b) - 1;
                let pre = poch(&(a - b + &one), n) * poch(&(a + c + &one), n) / fact(n);
                let lenq = rat(i64::from(len));
                &pre * &pre * poch(&(rat(2) * a + &one), len + 1)
                    / (fact(len) * binom(&(a + c + &nq), n) * binom(&(a - c + &lenq - &nq), len - n))
            }
        }
    }

    /// `σ(s)` of the difference equation.
    pub fn sigma(&self, s: &Rational) -> Rational {
        match &self.params {
            FamilyParams::Hahn { alpha, n_points, .. } => s * (rat(i64::from(*n_points)) + alpha - s),
            FamilyParams::Kravchuk { .. } | FamilyParams::Meixner { .. } | FamilyParams::Charlier { .. } => s.clone(),
            FamilyParams::Racah { alpha, beta, a, b } => (s - a) * (s + b) * (s + a - beta) * (b + alpha - s),
            FamilyParams::DualHahn { a, b, c } => (s - a) * (s + b) * (s - c),
        }
    }

    /// `τ(s)` of the difference equation. On the quadratic lattice this is
    /// `[σ(s) + τ(s)Δx(s-1/2) - σ(s)] / Δx(s-1/2)`.
    pub fn tau(&self, s: &Rational) -> Rational {
        let one = rat(1);
        match &self.params {
            FamilyParams::Hahn { alpha, beta, n_points } => {
                (beta + &one) * rat(i64::from(*n_points) - 1) - (alpha + beta + rat(2)) * s
            }
            FamilyParams::Kravchuk { p, n_max } => (rat(i64::from(*n_max)) * p - s) / (&one - p),
            FamilyParams::Meixner { gamma, mu } => gamma * mu - s * (&one - mu),
            FamilyParams::Charlier { mu } => mu - s,
            FamilyParams::Racah { alpha, beta, a, b } => {
                let plus = (s - a + beta + &one) * (s + alpha + b + &one) * (b - s - &one) * (s + a + &one);
                (plus - self.sigma(s)) / self.lattice().delta_x_half(s)
            }
            FamilyParams::DualHahn { a, b, c } => {
                let plus = (s + c + &one) * (s + a + &one) * (b - s - &one);
                (plus - self.sigma(s)) / self.lattice().delta_x_half(s)
            }
        }
    }

    /// Eigenvalue `λ_n` of the difference equation.
    pub fn lambda(&self, n: u32) -> Rational {
        let nq = rat(i64::from(n));
        match &self.params {
            FamilyParams::Hahn { alpha, beta, .. } | FamilyParams::Racah { alpha, beta, .. } => {
                &nq * (alpha + beta + &nq + rat(1))
            }
            FamilyParams::Kravchuk { p, .. } => nq / (rat(1) - p),
            FamilyParams::Meixner { mu, .. } => nq * (rat(1) - mu),
            FamilyParams::Charlier { .. } | FamilyParams::DualHahn { .. } => nq,
        }
    }

    /// Factorial moments `E[x(x-1)…(x-k+1)]` of the unit-mass weight, for the
    /// families with infinite support.
    pub(super) fn factorial_moment(&self, k: u32) -> Rational {
        match &self.params {
            FamilyParams::Meixner { gamma, mu } => poch(gamma, k) * rpow(&(mu / (rat(1) - mu)), i64::from(k)),
            FamilyParams::Charlier { mu } => rpow(mu, i64::from(k)),
            _ => unreachable!("finite support families are summed directly"),
        }
    }
}
