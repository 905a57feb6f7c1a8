use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{factorial, parity_sign, triad_ok, ExactRadical, HalfInt, Rational, Spin};

fn projection_ok(j: Spin, m: HalfInt) -> bool {
    let (j, m) = (j.twice() as i32, m.twice());
    m.abs() <= j && (j + m) % 2 == 0
}

/// Wigner 3j symbol `(j1 j2 j3; m1 m2 m3)`, exact, by the Racah single-sum
/// formula. Zero when the projections do not sum to zero, any projection is
/// out of range, or the triangle condition fails.
pub fn three_j(j1: Spin, j2: Spin, j3: Spin, m1: HalfInt, m2: HalfInt, m3: HalfInt) -> ExactRadical {
    if (m1 + m2 + m3).twice() != 0
        || !triad_ok(j1.twice(), j2.twice(), j3.twice())
        || !projection_ok(j1, m1)
        || !projection_ok(j2, m2)
        || !projection_ok(j3, m3)
    {
        return ExactRadical::zero();
    }
    let [j1, j2, j3] = [j1, j2, j3].map(|j| j.twice() as i64);
    let [m1, m2, m3] = [m1, m2, m3].map(|m| i64::from(m.twice()));
    let h = |x: i64| -> usize {
        debug_assert!(x >= 0 && x % 2 == 0);
        (x / 2) as usize
    };

    // denominators k! (j3-j2+k+m1)! (j3-j1+k-m2)! (j1+j2-j3-k)! (j1-k-m1)! (j2-k+m2)!
    let k_min = 0.max(j2 - j3 - m1).max(j1 - j3 + m2);
    let k_max = (j1 + j2 - j3).min(j1 - m1).min(j2 + m2);
    let mut sum = Rational::zero();
    let mut k = k_min;
    while k <= k_max {
        let den = factorial(h(k))
            * factorial(h(j3 - j2 + k + m1))
            * factorial(h(j3 - j1 + k - m2))
            * factorial(h(j1 + j2 - j3 - k))
            * factorial(h(j1 - k - m1))
            * factorial(h(j2 - k + m2));
        let sign = parity_sign(k / 2);
        sum += Rational::new(BigInt::from(sign), BigInt::from(den));
        k += 2;
    }
    if sum.is_zero() {
        return ExactRadical::zero();
    }
    let phase = parity_sign((j1 - j2 - m3) / 2);
    let num: BigUint = factorial(h(j1 + j2 - j3))
        * factorial(h(j1 - j2 + j3))
        * factorial(h(j2 + j3 - j1))
        * factorial(h(j1 + m1))
        * factorial(h(j1 - m1))
        * factorial(h(j2 + m2))
        * factorial(h(j2 - m2))
        * factorial(h(j3 + m3))
        * factorial(h(j3 - m3));
    let den = factorial(h(j1 + j2 + j3) + 1);
    ExactRadical::new(sum * Rational::from_integer(phase.into()), Rational::new(num.into(), den.into()))
}

/// Clebsch-Gordan coefficient `<j1 m1 j2 m2 | j m>` with the Condon-Shortley
/// phase: `(-1)^{j1-j2+m} √(2j+1) (j1 j2 j; m1 m2 -m)`.
pub fn clebsch_gordan(j1: Spin, j2: Spin, m1: HalfInt, m2: HalfInt, j: Spin, m: HalfInt) -> ExactRadical {
    let tj = three_j(j1, j2, j, m1, m2, -m);
    if tj.is_zero() {
        return tj;
    }
    let phase_twice = j1.twice() as i64 - j2.twice() as i64 + i64::from(m.twice());
    let sign = parity_sign(phase_twice / 2);
    let norm = ExactRadical::new(Rational::from_integer(sign.into()), Rational::from_integer(j.dim().into()));
    &tj * &norm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn s(t: u32) -> Spin {
        Spin::from_twice(t)
    }
    fn m(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn three_j_examples() {
        assert_eq!(three_j(s(0), s(0), s(0), m(0), m(0), m(0)), ExactRadical::one());
        let inv_sqrt3 = ExactRadical::new(rat(1), ratio(1, 3));
        assert_eq!(three_j(s(2), s(2), s(0), m(2), m(-2), m(0)), inv_sqrt3);
        assert!(three_j(s(2), s(2), s(2), m(0), m(0), m(0)).is_zero());
        assert!(three_j(s(2), s(2), s(0), m(2), m(2), m(0)).is_zero());
    }

    #[test]
    fn clebsch_gordan_examples() {
        assert_eq!(clebsch_gordan(s(0), s(0), m(0), m(0), s(0), m(0)), ExactRadical::one());
        assert_eq!(clebsch_gordan(s(1), s(1), m(1), m(1), s(2), m(2)), ExactRadical::one());
        let inv_sqrt2 = ExactRadical::new(rat(1), ratio(1, 2));
        assert_eq!(clebsch_gordan(s(1), s(1), m(1), m(-1), s(0), m(0)), inv_sqrt2);
    }

    #[test]
    fn singlet_identity() {
        // (j j 0; m -m 0) = (-1)^{j-m} / √(2j+1)
        for j in 0..7u32 {
            for mm in (-(j as i32)..=j as i32).step_by(2) {
                let v = three_j(s(j), s(j), s(0), m(mm), m(-mm), m(0));
                let sign = parity_sign(i64::from((j as i32 - mm) / 2));
                assert_eq!(v, ExactRadical::new(rat(sign), ratio(1, i64::from(j) + 1)));
            }
        }
    }
}
