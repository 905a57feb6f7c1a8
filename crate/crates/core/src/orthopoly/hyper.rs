use num_traits::{One, Zero};

use crate::arith::Rational;

/// Terminating generalized hypergeometric series
/// `pFq(-n, upper…; lower…; z) = Σ_{k=0}^{n} (-n)_k Π(u)_k / Π(l)_k · z^k / k!`.
///
/// Lower parameters must stay nonzero over the first `n` rising steps.
pub(crate) fn terminating(n: u32, upper: &[Rational], lower: &[Rational], z: &Rational) -> Rational {
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let minus_n = -Rational::from_integer(n.into());
    for k in 0..n {
        let kq = Rational::from_integer(k.into());
        let mut num = &minus_n + &kq;
        for u in upper {
            num *= u + &kq;
        }
        if num.is_zero() {
            break;
        }
        let mut den = Rational::from_integer((k + 1).into());
        for l in lower {
            let f = l + &kq;
            assert!(!f.is_zero(), "hypergeometric lower parameter hits zero");
            den *= f;
        }
        term = term * num * z / den;
        sum += &term;
    }
    sum
}
