use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{DomainError, Support};
use crate::arith::{rat, Rational};

/// The lattice on which a family lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeKind {
    /// `x(s) = s`.
    Linear,
    /// `x(s) = s(s+1)`, used for `s > -1/2` where it is strictly increasing.
    Quadratic,
}

impl LatticeKind {
    pub fn x(self, s: &Rational) -> Rational {
        match self {
            LatticeKind::Linear => s.clone(),
            LatticeKind::Quadratic => s * (s + Rational::one()),
        }
    }

    /// `Δx(s) = x(s+1) - x(s)`.
    pub fn delta_x(self, s: &Rational) -> Rational {
        self.x(&(s + Rational::one())) - self.x(s)
    }

    /// `∇x(s) = x(s) - x(s-1)`.
    pub fn nabla_x(self, s: &Rational) -> Rational {
        self.x(s) - self.x(&(s - Rational::one()))
    }

    /// `Δx(s-1/2) = x(s+1/2) - x(s-1/2)`, the orthogonality measure.
    pub fn delta_x_half(self, s: &Rational) -> Rational {
        match self {
            LatticeKind::Linear => Rational::one(),
            LatticeKind::Quadratic => rat(2) * s + Rational::one(),
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeKind::Linear => "linear",
            LatticeKind::Quadratic => "quadratic",
        })
    }
}

/// A function sampled on the points of a support.
pub struct LatticeFn<'a> {
    support: Support,
    f: Box<dyn Fn(&Rational) -> Rational + Send + Sync + 'a>,
}

impl<'a> LatticeFn<'a> {
    pub fn new(support: Support, f: impl Fn(&Rational) -> Rational + Send + Sync + 'a) -> Self {
        LatticeFn { support, f: Box::new(f) }
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn at(&self, s: &Rational) -> Result<Rational, DomainError> {
        self.support.require(s)?;
        Ok((self.f)(s))
    }

    /// Forward difference `f(s+1) - f(s)`; both points must lie in the support.
    pub fn delta(&self, s: &Rational) -> Result<Rational, DomainError> {
        let next = s + Rational::one();
        Ok(self.at(&next)? - self.at(s)?)
    }

    /// Backward difference `f(s) - f(s-1)`; both points must lie in the support.
    pub fn nabla(&self, s: &Rational) -> Result<Rational, DomainError> {
        let prev = s - Rational::one();
        Ok(self.at(s)? - self.at(&prev)?)
    }

    /// `Δf(s) / Δx(s)`.
    pub fn divided_delta(&self, lattice: LatticeKind, s: &Rational) -> Result<Rational, DomainError> {
        Ok(self.delta(s)? / lattice.delta_x(s))
    }

    /// `∇f(s) / ∇x(s)`.
    pub fn divided_nabla(&self, lattice: LatticeKind, s: &Rational) -> Result<Rational, DomainError> {
        Ok(self.nabla(s)? / lattice.nabla_x(s))
    }
}

/// Forward difference of `f` at `s`.
pub fn delta(f: &LatticeFn<'_>, s: &Rational) -> Result<Rational, DomainError> {
    f.delta(s)
}

/// Backward difference of `f` at `s`.
pub fn nabla(f: &LatticeFn<'_>, s: &Rational) -> Result<Rational, DomainError> {
    f.nabla(s)
}
