//! Classical discrete orthogonal polynomials.
//!
//! Families on the linear lattice `x = s` (Hahn, Kravchuk, Meixner, Charlier)
//! and on the quadratic lattice `x(s) = s(s+1)` (Racah, dual Hahn), all in the
//! hypergeometric normalisation of Nikiforov, Suslov and Uvarov, so `p_0 = 1`.
//! Everything is exact over the rationals.
//!
//! Weights of the finite families on the quadratic lattice are normalised so
//! that `ρ(a) = 1`; Hahn likewise has `ρ(0) = 1`, and Kravchuk uses the
//! binomial distribution. Meixner and Charlier report the weight with
//! `ρ(0) = 1`, but their norms and orthogonality sums refer to the weight
//! rescaled to unit total mass, since the unscaled mass is irrational in
//! general. Those sums are evaluated exactly through factorial moments.

mod families;
mod hyper;
mod lattice;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{rat, Rational};

pub use lattice::{delta, nabla, LatticeFn, LatticeKind};

/// Points sampled from an infinite support when checking the difference
/// equation.
pub const INFINITE_WINDOW: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hahn,
    Kravchuk,
    Meixner,
    Charlier,
    Racah,
    DualHahn,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Hahn, Family::Kravchuk, Family::Meixner, Family::Charlier, Family::Racah, Family::DualHahn];

    pub fn lattice(self) -> LatticeKind {
        match self {
            Family::Racah | Family::DualHahn => LatticeKind::Quadratic,
            _ => LatticeKind::Linear,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Hahn => "hahn",
            Family::Kravchuk => "kravchuk",
            Family::Meixner => "meixner",
            Family::Charlier => "charlier",
            Family::Racah => "racah",
            Family::DualHahn => "dual-hahn",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "hahn" => Ok(Family::Hahn),
            "kravchuk" | "krawtchouk" => Ok(Family::Kravchuk),
            "meixner" => Ok(Family::Meixner),
            "charlier" => Ok(Family::Charlier),
            "racah" => Ok(Family::Racah),
            "dual-hahn" | "dualhahn" => Ok(Family::DualHahn),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("invalid {family} parameters: {reason}")]
    Parameters { family: Family, reason: String },
    #[error("degree {n} is outside the {family} range 0..={max}")]
    Degree { family: Family, n: u32, max: u32 },
    #[error("point s = {s} is outside the support {support}")]
    Support { s: String, support: String },
}

/// The set of lattice indices a family lives on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Support {
    /// `start, start+1, …, start+len-1`.
    Finite { start: Rational, len: u32 },
    /// `0, 1, 2, …`.
    Infinite,
}

impl Support {
    pub fn finite(start: Rational, len: u32) -> Self {
        Support::Finite { start, len }
    }

    pub fn contains(&self, s: &Rational) -> bool {
        match self {
            Support::Finite { start, len } => {
                let k = s - start;
                k.is_integer() && !k.is_negative() && k < rat(i64::from(*len))
            }
            Support::Infinite => s.is_integer() && !s.is_negative(),
        }
    }

    pub(crate) fn require(&self, s: &Rational) -> Result<(), DomainError> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(DomainError::Support { s: s.to_string(), support: self.to_string() })
        }
    }

    /// All points of a finite support; `None` for an infinite one.
    pub fn points(&self) -> Option<Vec<Rational>> {
        match self {
            Support::Finite { start, len } => Some((0..*len).map(|k| start + rat(i64::from(k))).collect()),
            Support::Infinite => None,
        }
    }

    /// Points where both neighbours are also in the support, truncated to
    /// [`INFINITE_WINDOW`] points for an infinite support.
    pub fn interior(&self) -> Vec<Rational> {
        match self {
            Support::Finite { start, len } => (1..len.saturating_sub(1)).map(|k| start + rat(i64::from(k))).collect(),
            Support::Infinite => (1..=INFINITE_WINDOW).map(|k| rat(i64::from(k))).collect(),
        }
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Support::Finite { start, len } => {
                write!(f, "[{start}, {}]", start + rat(i64::from(*len)) - rat(1))
            }
            Support::Infinite => f.write_str("[0, ∞)"),
        }
    }
}

/// Family parameters. Construct through the validating [`FamilySpec`]
/// constructors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    /// Support `x = 0, …, N-1` with `N = n_points`.
    Hahn {
        alpha: Rational,
        beta: Rational,
        n_points: u32,
    },
    /// Support `x = 0, …, N` with `N = n_max`.
    Kravchuk {
        p: Rational,
        n_max: u32,
    },
    Meixner {
        gamma: Rational,
        mu: Rational,
    },
    Charlier {
        mu: Rational,
    },
    /// Support `s = a, …, b-1`.
    Racah {
        alpha: Rational,
        beta: Rational,
        a: Rational,
        b: Rational,
    },
    /// Support `s = a, …, b-1`.
    DualHahn {
        a: Rational,
        b: Rational,
        c: Rational,
    },
}

/// A validated family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    params: FamilyParams,
}

impl FamilySpec {
    pub fn new(params: FamilyParams) -> Result<Self, DomainError> {
        families::validate(&params)?;
        Ok(FamilySpec { params })
    }

    pub fn hahn(alpha: Rational, beta: Rational, n_points: u32) -> Result<Self, DomainError> {
        Self::new(FamilyParams::Hahn { alpha, beta, n_points })
    }

    pub fn kravchuk(p: Rational, n_max: u32) -> Result<Self, DomainError> {
        Self::new(FamilyParams::Kravchuk { p, n_max })
    }

    pub fn meixner(gamma: Rational, mu: Rational) -> Result<Self, DomainError> {
        Self::new(FamilyParams::Meixner { gamma, mu })
    }

    pub fn charlier(mu: Rational) -> Result<Self, DomainError> {
        Self::new(FamilyParams::Charlier { mu })
    }

    pub fn racah(alpha: Rational, beta: Rational, a: Rational, b: Rational) -> Result<Self, DomainError> {
        Self::new(FamilyParams::Racah { alpha, beta, a, b })
    }

    pub fn dual_hahn(a: Rational, b: Rational, c: Rational) -> Result<Self, DomainError> {
        Self::new(FamilyParams::DualHahn { a, b, c })
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn family(&self) -> Family {
        match self.params {
            FamilyParams::Hahn { .. } => Family::Hahn,
            FamilyParams::Kravchuk { .. } => Family::Kravchuk,
            FamilyParams::Meixner { .. } => Family::Meixner,
            FamilyParams::Charlier { .. } => Family::Charlier,
            FamilyParams::Racah { .. } => Family::Racah,
            FamilyParams::DualHahn { .. } => Family::DualHahn,
        }
    }

    pub fn lattice(&self) -> LatticeKind {
        self.family().lattice()
    }

    pub fn support(&self) -> Support {
        match &self.params {
            FamilyParams::Hahn { n_points, .. } => Support::finite(rat(0), *n_points),
            FamilyParams::Kravchuk { n_max, .. } => Support::finite(rat(0), n_max + 1),
            FamilyParams::Meixner { .. } | FamilyParams::Charlier { .. } => Support::Infinite,
            FamilyParams::Racah { a, b, .. } | FamilyParams::DualHahn { a, b, .. } => {
                let len = u32::try_from((b - a).to_integer()).expect("validated support length");
                Support::finite(a.clone(), len)
            }
        }
    }

    /// Largest admissible degree, `None` for the infinite families.
    pub fn max_degree(&self) -> Option<u32> {
        match self.support() {
            Support::Finite { len, .. } => Some(len - 1),
            Support::Infinite => None,
        }
    }

    fn require_degree(&self, n: u32) -> Result<(), DomainError> {
        match self.max_degree() {
            Some(max) if n > max => Err(DomainError::Degree { family: self.family(), n, max }),
            _ => Ok(()),
        }
    }

    /// `p_n(s)`, exact.
    pub fn eval(&self, n: u32, s: &Rational) -> Result<Rational, DomainError> {
        self.require_degree(n)?;
        self.support().require(s)?;
        Ok(self.poly_unchecked(n, s))
    }

    /// `ρ(s)`, exact and positive.
    pub fn weight(&self, s: &Rational) -> Result<Rational, DomainError> {
        self.support().require(s)?;
        Ok(self.weight_unchecked(s))
    }

    /// Closed-form `d_n²`.
    pub fn norm_sq(&self, n: u32) -> Result<Rational, DomainError> {
        self.require_degree(n)?;
        Ok(self.norm_sq_unchecked(n))
    }
}

/// Exact value of the degree-`n` member at lattice index `s`.
pub fn eval_poly(spec: &FamilySpec, n: u32, s: &Rational) -> Result<Rational, DomainError> {
    spec.eval(n, s)
}

/// Exact weight `ρ(s)`.
pub fn weight(spec: &FamilySpec, s: &Rational) -> Result<Rational, DomainError> {
    spec.weight(s)
}

/// Exact squared norm `d_n²` from its closed form.
pub fn norm_sq(spec: &FamilySpec, n: u32) -> Result<Rational, DomainError> {
    spec.norm_sq(n)
}

/// `Σ_s p_n(s) p_m(s) ρ(s) Δx(s-1/2)` evaluated exactly.
///
/// For Meixner and Charlier the sum runs over the infinite support against
/// the unit-mass weight: `p_n p_m` is expanded in falling factorials by Newton
/// forward differences and each falling factorial is replaced by its moment.
pub fn check_orthogonality(spec: &FamilySpec, n: u32, m: u32) -> Result<Rational, DomainError> {
    spec.require_degree(n)?;
    spec.require_degree(m)?;
    let lattice = spec.lattice();
    match spec.support().points() {
        Some(points) => Ok(points
            .iter()
            .map(|s| {
                spec.poly_unchecked(n, s)
                    * spec.poly_unchecked(m, s)
                    * spec.weight_unchecked(s)
                    * lattice.delta_x_half(s)
            })
            .fold(Rational::zero(), |acc, t| acc + t)),
        None => {
            let degree = n + m;
            let mut diffs: Vec<Rational> = (0..=degree)
                .map(|x| {
                    let s = rat(i64::from(x));
                    spec.poly_unchecked(n, &s) * spec.poly_unchecked(m, &s)
                })
                .collect();
            // f = Σ_k Δ^k f(0) · x(x-1)…(x-k+1) / k!
            let mut total = Rational::zero();
            let mut k_fact = Rational::one();
            for k in 0..=degree {
                if k > 0 {
                    k_fact *= rat(i64::from(k));
                }
                total += &diffs[0] * spec.factorial_moment(k) / &k_fact;
                for i in 0..diffs.len() - 1 {
                    diffs[i] = &diffs[i + 1] - &diffs[i];
                }
                diffs.pop();
            }
            Ok(total)
        }
    }
}

/// Residuals of the difference equation at every interior support point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub family: Family,
    pub n: u32,
    /// `(s, residual)` pairs in increasing `s`.
    pub points: Vec<(Rational, Rational)>,
    pub max_abs: Rational,
}

impl ResidualReport {
    pub fn is_exact_zero(&self) -> bool {
        self.max_abs.is_zero()
    }
}

/// Pieces of the difference operator at one point, shared by the residual and
/// the eigenvalue recovery.
fn operator_without_lambda(spec: &FamilySpec, y: &LatticeFn<'_>, s: &Rational) -> Result<Rational, DomainError> {
    let lattice = spec.lattice();
    let forward = y.divided_delta(lattice, s)?;
    let backward = y.divided_nabla(lattice, s)?;
    let dxh = lattice.delta_x_half(s);
    let tau = spec.tau(s);
    let half = Rational::new(1.into(), 2.into());
    let sigma_tilde = spec.sigma(s) + &half * &tau * &dxh;
    Ok(sigma_tilde * (&forward - &backward) / dxh + half * tau * (forward + backward))
}

/// Residual of the difference equation applied to an arbitrary lattice
/// function `f` with the eigenvalue `λ_n` of the family.
pub fn difference_residuals(
    spec: &FamilySpec,
    n: u32,
    f: impl Fn(&Rational) -> Rational + Send + Sync,
) -> Result<ResidualReport, DomainError> {
    spec.require_degree(n)?;
    let lambda = spec.lambda(n);
    let y = LatticeFn::new(spec.support(), f);
    let mut points = Vec::new();
    let mut max_abs = Rational::zero();
    for s in spec.support().interior() {
        let r = operator_without_lambda(spec, &y, &s)? + &lambda * y.at(&s)?;
        if r.abs() > max_abs {
            max_abs = r.abs();
        }
        points.push((s, r));
    }
    Ok(ResidualReport { family: spec.family(), n, points, max_abs })
}

/// Residual of the family's own difference equation for `p_n`.
pub fn check_difference_equation(spec: &FamilySpec, n: u32) -> Result<ResidualReport, DomainError> {
    difference_residuals(spec, n, |s| spec.poly_unchecked(n, s))
}

/// Solves the difference equation for `λ` at interior point `s`. Returns
/// `None` where `p_n(s) = 0`.
pub fn recover_eigenvalue(spec: &FamilySpec, n: u32, s: &Rational) -> Result<Option<Rational>, DomainError> {
    spec.require_degree(n)?;
    let y = LatticeFn::new(spec.support(), |t| spec.poly_unchecked(n, t));
    let value = y.at(s)?;
    if value.is_zero() {
        return Ok(None);
    }
    Ok(Some(-operator_without_lambda(spec, &y, s)? / value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn krav() -> FamilySpec {
        FamilySpec::kravchuk(ratio(1, 2), 4).unwrap()
    }

    #[test]
    fn degree_zero_is_one_everywhere() {
        let specs = [
            FamilySpec::hahn(ratio(1, 2), rat(2), 6).unwrap(),
            krav(),
            FamilySpec::meixner(ratio(3, 2), ratio(1, 3)).unwrap(),
            FamilySpec::charlier(ratio(5, 2)).unwrap(),
            FamilySpec::racah(rat(0), rat(0), rat(0), rat(3)).unwrap(),
            FamilySpec::dual_hahn(ratio(1, 2), ratio(11, 2), ratio(1, 3)).unwrap(),
        ];
        for spec in &specs {
            for s in spec.support().interior() {
                assert_eq!(spec.eval(0, &s).unwrap(), rat(1), "{}", spec.family());
            }
        }
    }

    #[test]
    fn kravchuk_examples() {
        let k = krav();
        assert_eq!(k.eval(1, &rat(2)).unwrap(), rat(0));
        assert_eq!(k.weight(&rat(2)).unwrap(), ratio(3, 8));
        assert_eq!(k.norm_sq(0).unwrap(), rat(1));
        assert_eq!(check_orthogonality(&k, 0, 0).unwrap(), rat(1));
        assert!(matches!(k.eval(5, &rat(0)), Err(DomainError::Degree { .. })));
        assert!(k.eval(4, &rat(0)).is_ok());
    }

    #[test]
    fn charlier_weight_at_origin() {
        let c = FamilySpec::charlier(ratio(7, 3)).unwrap();
        assert_eq!(c.weight(&rat(0)).unwrap(), rat(1));
    }

    #[test]
    fn parameter_domains_are_enforced() {
        assert!(FamilySpec::kravchuk(rat(1), 4).is_err());
        assert!(FamilySpec::kravchuk(rat(0), 4).is_err());
        assert!(FamilySpec::meixner(rat(1), rat(1)).is_err());
        assert!(FamilySpec::charlier(rat(0)).is_err());
        assert!(FamilySpec::hahn(rat(-1), rat(0), 4).is_err());
        assert!(FamilySpec::racah(rat(0), rat(0), rat(0), ratio(5, 2)).is_err());
        assert!(FamilySpec::racah(rat(0), rat(1), rat(0), rat(3)).is_err());
        assert!(FamilySpec::dual_hahn(rat(0), rat(3), rat(1)).is_err());
    }

    #[test]
    fn racah_all_ones_example() {
        let r = FamilySpec::racah(rat(0), rat(0), rat(0), rat(3)).unwrap();
        let d0: Rational =
            (0..3).map(|s| r.weight(&rat(s)).unwrap() * rat(2 * s + 1)).fold(Rational::zero(), |a, b| a + b);
        assert_eq!(d0, r.norm_sq(0).unwrap());
        assert_eq!(check_orthogonality(&r, 1, 2).unwrap(), rat(0));
        assert!(check_difference_equation(&r, 1).unwrap().is_exact_zero());
    }

    #[test]
    fn hahn_difference_equation_and_negative_control() {
        let h = FamilySpec::hahn(rat(0), rat(0), 5).unwrap();
        assert!(check_difference_equation(&h, 2).unwrap().is_exact_zero());
        let eps = ratio(1, 1000);
        let perturbed = difference_residuals(&h, 2, |s| h.eval(2, s).unwrap() + &eps * s).unwrap();
        assert!(!perturbed.is_exact_zero());
    }

    #[test]
    fn eigenvalue_is_recovered() {
        let h = FamilySpec::hahn(ratio(1, 3), ratio(2, 5), 7).unwrap();
        for n in 1..6 {
            let found: Vec<_> =
                h.support().interior().iter().filter_map(|s| recover_eigenvalue(&h, n, s).unwrap()).collect();
            assert!(found.len() >= 2);
            assert!(found.iter().all(|l| *l == h.lambda(n)));
        }
    }
}
