use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{triad_ok, HalfInt, Rational, Spin};
use crate::orthopoly::{DomainError, FamilySpec};

/// Labels of `{j1 j2 j12; j3 j j23}`.
///
/// The four triads are `(j1, j2, j12)`, `(j3, j, j12)`, `(j1, j, j23)` and
/// `(j3, j2, j23)`. As a tetrahedron, the two entries of each column label
/// opposite edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SixJLabels {
    pub j1: Spin,
    pub j2: Spin,
    pub j12: Spin,
    pub j3: Spin,
    pub j: Spin,
    pub j23: Spin,
}

impl SixJLabels {
    pub fn new(j1: Spin, j2: Spin, j12: Spin, j3: Spin, j: Spin, j23: Spin) -> Self {
        SixJLabels { j1, j2, j12, j3, j, j23 }
    }

    /// From doubled values in reading order `j1 j2 j12 j3 j j23`.
    pub fn from_twice(t: [u32; 6]) -> Self {
        let s = t.map(Spin::from_twice);
        SixJLabels::new(s[0], s[1], s[2], s[3], s[4], s[5])
    }

    /// Doubled values in reading order.
    pub fn twice(&self) -> [u32; 6] {
        [self.j1, self.j2, self.j12, self.j3, self.j, self.j23].map(Spin::twice)
    }

    pub fn spins(&self) -> [Spin; 6] {
        [self.j1, self.j2, self.j12, self.j3, self.j, self.j23]
    }

    /// The four triads as doubled values.
    pub fn triads(&self) -> [[u32; 3]; 4] {
        let [a, b, c, d, e, f] = self.twice();
        [[a, b, c], [d, e, c], [a, e, f], [d, b, f]]
    }

    pub fn is_admissible(&self) -> bool {
        self.triads().iter().all(|&[x, y, z]| triad_ok(x, y, z))
    }
}

impl fmt::Display for SixJLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} {} {}; {} {} {}}}", self.j1, self.j2, self.j12, self.j3, self.j, self.j23)
    }
}

/// Parameters of the Racah polynomial `u_n^{(α,β)}(x(s), a, b)` representing a
/// 6j symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RacahParams {
    pub alpha: HalfInt,
    pub beta: HalfInt,
    pub a: HalfInt,
    pub b: HalfInt,
    pub n: u32,
    pub s: HalfInt,
}

fn half(h: HalfInt) -> Rational {
    Rational::new(h.twice().into(), 2.into())
}

impl RacahParams {
    /// The Racah family with these `α, β, a, b`.
    pub fn family(&self) -> Result<FamilySpec, DomainError> {
        FamilySpec::racah(half(self.alpha), half(self.beta), half(self.a), half(self.b))
    }

    /// The lattice index `s` as a rational.
    pub fn s_rational(&self) -> Rational {
        half(self.s)
    }
}

/// A 3×3 array of spins for the 9j symbol, row-major.
pub type NineJLabels = [[Spin; 3]; 3];

/// Labels of the 12j symbol of the second kind, a 3×4 array with rows `j`,
/// `l` and `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwelveJLabels {
    pub j: [Spin; 4],
    pub l: [Spin; 4],
    pub k: [Spin; 4],
}

impl TwelveJLabels {
    pub fn from_twice(j: [u32; 4], l: [u32; 4], k: [u32; 4]) -> Self {
        TwelveJLabels { j: j.map(Spin::from_twice), l: l.map(Spin::from_twice), k: k.map(Spin::from_twice) }
    }

    /// `2R` where `R = Σ (j_i + l_i + k_i)`.
    pub fn r_twice(&self) -> u32 {
        (0..4).map(|i| self.j[i].twice() + self.l[i].twice() + self.k[i].twice()).sum()
    }

    /// The `i`-th 6j factor `{j_i k_i x; k_{i+1} j_{i+1} l_i}`.
    pub fn factor(&self, i: usize, x: Spin) -> SixJLabels {
        let next = (i + 1) % 4;
        SixJLabels::new(self.j[i], self.k[i], x, self.k[next], self.j[next], self.l[i])
    }

    /// Columns shifted cyclically by one.
    pub fn rotated(&self) -> Self {
        let rot = |a: [Spin; 4]| [a[1], a[2], a[3], a[0]];
        TwelveJLabels { j: rot(self.j), l: rot(self.l), k: rot(self.k) }
    }
}
