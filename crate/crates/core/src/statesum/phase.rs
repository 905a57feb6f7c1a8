use std::fmt;
use std::str::FromStr;

use super::Triangulation;
use crate::arith::Spin;

/// The exponent `φ` of the sign `(-1)^φ` attached to each coloring.
///
/// Implementations return `2φ` from the full list of edge spins; a state sum
/// rejects colorings where that value is odd.
pub trait PhaseConvention: Send + Sync {
    fn name(&self) -> &'static str;

    fn phase_twice(&self, t: &Triangulation, spins: &[Spin]) -> i64;
}

/// `φ = Σ_{internal faces} (j_a + j_b + j_c) + Σ_{internal edges} 2x`.
///
/// Face perimeters are integers, so `φ` always is. When the boundary is a
/// closed surface this equals `Σ_tet Σ_{e ∈ tet} j_e - Σ_{boundary} j_e`: each
/// tetrahedron's edge sum is half its four perimeters, and each boundary edge
/// lies on two boundary faces. A single tetrahedron has no internal faces, so
/// its state sum is the bare 6j symbol, and the sign matches the one the 2-3
/// move needs.
#[derive(Clone, Copy, Debug, Default)]
pub struct BoundaryNormalized;

/// `φ = Σ_tet Σ_{e ∈ tet} j_e + Σ_{internal} 2x`, the textbook sign for
/// integer spins. Colorings where this is a half-integer are rejected.
#[derive(Clone, Copy, Debug, Default)]
pub struct PonzanoRegge;

/// `φ = 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoPhase;

fn tet_sum_twice(t: &Triangulation, spins: &[Spin]) -> i64 {
    t.tetrahedra.iter().flat_map(|tet| tet.slots).map(|e| i64::from(spins[e].twice())).sum()
}

fn internal_twice(t: &Triangulation, spins: &[Spin]) -> i64 {
    t.internal.iter().map(|&e| i64::from(spins[e].twice())).sum()
}

impl PhaseConvention for BoundaryNormalized {
    fn name(&self) -> &'static str {
        "boundary-normalized"
    }

    fn phase_twice(&self, t: &Triangulation, spins: &[Spin]) -> i64 {
        let faces: i64 = t
            .faces
            .iter()
            .filter(|f| !f.is_boundary())
            .flat_map(|f| f.edges)
            .map(|e| i64::from(spins[e].twice()))
            .sum();
        faces + 2 * internal_twice(t, spins)
    }
}

impl PhaseConvention for PonzanoRegge {
    fn name(&self) -> &'static str {
        "ponzano-regge"
    }

    fn phase_twice(&self, t: &Triangulation, spins: &[Spin]) -> i64 {
        tet_sum_twice(t, spins) + 2 * internal_twice(t, spins)
    }
}

impl PhaseConvention for NoPhase {
    fn name(&self) -> &'static str {
        "none"
    }

    fn phase_twice(&self, _: &Triangulation, _: &[Spin]) -> i64 {
        0
    }
}

/// Named choice among the built-in conventions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Phase {
    #[default]
    BoundaryNormalized,
    PonzanoRegge,
    None,
}

impl Phase {
    pub const ALL: [Phase; 3] = [Phase::BoundaryNormalized, Phase::PonzanoRegge, Phase::None];

    pub fn convention(self) -> &'static dyn PhaseConvention {
        match self {
            Phase::BoundaryNormalized => &BoundaryNormalized,
            Phase::PonzanoRegge => &PonzanoRegge,
            Phase::None => &NoPhase,
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.convention().name())
    }
}

impl FromStr for Phase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Phase::ALL.into_iter().find(|p| p.convention().name() == s).ok_or_else(|| {
            format!("unknown phase convention '{s}' (expected boundary-normalized, ponzano-regge or none)")
        })
    }
}
