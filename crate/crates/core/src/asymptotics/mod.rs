//! Large-spin approximations checked against exact values: the Wigner
//! d-function formula, the small-`j12` reduction of the 6j symbol to a
//! d-function, and the semiclassical tetrahedron formula.

mod dfunc;
mod geometry;
mod sixj;
mod sweeps;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{HalfInt, Spin};
use crate::wigner::SixJLabels;

pub use dfunc::{wigner_d_asymptotic, wigner_d_exact};
pub use geometry::{tet_geometry, TetGeometry, EDGE_VERTICES, FACES};
pub use sixj::{eq1_cos_theta, six_j_asymptotic_eq1, six_j_ponzano_regge};
pub use sweeps::{
    d_sweep, eq1_window, equilateral_oscillation_width, pr_equilateral_window, ComparisonRow, DInputs, Eq1Window,
    PrWindow,
};

/// Below this value of `sin θ` an angle counts as near-singular.
pub const SIN_THRESHOLD: f64 = 0.1;
/// A spin counts as large when it is at least this many times the relevant
/// small quantum number.
pub const SPIN_RATIO: f64 = 10.0;

/// Which validity conditions of an approximation failed. All `false` means
/// the inputs sit inside the regime the formula is meant for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RegimeFlags {
    pub near_singular: bool,
    pub small_spin: bool,
    pub large_coupling: bool,
}

impl RegimeFlags {
    pub fn any(&self) -> bool {
        self.near_singular || self.small_spin || self.large_coupling
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct AsymptoticValue {
    pub value: f64,
    pub flags: RegimeFlags,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("edge slot {slot} has length {length}, which is not a positive number")]
    BadLength { slot: usize, length: f64 },
    #[error("face {face:?} with lengths {lengths:?} violates the triangle inequality")]
    FaceInequality { face: [usize; 3], lengths: [f64; 3] },
    #[error("lengths do not span a tetrahedron (Cayley-Menger determinant {cayley_menger:e})")]
    Degenerate { cayley_menger: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AsymptoticError {
    #[error("angle {theta} is outside the open interval (0, π)")]
    SingularAngle { theta: f64 },
    #[error("projections m = {m}, m' = {mp} need j = {j} strictly larger in magnitude and of matching parity")]
    ProjectionOutOfRange { j: Spin, m: HalfInt, mp: HalfInt },
    #[error("cos θ = {cos_theta} lies outside (-1, 1)")]
    ClassicallyForbidden { cos_theta: f64 },
    #[error("labels {0} are not admissible")]
    Inadmissible(SixJLabels),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
