//! Exact recoupling coefficients.
//!
//! The 6j symbol has two independent evaluations. [`six_j_racah`] writes it
//! as a Racah polynomial in `x(s) = s(s+1)` with `s = j23`, times the square
//! root of weight over norm; [`six_j_oracle`] is Racah's classical single sum.
//! Labels are first moved by the 144-element symmetry group (tetrahedral and
//! Regge) to the orientation where the parameter map applies, choosing the
//! lexicographically smallest doubled tuple.
//!
//! Selection rules are semantics, not failures: inadmissible labels give an
//! exact zero everywhere in this module.

mod composite;
mod labels;
mod sixj;
mod symmetry;
mod threej;

pub use composite::{
    nine_j, nine_j_with, recoupling_u, twelve_j_as_multipoly, twelve_j_second_kind, twelve_j_second_kind_with,
    RacahFactor, TwelveJExpansion, TwelveJTerm,
};
pub use labels::{NineJLabels, RacahParams, SixJLabels, TwelveJLabels};
pub use sixj::{param_map, racah_cache_len, six_j, six_j_oracle, six_j_racah, ParamMapError, SixJPath};
pub use symmetry::{canonical_orientation, is_racah_oriented, orbit};
pub use threej::{clebsch_gordan, three_j};
