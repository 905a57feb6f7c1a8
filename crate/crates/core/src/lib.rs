//! Exact angular-momentum recoupling and discrete quantum geometry.
//!
//! The crate is layered bottom-up:
//!
//! * [`arith`]: doubled-integer spins, canonical radicals `q·√r` and
//!   certified float conversion.
//! * [`orthopoly`]: Hahn, Kravchuk, Meixner, Charlier, Racah and dual Hahn
//!   polynomials with their weights, norms and difference equations.
//! * [`wigner`]: 3j, Clebsch-Gordan, 6j (through Racah polynomials and through
//!   an independent single-sum formula), 9j and 12j symbols.
//! * [`asymptotics`]: Wigner little-d functions and semiclassical 6j formulas.
//! * [`statesum`]: the Ponzano-Regge state sum on small triangulations.
//!
//! With the default `parallel` feature the heavy sweeps run on rayon; without
//! it every entry point falls back to plain sequential iteration and produces
//! identical results.

pub mod arith;
pub mod asymptotics;
pub mod orthopoly;
pub mod par;
pub mod statesum;
pub mod wigner;

pub use arith::{ExactRadical, HalfInt, RadicalSum, Rational, Spin};
