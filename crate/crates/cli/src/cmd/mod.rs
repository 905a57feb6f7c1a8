pub mod asym;
pub mod poly;
pub mod statesum;
pub mod wigner;
