//! Sums of binomial coefficients `C(x, d)`: finding representations with
//! distinct terms, and counting solutions exactly, both over the integers
//! and modulo prime powers.

mod count;
mod local;
mod represent;

pub use count::{
    asymptotic_probe, count_representations, BoundRule, CountSpec, ProbeRow, MAX_DISTINCT_VARIABLES, MAX_TABLE_TARGET,
};
pub use local::{binomial_residues, count_local, LocalCountSpec, MAX_LOCAL_MODULUS};
pub use represent::{represent, Representation};
