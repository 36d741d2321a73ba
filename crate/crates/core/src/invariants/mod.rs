//! Tutte polynomial, G-invariant, and the coefficient checks built on them.

mod checks;
mod ginv;
mod tutte;

pub use checks::{brylawski_check, brylawski_residual, merino_welsh_check};
pub use ginv::{g_invariant, g_keys, GInvariantVector, GINV_CAP};
pub use tutte::{tutte, tutte_dc, TUTTE_CAP};
