//! Exact computation of matroid valuative invariants.
//!
//! Matroids are basis systems on `{1..n}` stored as bitmasks. On top of
//! them the crate computes Tutte polynomials and G-invariants, tests
//! membership in the excluded-minor classes (elementary split, class N,
//! uniform or minimal with loops and coloops), and writes Tutte
//! polynomials as unique integer combinations over three bases.

pub mod algebra;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod invariants;
pub mod matroid;
pub mod verify;

pub use algebra::{BivarPoly, ExactMatrix, SpanSolution};
pub use decomposition::{decompose, invariant_rank, Decomposition, Invariant, RankTable};
pub use error::{AlgebraError, DecompositionError, FamilyError, InvariantError, MatroidError};
pub use families::{classify, family, ClassReport, FamilyKind, MatroidDescriptor};
pub use invariants::{g_invariant, tutte, GInvariantVector};
pub use matroid::{CanonicalForm, Matroid, SubsetMask};
