//! Exact polynomial arithmetic and rational linear algebra.

mod linalg;
mod poly;

pub use linalg::{exact_rank, integer_rank, solve_in_span, ExactMatrix, SpanSolution};
pub use poly::{monomial_box, BivarPoly, Monomial};
