//! Error types, one enum per module.

use thiserror::Error;

use crate::matroid::SubsetMask;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("matroid has no bases")]
    EmptyBases,
    #[error("bases have mixed cardinalities ({first} and {other})")]
    MixedCardinality { first: usize, other: usize },
    #[error("basis {mask:?} uses elements outside the ground set of size {n}")]
    OutOfGroundSet { mask: SubsetMask, n: usize },
    #[error("basis exchange fails for B1={b1}, B2={b2}, e={e}")]
    ExchangeViolation {
        b1: SubsetMask,
        b2: SubsetMask,
        e: usize,
    },
    #[error("contraction set {contract} and deletion set {delete} overlap")]
    OverlappingSets {
        contract: SubsetMask,
        delete: SubsetMask,
    },
    #[error("{what} is capped at n <= {cap}, got n = {n}")]
    SizeCapExceeded {
        what: &'static str,
        cap: usize,
        n: usize,
    },
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("malformed matroid file, line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed polynomial: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{what} is capped at n <= {cap}, got n = {n}")]
    SizeCapExceeded {
        what: &'static str,
        cap: usize,
        n: usize,
    },
    #[error("matroid has a loop or a coloop")]
    HasLoopOrColoop,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("inadmissible parameters: {0}")]
    InadmissibleParameters(String),
    #[error("subset {0} is not stressed")]
    NotStressed(SubsetMask),
    #[error("stressed subset {0} has an empty cusp")]
    EmptyCusp(SubsetMask),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no closed form for descriptor `{0}`")]
    UnsupportedShape(String),
    #[error("matroid is not elementary split")]
    NotElementarySplit,
    #[error("malformed descriptor: {0}")]
    Parse(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("matroids come from different strata: ({0}, {1}) vs ({2}, {3})")]
    MixedStratum(usize, usize, usize, usize),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("{what} is capped at n <= {cap}, got n = {n}")]
    SizeCapExceeded {
        what: &'static str,
        cap: usize,
        n: usize,
    },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
