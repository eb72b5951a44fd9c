use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("vector is not in the submodule")]
    NotInSubmodule,

    #[error("map does not respect the presentations: {0}")]
    IllFormedMap(String),

    #[error("composition of the maps is not zero")]
    NotAComplex,

    #[error("module is not graded: {0}")]
    NotGraded(String),

    #[error("singularity is not isolated (P/J_f has infinite length)")]
    NonIsolated,

    #[error("no maximal Cohen-Macaulay certificate after {0} syzygy steps")]
    NoStabilization(usize),

    #[error("could not lift f*I through the presentation: {0}")]
    LiftFailed(String),

    #[error("homology of the stable complex has infinite length")]
    InfiniteLength,

    #[error("cannot divide by this series: {0}")]
    DivisionByZeroSeries(String),

    #[error("expected a simple pole at t=1, found pole order {0}")]
    WrongPoleOrder(i64),

    #[error("V(I+J) is not the origin")]
    NotIsolatedIntersection,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
