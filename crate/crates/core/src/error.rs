use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("quiver has an oriented cycle through `{0}`")]
    CyclicQuiver(String),
    #[error("objects live over different quivers")]
    QuiverMismatch,
    #[error("not a module morphism: square at arrow `{0}` does not commute")]
    NotIntertwining(String),
    #[error("not a complex: d∘d ≠ 0 at degree {0}")]
    NotAComplex(i32),
    #[error("not a chain map: square at degree {0} does not commute")]
    NotAChainMap(i32),
    #[error("derived semantics unavailable: {0}")]
    DerivedSemantics(String),
    #[error("left square does not commute strictly")]
    NotStrictlyCommuting,
    #[error("kernel object `{0}` is not sent to a zero object")]
    KernelObjectNotKilled(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
