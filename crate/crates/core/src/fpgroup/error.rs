use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown generator `{name}` at byte {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("expected {expected} generator images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("permutation images act on different point sets ({0} and {1} points)")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("overflow: more than {limit} {what}")]
    Overflow { what: &'static str, limit: usize },
    #[error("relator {index} does not map to the identity")]
    NotAHomomorphism { index: usize },
    #[error("coset table is not closed")]
    TableNotClosed,
    #[error("triangle group parameters must be at least 2, got ({0}, {1}, {2})")]
    TriangleParameter(i64, i64, i64),
}
