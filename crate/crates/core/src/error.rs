use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("cell ({x},{y}) is not in the diagram {shape:?}")]
    CellOutOfShape {
        x: usize,
        y: usize,
        shape: Vec<usize>,
    },

    #[error("evaluation is not a rational integer: {0}")]
    NonIntegerValue(String),

    #[error("variable {0} has no root of unity assignment")]
    UnboundVariable(char),

    #[error("invalid root assignment: {0}")]
    InvalidRootAssignment(String),

    #[error("inconsistent Schur solve for mu = {mu:?}: {reason}")]
    InconsistentSystem { mu: Vec<usize>, reason: String },

    #[error("{a} is not a cyclic symmetry order of {nu:?}")]
    InvalidSymmetry { nu: Vec<usize>, a: usize },

    #[error("size {size} exceeds the configured bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("Hilbert series mismatch for mu = {mu:?}: module gives {hilbert}, expansion gives {expansion}")]
    Mismatch {
        mu: Vec<usize>,
        hilbert: String,
        expansion: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
