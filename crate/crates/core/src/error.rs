use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a Lie algebra must have positive dimension")]
    ZeroDimension,

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("matrix {index} is not a derivation: Leibniz rule fails on (e{i}, e{j})")]
    NotADerivation { index: usize, i: usize, j: usize },

    #[error("derivation images {a} and {b} do not commute")]
    NonCommutingImages { a: usize, b: usize },

    #[error("gram matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("gram matrix is not positive definite (leading minor {minor} is not positive)")]
    NotPositiveDefinite { minor: usize },

    #[error("squared norm of basis vector {index} is not the square of a rational")]
    InexactSqrt { index: usize },

    #[error("vectors do not span a plane")]
    DegeneratePlane,

    #[error("the field E must be nonzero")]
    ZeroField,

    #[error("the field E is central")]
    CentralField,

    #[error("the field E does not lie in the SNP solution space")]
    NotInSnpSpace,

    #[error("inadmissible parameters for {family}: {reason}")]
    InadmissibleParams { family: String, reason: String },

    #[error("alternating form is degenerate")]
    DegenerateForm,

    #[error("alternating form must act on an even-dimensional space, got {0}")]
    OddDimension(usize),

    #[error("matrix is not antisymmetric at ({i}, {j})")]
    NotAlternating { i: usize, j: usize },

    #[error("the pair of forms does not map onto a two-dimensional space")]
    NotSurjective,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("index out of range: {0}")]
    Range(String),

    #[error("duplicate tensor term ({a}{b}{c})")]
    DuplicateTerm { a: usize, b: usize, c: usize },

    #[error("matrix is not a skew-symmetric derivation")]
    NotSkewDerivation,

    #[error("algebra is not unimodular")]
    NotUnimodular,

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("matrix is singular")]
    Singular,
}
