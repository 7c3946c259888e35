use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("breadth undefined for zero polynomial")]
    ZeroBreadth,

    #[error("cannot parse Laurent polynomial {0:?}")]
    ParsePolynomial(String),

    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("ragged matrix: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },

    #[error("odd-sized matrix ({0}x{0})")]
    OddSize(usize),

    #[error("skew part not unimodular: det(M - M^T) = {0}")]
    SkewNotUnimodular(BigInt),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("transform is not unimodular: determinant {0}")]
    NotUnimodular(BigInt),

    #[error("form is not skew-symmetric")]
    NotSkew,

    #[error("matrix is nondegenerate, nothing to peel")]
    Nondegenerate,

    #[error("reduction invariant violated: {0}")]
    ReductionInvariant(String),

    #[error("empty braid word")]
    EmptyBraid,

    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("unparseable braid token {0:?}")]
    BraidToken(String),

    #[error("closure is a link, not a knot ({0} components)")]
    LinkClosure(usize),

    #[error("disconnected diagram: generator {0} does not occur")]
    Disconnected(usize),

    #[error("malformed JSON input: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
