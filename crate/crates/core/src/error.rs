use thiserror::Error;

/// Errors surfaced by constructors and size-guarded operations.
///
/// Algorithms that merely answer a question (rank, connectivity, searches)
/// never fail; errors are reserved for invalid inputs and exceeded caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("modulus {0} is not a prime at most 251")]
    InvalidModulus(u32),
    #[error("matrix dimensions invalid: {0}")]
    InvalidDimensions(String),
    #[error("ground set has {0} elements, cap is 24")]
    TooManyElements(usize),
    #[error("labels invalid: {0}")]
    InvalidLabels(String),
    #[error("matroids are over different fields (GF({0}) vs GF({1}))")]
    FieldMismatch(u8, u8),
    #[error("2-sum basepoint '{0}' is a loop or a coloop")]
    InvalidBasepoint(String),
    #[error("isomorphism search supports at most 12 elements, got {0}")]
    IsomorphismTooLarge(usize),
    #[error("uniform matroid needs 0 <= rank <= size, got rank {0}, size {1}")]
    InvalidUniform(u32, u32),
    #[error("GF({0}) has too few elements for {1} Vandermonde columns")]
    FieldTooSmall(u8, u32),
    #[error("census parameters out of range: {0}")]
    CensusParams(String),
    #[error("census file header mismatch: existing '{existing}', requested '{requested}'")]
    CensusHeaderMismatch { existing: String, requested: String },
    #[error("census record for key {0} does not match the line already stored")]
    CensusRecordConflict(String),
    #[error("census file is malformed: {0}")]
    CensusFile(String),
    #[error("element index {0} out of range for ground set of size {1}")]
    ElementOutOfRange(usize, usize),
    #[error("verifier requires a binary matroid, got GF({0})")]
    NotBinary(u8),
    #[error("{0} is not a triangle of {1}")]
    NotATriangle(String, String),
    #[error("io error: {0}")]
    Io(String),
}
