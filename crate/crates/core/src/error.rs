//! Crate-wide error type.
//!
//! Every fallible operation in the crate returns [`Result`].  Variants carry
//! enough context (offending indices, expected vs. actual sizes) for callers
//! to report precise diagnostics without re-deriving them.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All error conditions surfaced by this crate.
#[derive(Debug)]
pub enum Error {
    /// The claimed characteristic is not a prime number.
    NotPrime(u64),
    /// The field extension degree must be at least 1.
    ZeroDegree,
    /// `p^e` exceeds the supported field size.
    FieldTooLarge { p: u64, e: usize },
    /// A supplied modulus is unusable; the message states why.
    InvalidModulus(String),
    /// An element index or coefficient lies outside the field.
    ElementOutOfRange { value: u64, bound: u64 },
    /// A coefficient vector has the wrong length for the field.
    CoefficientLength { expected: usize, actual: usize },
    /// Division by zero inside a field or polynomial ring.
    DivisionByZero,
    /// The two fields do not form a subfield pair.
    IncompatibleExtension(String),
    /// An element of the large field does not lie in the embedded subfield.
    NotInSubfield,
    /// The proposed basis elements are linearly dependent over the base field.
    NotABasis,
    /// Generic shape mismatch between matrices or vectors.
    DimensionMismatch(String),
    /// A matrix expected to have full row rank does not.
    RankDeficient { expected: usize, actual: usize },
    /// A block-index set must be nonempty.
    EmptyBlockSet,
    /// A block index exceeds the number of blocks.
    BlockIndexOutOfRange { index: usize, n: usize },
    /// The column count is not divisible by the block width.
    ColumnsNotDivisible { cols: usize, r: usize },
    /// An enumeration would exceed the configured budget.
    BudgetExceeded(String),
    /// The minimum distance of the zero code is undefined.
    ZeroCodeDistance,
    /// Classification requires both the code and its dual to be nonzero.
    DegenerateDimension { k: usize, rn: usize },
    /// A permutation vector is not a bijection on `{0, …, n-1}`.
    InvalidPermutation,
    /// A matrix that must be invertible is singular.
    Singular,
    /// A per-block matrix of an isometry is singular.
    SingularBlock(usize),
    /// Two moduli of a polynomial ideal code share a common factor.
    NonCoprimeModuli { i: usize, j: usize },
    /// A modulus has the wrong degree for the block width.
    WrongModulusDegree { index: usize, expected: usize, actual: usize },
    /// The field is too small for the requested number of distinct points.
    FieldTooSmall { needed: u64, order: u64 },
    /// The requested subcode dimension lies outside the admissible open window.
    SubcodeWindow { lo: usize, hi: usize, requested: usize },
    /// The operation requires a QMDS input code.
    NotQmds,
    /// A bound's hypothesis is violated; the message states which one.
    InapplicableBound(String),
    /// A parameter lies outside its documented range.
    OutOfRange(String),
    /// The closed-form weight distribution has a negative entry, so no code
    /// with these parameters can realize it.  Carries the first offending
    /// weight and the computed (negative) value as a decimal string.
    NegativeCount { j: usize, value: String },
    /// A distribution head has the wrong number of entries.
    HeadLengthMismatch { expected: usize, actual: usize },
    /// Two objects that must share parameters (field, n, r, k) do not.
    ParamMismatch(String),
    /// The subspaces of a pseudo arc do not span the ambient space.
    DegenerateArc,
    /// A parity-check block has column rank below the block width.
    BlockRankDeficient { index: usize },
    /// The dual dimension is too small to host rank-`r` blocks.
    DualTooSmall { m: usize, r: usize },
    /// Malformed JSON or a JSON value of the wrong shape.
    Json(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroDegree => write!(f, "extension degree must be at least 1"),
            Error::FieldTooLarge { p, e } => {
                write!(f, "field of order {p}^{e} exceeds the supported size")
            }
            Error::InvalidModulus(msg) => write!(f, "invalid modulus: {msg}"),
            Error::ElementOutOfRange { value, bound } => {
                write!(f, "value {value} out of range (must be below {bound})")
            }
            Error::CoefficientLength { expected, actual } => {
                write!(f, "coefficient vector has length {actual}, expected {expected}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::IncompatibleExtension(msg) => write!(f, "incompatible extension: {msg}"),
            Error::NotInSubfield => write!(f, "element does not lie in the embedded subfield"),
            Error::NotABasis => write!(f, "elements are not a basis over the base field"),
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::RankDeficient { expected, actual } => {
                write!(f, "matrix has rank {actual}, expected full rank {expected}")
            }
            Error::EmptyBlockSet => write!(f, "block-index set must be nonempty"),
            Error::BlockIndexOutOfRange { index, n } => {
                write!(f, "block index {index} out of range for {n} blocks")
            }
            Error::ColumnsNotDivisible { cols, r } => {
                write!(f, "{cols} columns cannot be split into blocks of width {r}")
            }
            Error::BudgetExceeded(msg) => write!(f, "enumeration budget exceeded: {msg}"),
            Error::ZeroCodeDistance => {
                write!(f, "the zero code has no nonzero word; its distance is undefined")
            }
            Error::DegenerateDimension { k, rn } => {
                write!(f, "dimension {k} is degenerate for length {rn}: need 1 <= k <= {}", rn - 1)
            }
            Error::InvalidPermutation => write!(f, "block permutation is not a bijection"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::SingularBlock(i) => write!(f, "isometry block {i} is singular"),
            Error::NonCoprimeModuli { i, j } => {
                write!(f, "moduli {i} and {j} share a nontrivial common factor")
            }
            Error::WrongModulusDegree { index, expected, actual } => {
                write!(f, "modulus {index} has degree {actual}, expected {expected}")
            }
            Error::FieldTooSmall { needed, order } => {
                write!(f, "field of order {order} is too small: {needed} distinct points needed")
            }
            Error::SubcodeWindow { lo, hi, requested } => {
                write!(f, "subcode dimension {requested} outside the open window ({lo}, {hi})")
            }
            Error::NotQmds => write!(f, "input code is not QMDS"),
            Error::InapplicableBound(msg) => write!(f, "bound hypothesis not met: {msg}"),
            Error::OutOfRange(msg) => write!(f, "parameter out of range: {msg}"),
            Error::NegativeCount { j, value } => {
                write!(f, "closed-form count A_{j} = {value} is negative; no such distribution")
            }
            Error::HeadLengthMismatch { expected, actual } => {
                write!(f, "distribution head has {actual} entries, expected {expected}")
            }
            Error::ParamMismatch(msg) => write!(f, "parameter mismatch: {msg}"),
            Error::DegenerateArc => write!(f, "subspaces do not span the ambient space"),
            Error::BlockRankDeficient { index } => {
                write!(f, "parity-check block {index} has column rank below the block width")
            }
            Error::DualTooSmall { m, r } => {
                write!(f, "dual dimension {m} cannot host blocks of rank {r}")
            }
            Error::Json(msg) => write!(f, "malformed JSON: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
