use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{e} does not fit the element encoding")]
    FieldTooLarge { p: u64, e: usize },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("zero has no multiplicative inverse or order")]
    ZeroElement,
    #[error("no square root of -1 in GF({p}^{e})")]
    NoSquareRootOfMinusOne { p: u64, e: usize },
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("no primitive {rn}-th root of unity theta with theta^{n} = lambda")]
    NoRootOfUnity { rn: u64, n: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("coefficient does not descend to the base field")]
    Descent,
    #[error("length {n} is not coprime to the characteristic {p}")]
    NotCoprime { n: u64, p: u64 },
    #[error("invalid coset context: {0}")]
    InvalidContext(String),
    #[error("{s} is not a unit modulo {modulus}")]
    NotAUnit { s: i64, modulus: u64 },
    #[error("residue set is not closed under multiplication by q")]
    NotClosed,
    #[error("multiplication by {s} does not preserve 1 + rZ modulo {modulus}")]
    ClassNotPreserved { s: u64, modulus: u64 },
    #[error("residue {0} is outside 1 + rZ_rn")]
    ResidueOutOfClass(u64),
    #[error("defining set is the full set (zero code)")]
    FullDefiningSet,
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator matrix rows are linearly dependent")]
    DependentRows,
    #[error("generator matrix is not in standard form [I | A]")]
    NotStandardForm,
    #[error("wrong characteristic for this construction: {0}")]
    WrongCharacteristic(String),
    #[error("the zero code has no generator matrix or minimum distance")]
    ZeroCode,
    #[error("polynomial does not divide x^n - lambda")]
    NotADivisor,
    #[error("computation refused: {0}")]
    BudgetExceeded(String),
    #[error("serialization: {0}")]
    Serialization(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("unknown example id {0:?}")]
    UnknownExample(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}
