use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("prime {0} is outside the supported range (< 2^61)")]
    PrimeTooLarge(u64),
    #[error("modulus is not irreducible over F_{p}")]
    NotIrreducible { p: u64 },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("curve is not separable (discriminant vanishes)")]
    NonSeparable,
    #[error("expected characteristic {expected}, domain has characteristic {actual}")]
    WrongCharacteristic { expected: u64, actual: u64 },
    #[error("cannot reduce modulo {p}: {reason}")]
    BadReduction { p: u64, reason: String },
    #[error("expected a monic sextic, got degree {0:?}")]
    NotMonicSextic(Option<usize>),
    #[error("brumer identity violated: {0}")]
    IdentityViolation(String),
    #[error("epsilon does not satisfy z^4+1 = z^3+z-1 = 0")]
    BadEpsilon,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} does not divide exactly in the coefficient ring")]
    InexactDivision(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("only {found} good specializations available, {requested} requested")]
    ExhaustedSpecializations { found: usize, requested: usize },
    #[error("unexpected G-stable algebra of dimension {0}")]
    UnexpectedAlgebra(usize),
    #[error("fixture mismatch in table {table}: {detail}")]
    FixtureMismatch { table: u8, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
