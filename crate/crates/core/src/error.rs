use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not irreducible over Z_{1}")]
    NotIrreducible(Vec<u32>, u32),
    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("operands belong to different fields or algebras")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd(n={n}, q={q}) != 1")]
    NotCoprime { n: usize, q: u64 },
    #[error("cyclic codes are defined over different idempotent bases")]
    BasisMismatch,
    #[error("Goursat data overlap: C{0} and C12 share idempotent(s) {1:?}")]
    OverlapViolation(u8, Vec<usize>),
    #[error("g is not a unit of C12: g*e_{0} = 0")]
    NotUnit(usize),
    #[error("wrong characteristic: {0}")]
    BadCharacteristic(String),
    #[error("equivalence violated at q={q}, n={n}: {detail}")]
    EquivalenceViolation { q: u64, n: usize, detail: String },
    #[error("x^n - 1 has {0} irreducible factors, more than the supported 64")]
    TooManyIdempotents(usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::NotIrreducible(..) => "NotIrreducible",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::SpecMismatch => "SpecMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::BasisMismatch => "BasisMismatch",
            Error::OverlapViolation(..) => "OverlapViolation",
            Error::NotUnit(_) => "NotUnit",
            Error::BadCharacteristic(_) => "BadCharacteristic",
            Error::EquivalenceViolation { .. } => "EquivalenceViolation",
            Error::TooManyIdempotents(_) => "TooManyIdempotents",
            Error::Invalid(_) => "Invalid",
            Error::Parse(_) => "Parse",
        }
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
