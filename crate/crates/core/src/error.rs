use thiserror::Error;

/// Errors raised while reading field-element or polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
}

impl ParseError {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0} is not a supported prime (need a prime 2 <= p <= 251)")]
    InvalidPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("mismatched characteristic: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("invalid place: {0}")]
    InvalidPlace(String),
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: String,
        bound: String,
    },
    #[error("ideal is not stable under the derivations D^(i), 1 <= i < p^m ({witnesses} witness(es))")]
    NotDClosed { witnesses: usize },
    #[error("{0} is not an S-unit for the given place set")]
    NotAnSUnit(String),
    #[error("element is not a unit at the place {0}")]
    NotAUnitAt(String),
    #[error("modulus {m} must be coprime to the characteristic {p}")]
    ModulusNotPrimeToP { m: u64, p: u32 },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
