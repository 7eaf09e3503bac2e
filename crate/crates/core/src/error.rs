use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Discriminant is a square or not congruent to 0 or 1 mod 4.
    InvalidDiscriminant(String),
    /// The operation needs a definite norm form (negative discriminant).
    Unsupported(&'static str),
    ZeroElement,
    ZeroIdeal,
    ZeroDivisor,
    BothZero,
    /// Sublattice containment required by the operation does not hold.
    ContainmentViolation,
    /// The order is not integrally closed, so the requested equivalence is not available.
    NotIntegrallyClosed,
    /// Ideals or elements from different orders were combined.
    OrderMismatch,
    /// An internal cross-check failed. Always a bug.
    Inconsistent(&'static str),
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDiscriminant(d) => write!(f, "invalid discriminant {d}"),
            Error::Unsupported(why) => write!(f, "unsupported: {why}"),
            Error::ZeroElement => f.write_str("element must be nonzero"),
            Error::ZeroIdeal => f.write_str("ideal must be nonzero"),
            Error::ZeroDivisor => f.write_str("division by zero"),
            Error::BothZero => f.write_str("gcd of two zero polynomials"),
            Error::ContainmentViolation => f.write_str("sublattice is not contained in lattice"),
            Error::NotIntegrallyClosed => f.write_str("order is not integrally closed"),
            Error::OrderMismatch => f.write_str("operands belong to different orders"),
            Error::Inconsistent(what) => write!(f, "internal consistency check failed: {what}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
