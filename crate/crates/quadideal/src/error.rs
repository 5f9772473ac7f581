//! Error type shared across the crate.

use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {reason}")]
    InvalidRing { reason: String },

    #[error("ideals live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("invalid ideal triple ({a}, {b}, {c}): {violation}")]
    InvalidIdeal { a: BigInt, b: BigInt, c: BigInt, violation: String },

    #[error("all generators are zero; the zero ideal has no HNF representation")]
    ZeroIdeal,

    #[error("{n} is not a rational prime")]
    NotPrime { n: BigInt },

    #[error("prime {p} divides the conductor {f}; split it by norm enumeration instead")]
    ConductorPrime { p: BigInt, f: BigInt },

    #[error("no prime ideal above {p} contains {ideal}")]
    NoContainingPrime { p: BigInt, ideal: String },

    #[error("containment-division violation: {i} is contained in {j} but {j} does not divide {i}")]
    NotDivisible { i: String, j: String },

    #[error("factorization exceeded {max_steps} steps without reaching the unit ideal")]
    ChainExceeded { max_steps: usize },

    #[error("arithmetic bug: {details}")]
    InternalArithmeticBug { details: String },

    #[error("parse error at position {position}: {message}")]
    ParseError { position: usize, message: String },
}

impl Error {
    /// Stable machine-readable code, used by the CLI's structured output
    /// and error reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidRing { .. } => "invalid_ring",
            Error::RingMismatch { .. } => "ring_mismatch",
            Error::InvalidIdeal { .. } => "invalid_ideal",
            Error::ZeroIdeal => "zero_ideal",
            Error::NotPrime { .. } => "not_prime",
            Error::ConductorPrime { .. } => "conductor_prime",
            Error::NoContainingPrime { .. } => "no_containing_prime",
            Error::NotDivisible { .. } => "not_divisible",
            Error::ChainExceeded { .. } => "chain_exceeded",
            Error::InternalArithmeticBug { .. } => "internal_arithmetic_bug",
            Error::ParseError { .. } => "parse_error",
        }
    }
}
