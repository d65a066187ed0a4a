//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

use crate::subset::SubsetMask;

/// Errors returned by fallible operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An exhaustive operation was asked to enumerate too large a ground set.
    SizeLimit { size: usize, limit: usize },
    /// A constructor was given inconsistent parameters.
    InvalidParameters(String),
    /// An explicit base list fails validation.
    InvalidBases(BasesViolation),
    /// A stated precondition of the operation does not hold for this input
    /// (validity range, connectivity, undefined structural quantity, ...).
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeLimit { size, limit } => {
                write!(f, "ground set of size {size} exceeds exhaustive limit {limit}")
            }
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidBases(v) => write!(f, "invalid bases: {v}"),
            Error::Precondition(msg) => write!(f, "precondition not met: {msg}"),
        }
    }
}

/// Certificate describing why a base list is not the base set of a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasesViolation {
    Empty,
    OutOfGround { base: SubsetMask, ground_size: usize },
    UnequalCardinality { first: SubsetMask, second: SubsetMask },
    /// `B1 - e + f` is a base for no `f` in `B2 - B1`.
    ExchangeFailure { from: SubsetMask, to: SubsetMask, removed: usize },
}

impl fmt::Display for BasesViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasesViolation::Empty => write!(f, "base list is empty"),
            BasesViolation::OutOfGround { base, ground_size } => {
                write!(f, "base {base} uses elements outside the {ground_size}-element ground set")
            }
            BasesViolation::UnequalCardinality { first, second } => {
                write!(f, "bases {first} and {second} have different cardinalities")
            }
            BasesViolation::ExchangeFailure { from, to, removed } => write!(
                f,
                "exchange axiom fails for bases {from} and {to}: no replacement for element {removed}"
            ),
        }
    }
}

impl core::error::Error for Error {}
