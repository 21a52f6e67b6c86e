//! Crate-wide error type.
//!
//! Errors fall into three groups:
//!
//! - invalid arguments (zero/empty inputs, values out of range),
//! - structurally invalid mathematical objects (`NotNumerical`, `NotCoprime`),
//! - violated exactness guarantees (`NonZeroRemainder`), which signal that an
//!   identity the caller relied on does not hold for the given operands.
//!
//! Internal arithmetic consistency checks (e.g. a power-sum formula producing
//! a non-integer) panic instead: they indicate a bug, not bad input.

use thiserror::Error;

/// Error type shared by all modules of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument that must be positive was zero.
    #[error("{what} must be positive")]
    ZeroArgument {
        /// Which argument was zero.
        what: &'static str,
    },

    /// `extended_gcd(0, 0)` has no well-defined Bezout data.
    #[error("extended_gcd(0, 0) is undefined")]
    ExtendedGcdZeroZero,

    /// A generator list was empty.
    #[error("generator list must be non-empty")]
    EmptyGenerators,

    /// The generators have gcd > 1, so they generate a proper sub-monoid of
    /// a scaled copy of the naturals, not a numerical semigroup.
    #[error("generators {generators:?} have gcd {gcd} > 1; not a numerical semigroup")]
    NotNumerical {
        /// The offending generator list (sorted, deduplicated).
        generators: Vec<u64>,
        /// Their greatest common divisor.
        gcd: u64,
    },

    /// Two integers that must be coprime are not.
    #[error("{p} and {q} are not coprime (gcd {gcd})")]
    NotCoprime {
        /// First operand.
        p: u64,
        /// Second operand.
        q: u64,
        /// Their gcd.
        gcd: u64,
    },

    /// An element of a coprime base set was ≤ 1.
    #[error("base set element {value} must exceed 1")]
    BaseElementTooSmall {
        /// The offending element.
        value: u64,
    },

    /// Polynomial division left a non-zero remainder.  This is never silently
    /// truncated: it means the divisibility the caller asserted is false.
    #[error("polynomial division has non-zero remainder (divisor does not divide dividend)")]
    NonZeroRemainder,

    /// An operation that requires a non-zero polynomial received zero.
    #[error("{op} is undefined for the zero polynomial")]
    ZeroPolynomial {
        /// Which operation was attempted.
        op: &'static str,
    },

    /// The requested Apery anchor is not a member of the semigroup.
    #[error("apery anchor {m} is not a non-zero element of the semigroup")]
    AperyAnchorNotMember {
        /// The rejected anchor.
        m: u64,
    },

    /// A blocks decomposition was requested for the full semigroup of
    /// non-negative integers, which has no gaps and no finite element blocks.
    #[error("block decomposition is undefined for the semigroup of all non-negative integers")]
    NoGaps,

    /// An index was outside its documented range.
    #[error("{what} = {value} is outside the valid range {range}")]
    OutOfRange {
        /// Which value was out of range.
        what: &'static str,
        /// The rejected value.
        value: i64,
        /// Human-readable description of the valid range.
        range: String,
    },

    /// A lookup table handed to a summation identity does not cover every
    /// argument the identity needs.
    #[error("function table is missing required argument {missing}")]
    IncompleteTable {
        /// The first required argument not covered by the table.
        missing: u64,
    },

    /// A computation was refused because it exceeds a documented size bound.
    #[error("resource limit exceeded: {what}")]
    ResourceLimit {
        /// Description of the violated bound.
        what: String,
    },
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
