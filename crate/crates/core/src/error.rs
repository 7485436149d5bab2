//! Error types for the whole crate.

use thiserror::Error;

/// A defect found while validating a multiplication table.
///
/// `validate` reports the first axiom it finds violated, with enough context
/// to locate the offending entry.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableDefect {
    #[error("table is not {order}x{order} (row {row} has length {len})")]
    BadShape { order: usize, row: usize, len: usize },
    #[error("entry table[{row}][{col}] = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: u32 },
    #[error("identity index {identity} is out of range")]
    IdentityOutOfRange { identity: u32 },
    #[error("row {row} is not a permutation (duplicate value {value})")]
    RowNotPermutation { row: u32, value: u32 },
    #[error("column {col} is not a permutation (duplicate value {value})")]
    ColumnNotPermutation { col: u32, value: u32 },
    #[error("{identity} is not a two-sided identity (fails at {witness})")]
    IdentityNotTwoSided { identity: u32, witness: u32 },
    #[error("element {element} has no inverse")]
    MissingInverse { element: u32 },
    #[error("associativity fails on the triple ({x}, {y}, {z})")]
    NotAssociative { x: u32, y: u32, z: u32 },
}

/// Crate-wide error type.
#[derive(Clone, Debug, Error)]
pub enum Error {
    /// A constructor was asked for a group larger than the configured guard.
    #[error("group order {requested} exceeds the configured maximum {max}")]
    OrderLimit { requested: u64, max: u64 },
    /// Lattice enumeration found more subgroups than the configured guard.
    #[error("subgroup count exceeds the configured maximum {max}")]
    SubgroupLimit { max: usize },
    /// A parameter that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// A partition was malformed (empty, zero part, or not weakly decreasing).
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// A constructor precondition failed; the message names the condition.
    #[error("{0}")]
    Precondition(String),
    /// A Cayley table failed group-axiom validation.
    #[error("invalid group table: {0}")]
    InvalidTable(#[from] TableDefect),
    /// A serialized document could not be parsed.
    #[error("malformed input: {0}")]
    Malformed(String),
    /// A zeta series violated its invariants (keys, normalization).
    #[error("invalid zeta series: {0}")]
    InvalidSeries(String),
    /// `product` was called on series of non-coprime orders.
    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    /// A degree profile did not come from any partition.
    #[error("inconsistent degree profile: {0}")]
    InconsistentProfile(String),
}
