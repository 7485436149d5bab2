//! Exact-arithmetic toolkit for subgroup-counting zeta functions of finite
//! groups.
//!
//! For a finite group `G` of order `N`, the subgroup zeta function is the
//! Dirichlet polynomial
//!
//! ```text
//! ζ_G(s) = Σ_{H ≤ G} |H|^{-s} = Σ_{n | N} a_n(G) n^{-s},
//! ```
//!
//! where `a_n(G)` counts the subgroups of order `n`. Everything here is exact:
//! group elements are table indices, subgroup lattices are enumerated by
//! closure, and coefficients are arbitrary-precision integers. There is no
//! floating point anywhere.
//!
//! The crate has three layers:
//!
//! * **Groups and lattices** ([`group`], [`families`], [`lattice`]) — dense
//!   multiplication tables for cyclic, dihedral, quaternion, abelian,
//!   metacyclic, metabelian and Heisenberg groups (plus ingestion of raw
//!   Cayley tables), and exhaustive subgroup enumeration over bitsets. The
//!   lattice is the ground-truth oracle for every zeta computation.
//! * **Zeta series** ([`zeta`]) — coefficient maps keyed by divisors, the
//!   index-counting dual, coprime products, Euler factorization (which exists
//!   exactly for nilpotent groups), and plain/LaTeX/JSON/CSV rendering.
//! * **Symbolic abelian counts and recovery** ([`abelian`], [`recovery`]) —
//!   the subgroup-count polynomials `N_k(λ)` of a finite abelian p-group of
//!   type `λ` as exact integer polynomials in `p`, their leading terms and
//!   interval combinatorics, and the inverse direction: recovering `λ` from a
//!   zeta series or from the degree profile of its coefficients.

pub mod abelian;
mod arith;
mod bitset;
pub mod error;
pub mod families;
pub mod group;
pub mod lattice;
mod partition;
pub mod poly;
pub mod recovery;
pub mod zeta;

pub use bitset::ElementSet;
pub use error::Error;
pub use group::GroupTable;
pub use partition::Partition;

/// Resource guards shared by group constructors and lattice enumeration.
///
/// Constructors refuse to allocate a multiplication table for a group larger
/// than `max_order`, and [`lattice::all_subgroups`] aborts once the number of
/// distinct subgroups found exceeds `max_subgroups`. Both bounds exist to turn
/// runaway inputs (a direct product spec gone wild, an elementary abelian
/// group of huge rank) into clean errors instead of memory exhaustion.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Largest group order a constructor will build a table for.
    pub max_order: u64,
    /// Largest number of subgroups the enumerator will record.
    pub max_subgroups: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: 4096, max_subgroups: 2_000_000 }
    }
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
