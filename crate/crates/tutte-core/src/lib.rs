//! Exact computation of Tutte polynomials for matroids and multigraphs,
//! together with the structural objects their coefficients count: flats,
//! hyperplanes, circuits, cocircuits, spanning/independent-set profiles,
//! and minimal edge cuts.
//!
//! Everything here is exact integer arithmetic over small ordered ground
//! sets. Exhaustive operations iterate all `2^n` subsets and refuse ground
//! sets larger than [`EXHAUSTIVE_LIMIT`]; the deletion–contraction engine
//! has no such bound and is the path for larger graphs.
//!
//! The crate is `no_std` (it allocates, but performs no IO); parsing, file
//! formats and the command-line front end live in the companion `tutte-cli`
//! crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod canon;
pub mod catalog;
pub mod coeffs;
pub mod error;
pub mod graph;
pub mod matroid;
pub mod poly;
pub mod structure;
pub mod subset;
pub mod tutte;
pub mod verify;

pub use error::Error;
pub use graph::{CutReport, Multigraph};
pub use matroid::{GroundSet, Matroid};
pub use poly::{BivariatePolynomial, UnivariatePolynomial};
pub use subset::SubsetMask;

/// Hard cap on the ground-set size of exhaustive (all-subsets) operations.
///
/// Front ends are expected to apply their own, usually lower, cap; this is
/// the limit past which the crate itself refuses to enumerate.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// A check that either passes or carries a counterexample.
///
/// Distinct from `Result`: a failed check is a meaningful outcome of a
/// successfully executed verification, not an execution error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<C> {
    Pass,
    Fail(C),
}

impl<C> Verdict<C> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn counterexample(&self) -> Option<&C> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(c) => Some(c),
        }
    }
}
