//! Semi-skyline augmented fillings and their tableau correspondences.
//!
//! A *semi-skyline augmented filling* (SSAF) is an assignment of positive
//! integers to the column diagram of a weak composition, sitting on a basement
//! row that holds `1..=m`, such that no entry exceeds the entry below it and
//! every two-column triple of cells is inverted. These fillings refine
//! semi-standard Young tableaux: summing one monomial per filling over all
//! rearrangements of a partition reproduces the Schur polynomial, and the
//! crate exists to compute and verify that decomposition exactly.
//!
//! The pieces:
//!
//! * [`shapes`] — weak compositions, partitions, rearrangement sets, and the
//!   reverse dominance order;
//! * [`fillings`] — augmented fillings and their statistics: reading order,
//!   content, attacking pairs, descents, `maj`, triple classification,
//!   `inv`/`coinv`, SSAF validation, ASCII rendering;
//! * [`tableaux`] — semi-standard and reverse semi-standard Young tableaux,
//!   column words, reverse Schensted insertion, standardization, Knuth moves;
//! * [`maps`] — the row-set bijection between SSAFs and reverse tableaux and
//!   the scanning/bumping insertion of a letter into an SSAF (with its exact
//!   inverse deletion);
//! * [`bijections`] — the weight-preserving bijection between tableaux and
//!   SSAFs, the correspondence sending an ℕ-matrix to a pair of SSAFs, and
//!   skylining (standardization of a filling);
//! * [`polyspace`] — exhaustive enumeration and exact sparse-polynomial
//!   arithmetic: per-shape polynomials, Schur polynomials, filling counts by
//!   content, and triangular transition matrices;
//! * [`verify`] — the exhaustive desk-scale sweeps behind `skyline verify`.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from any number of threads.

pub mod bijections;
mod error;
pub mod fillings;
pub mod maps;
pub mod polyspace;
pub mod shapes;
pub mod tableaux;
#[cfg(test)]
mod testsupport;
pub mod verify;

pub use bijections::{NatMatrix, TwoLineArray};
pub use error::Error;
pub use fillings::{AugmentedFilling, Cell, Ssaf, TripleKind, TripleRecord};
pub use maps::InsertionTrace;
pub use polyspace::{SparsePolynomial, TransitionMatrix};
pub use shapes::{Partition, WeakComposition};
pub use tableaux::{ReverseSsyt, Ssyt, Word};
