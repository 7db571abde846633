//! Finite soft topological spaces: soft-set algebra, topology validation,
//! covers and compactness, separation axioms, exhaustive and random search
//! for counterexamples, and a small CLI.
//!
//! A soft set over points `X` and parameters `E` assigns a subset of `X` to
//! every parameter. All sets here are packed into a `u64`, one bit per
//! (parameter, point) cell, so `|X|·|E|` is capped (24 by default, 64 at
//! most; see [`signature::MAX_CELLS_ENV`]).

pub mod catalog;
pub mod cli;
pub mod covers;
pub mod document;
pub mod error;
pub mod search;
pub mod separation;
pub mod signature;
pub mod softset;
pub mod topology;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use search::PropertyId;
pub use separation::AxiomId;
pub use signature::Signature;
pub use softset::{CombineMode, PartialSoftSet, SoftSet};
pub use topology::SoftTopology;
pub use verdict::{Verdict, Witness};
