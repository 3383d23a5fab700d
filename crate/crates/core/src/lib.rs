//! Exact isoperimetric and spectral constants of algebraic graphs.
//!
//! The crate builds Cayley graphs, Cayley sum graphs, their twisted variants,
//! and vertex-transitive orbit graphs as regular integer multigraphs, computes
//! their edge/vertex Cheeger constants and edge/vertex bipartiteness
//! constants exactly by exhaustive enumeration, computes normalized spectra
//! with a dense Jacobi eigensolver, and mechanically verifies the classical
//! inequalities tying these quantities together (Cheeger--Buser, Trevisan's
//! bipartiteness sandwich, explicit lower bounds on bipartiteness constants
//! in terms of Cheeger constants, lower spectral gap bounds, square-graph
//! Cheeger bounds, and an index-two trapping argument for group actions).
//!
//! All combinatorial comparisons are exact rational arithmetic; floats appear
//! only where eigenvalues are involved, with a fixed documented slack.

pub mod bitset;
pub mod cli;
pub mod combinatorics;
pub mod corpus;
pub mod graph;
pub mod group;
pub mod harness;
pub mod matching;
pub mod ratio;
pub mod reference;
pub mod report;
pub mod spec_doc;
pub mod spectral;

pub use bitset::Bitset;
pub use ratio::ExactRatio;
