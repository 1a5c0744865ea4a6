//! Exact computation of the strong differential of a graph and the family
//! of domination invariants around it, with optimal-witness certificates.
//!
//! The crate provides:
//!
//! * [`graph`]: immutable simple graphs and bitset vertex subsets, with the
//!   set calculus (boundaries, private neighbours, weak/strong defender
//!   splits) everything else builds on;
//! * [`solvers`]: exact branch-and-bound solvers for nine invariants, each
//!   cross-validated by an independent brute-force oracle, plus the
//!   Gallai-type derivations between complementary pairs;
//! * [`families`]: deterministic generators for the graph families used by
//!   the test corpora, including seeded random graphs and exhaustive small
//!   tree enumeration;
//! * [`theorems`]: an executable registry of identities, bounds and
//!   characterisations over these invariants, with a fuzz harness that
//!   reports violations as re-checkable counterexamples;
//! * [`io`]: graph6 and edge-list serialization and the JSON report format
//!   used by the command-line tool.

pub mod breakdown;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod solvers;
pub mod theorems;
pub mod weights;

pub use breakdown::{breakdown, external_private_neighborhood, DifferentialBreakdown};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use solvers::{Invariant, InvariantResult, SolverConfig};
pub use weights::{is_idf, is_rdf, WeightFunction};
