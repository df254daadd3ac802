//! Partitions of multihypergraphs into strictly degenerate induced parts.
//!
//! The central question: given a hypergraph `H` and a vector function
//! `f = (f_1, ..., f_p)` with `f_1(v) + ... + f_p(v) >= d_H(v)`, split the
//! vertices into `p` classes so that class `i` induces a strictly
//! `f_i`-degenerate subhypergraph. [`partition::solve`] either returns such a
//! partition or a [`hardpair::HardPairCertificate`] per offending component.

pub mod catalog;
pub mod coloring;
pub mod degeneracy;
pub mod error;
pub mod format;
pub mod generators;
pub mod hardpair;
pub mod hypergraph;
pub mod oracle;
pub mod partition;
pub mod structure;

mod frame;
mod vset;

pub use degeneracy::{col, is_strictly_degenerate, DegeneracyWitness, ScalarFunction};
pub use error::{Error, Result};
pub use hardpair::{
    classify_block, is_hard, make_hard, verify_certificate, BlockTypeTag, HardPairCertificate, HardPlan,
    VectorFunction,
};
pub use hypergraph::{Edge, EdgeKind, Hypergraph};
pub use partition::{enforce_degree_bounds, solve, verify_partition, Partition, Prepared, SolveResult};
pub use structure::{blocks, components, is_connected, separating_vertices, BlockTree};
