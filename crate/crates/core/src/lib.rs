//! Rainbow connectivity in edge-colored graphs.
//!
//! - [`graph`]: the colored graph type, distances, shortest-path DAGs, blocks.
//! - [`sat`]: 3-Occurrence 3-SAT formulas, DIMACS, a brute-force oracle.
//! - [`verifiers`]: rainbow and strong rainbow connectivity checks.
//! - [`reductions`]: gadget graphs built from formulas.
//! - [`recognizers`]: graph classes with checkable certificates.
//! - [`cli`], [`dot`]: the command line and Graphviz export.

pub mod cli;
pub mod dot;
pub mod graph;
pub mod sat;
pub mod recognizers;
pub mod reductions;
pub mod verifiers;
