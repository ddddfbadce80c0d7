//! Clustered colouring of graphs excluding small minors.
//!
//! The crate has four layers:
//!
//! * [`graph`]: the graph carrier, BFS layerings, block decompositions and
//!   exact tree-depth / treewidth.
//! * [`generators`]: deterministic constructors for the extremal families
//!   (fans, fat stars, fat paths, closures, the recursive lower-bound graphs).
//! * [`minors`]: exhaustive minor and subgraph search, strong models, and the
//!   constructive procedures that turn dense structure into explicit minor
//!   models.
//! * [`colouring`]: the layered colouring algorithms, their verifiers and the
//!   exact colouring oracles.
//!
//! [`harness`] binds these into reproducible experiment suites.

pub mod bounds;
pub mod colouring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod limits;
pub mod minors;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{BfsLayering, BlockForest, Graph, RootedTree};
pub use limits::Limits;
pub use colouring::{ClusterReport, Colouring};
pub use minors::{FatKind, FatMinor, MinorModel, Search, StrongModel};
