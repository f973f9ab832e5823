//! Well-covered graphs and their direct products.
//!
//! Graphs here are small (at most 64 vertices) and stored as bit masks, so
//! every check is exact: α and i come from exhaustive search, not bounds.
//!
//! * [`graph`], [`vset`], [`formats`]: representation and I/O.
//! * [`independence`]: maximal independent sets and the invariants built on them.
//! * [`products`]: direct products with their layer structure.
//! * [`kn`]: products with a complete graph via weak partitions.
//! * [`families`]: named graph families and exhaustive corpora.
//! * [`harness`]: a registry of executable claims and a suite runner.

pub mod families;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod independence;
pub mod kn;
pub mod products;
pub mod verdict;
pub mod vset;

pub use graph::{Girth, Graph, GraphError, InducedSubgraph};
pub use verdict::{ClaimVerdict, Status};
pub use vset::VertexSet;
