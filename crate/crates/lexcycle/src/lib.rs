//! Tools for studying iterated tie-breaking graph searches.
//!
//! The library provides deterministic LexBFS, LexDFS, and BFS sweeps under
//! the `+` rule (break every tie toward the vertex rightmost in the
//! previous ordering), detection of the cycle such sweep sequences fall
//! into, validators for the vertex-ordering characterizations of proper
//! interval, interval, and cocomparability graphs, a family of bundled
//! fixture graphs with known sweep behavior, seeded random generators for
//! the classes under test, and the alternating row/column lexicographic
//! matrix sort whose fixpoint mirrors the two-clique sweep behavior of
//! cobipartite graphs.
//!
//! The `lexcycle` binary exposes all of it on the command line; see the
//! repository README for the file formats and the JSON report schema.

#![forbid(unsafe_code)]

pub mod checkers;
pub mod constructions;
pub mod cycle;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matrix;
pub mod modular;
pub mod ordering;
pub mod repro;
pub mod report;
pub mod sweep;

pub use error::{Error, ParseError};
pub use graph::{Graph, VertexId};
pub use ordering::Ordering;
pub use sweep::{EngineKind, SearchKind};
