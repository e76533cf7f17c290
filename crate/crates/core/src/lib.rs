//! Graph matroid families as independence oracles over finite simple graphs,
//! with the analysis toolkit built on them: rank and circuits, dimensionality
//! and threshold, rigidity, vertical connectivity, matroid union,
//! 1-extendability and reconstructibility checks on small graphs.
//!
//! ```
//! use graph_matroids::{families::FamilySpec, graph::complete_graph, matroid::{rank, Oracle}};
//!
//! let laman = Oracle::from_spec(&"count:k=2,l=3".parse::<FamilySpec>()?)?;
//! assert_eq!(rank(&laman, &complete_graph(4)?)?.rank, 5);
//! # Ok::<(), graph_matroids::Error>(())
//! ```

pub mod error;
pub mod families;
pub mod graph;
pub mod matroid;
pub mod reconstruction;
pub mod structure;
pub mod union;
pub mod vertical;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
