//! Recognition of well-covered and uniformly well-covered graphs.
//!
//! Three independent routes decide the same question and check each other:
//!
//! * [`enumeration`]: list every maximal independent set and compare sizes;
//! * [`recognition`]: for a partition into disjoint maximal cliques, look for
//!   an independent set outside a part that dominates it;
//! * [`algebra`]: test whether each part's variable sum is a zero-divisor in
//!   the edge ring of the graph.
//!
//! [`lab`] generates graph corpora and sweeps them through all routes, and
//! [`io`] holds the text formats used by the command-line tool.
//!
//! Vertices are 0-based in the API and 1-based in every text format.

pub mod algebra;
pub mod certify;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod lab;
pub mod matching;
pub mod partition;
pub mod recognition;
pub mod vertex_set;

pub use enumeration::{Certificate, MisReport, NonUniformReason};
pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::{CliqueCover, Partition};
pub use recognition::EquivalenceReport;
pub use vertex_set::VertexSet;
