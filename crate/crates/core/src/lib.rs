//! Linear paths in 3-uniform hypergraphs.
//!
//! - [`hypergraph`]: immutable r-uniform hypergraphs with degree and
//!   codegree queries; [`text`] is their file format.
//! - [`constructions`]: the star, core and star-plus families and the
//!   minimum-degree thresholds that force long linear paths.
//! - [`oracle`]: exhaustive search for linear paths, cycles and cycles with a
//!   parallel edge.
//! - [`finder`]: a rotation-extension search that follows the
//!   minimum-degree argument and is guaranteed to succeed above the threshold.
//! - [`lab`]: verification campaigns and seeded random experiments.

pub mod constructions;
pub mod error;
pub mod finder;
pub mod hypergraph;
pub mod lab;
pub mod linear;
pub mod oracle;
pub mod report;
pub mod text;
pub mod vertex_set;

/// Vertex label, `0..n`.
pub type Vertex = usize;

pub use error::{ConstructionError, EnumerationError, FinderError, HypergraphError, LabError, PathError};
pub use hypergraph::Hypergraph;
pub use linear::{CyclePlusWitness, LinearCycle, LinearPath};
pub use oracle::{Budget, Outcome};
pub use report::VerificationReport;
pub use vertex_set::VertexSet;
