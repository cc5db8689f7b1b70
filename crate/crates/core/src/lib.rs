//! Distinct eigenvalues of the k-power hypergraph `G^(k)` of a graph `G`,
//! generated from the spectra of signed subgraphs of `G`.
//!
//! * [`graph`]: graphs, signed graphs, subgraph handles, enumeration.
//! * [`eigen`]: Jacobi eigensolver and complex roots.
//! * [`hypergraph`]: `G^(k)` and its tensor eigen-equation.
//! * [`lift`]: signed-subgraph eigenpairs to tensor eigenpairs and back.
//! * [`spectrum`]: the full distinct spectrum, with certificates.

pub mod cli;
pub mod eigen;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod lift;
pub mod spectrum;

pub use eigen::{ComplexScalar, RealEigenpair, SymMatrix};
pub use error::{Error, Result};
pub use graph::{EdgeSign, Graph, SignedGraph, SignedSubgraph, SubgraphHandle};
pub use hypergraph::{PowerHypergraph, TensorEigenpair};
pub use spectrum::{SpectrumEntry, SpectrumReport};
