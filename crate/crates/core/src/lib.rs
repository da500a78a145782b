//! Embedded homology, weighted Laplacians, Hodge decompositions and
//! Laplacian spectra for weighted hypergraphs.

pub mod chains;
pub mod generate;
pub mod hodge;
pub mod hypergraph;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod spectra;
pub mod subspace;
pub mod weight;

pub use chains::{
    ChainBasis, ChainLevelData, ChainsError, LinearOperator, OperatorSpace, WeightedComplex,
};
pub use generate::{random_evaluation_weight, random_hypergraph, GeneratorParams};
pub use hodge::{
    ambient_four_decomposition, embedded_homology, hodge_summands, laplacian, s_star_analysis,
    sup_four_decomposition, verify_diagram_isos, Carrier, DiagramReport, HodgeError, HodgeSummands,
    HomologyReport, HypergraphMorphism, LaplacianBundle, SStarAnalysis,
};
pub use hypergraph::{
    Digraph, Hyperedge, Hypergraph, HypergraphError, SimplicialComplex, Vertex, WeightedDigraph,
};
pub use matrix::Matrix;
pub use report::{analyze_degree, DegreeSummary, CSV_HEADER};
pub use scalar::{Rat, Scalar, Tolerances};
pub use spectra::{
    CarrierOperators, EigenMultiset, EigenTransfer, RelationStatus, SpectraError,
    SpectralRelation, SpectralReport,
};
pub use subspace::{LinAlgError, Subspace};
pub use weight::{Weight, WeightError, WeightViolation};
