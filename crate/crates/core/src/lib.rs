//! Matching Ramsey numbers.
//!
//! Maximum matchings and Gallai–Edmonds decompositions of simple graphs, edge-colored
//! complete graphs with no monochromatic `n_i`-matching in color `i`, and exhaustive
//! verification of the Ramsey and star-critical values for matchings at small orders.

pub mod colored;
mod error;
pub mod gallai_edmonds;
pub mod graph;
pub mod matching;
pub mod search;
pub mod star;

pub use colored::{
    check_structure, construct_critical, contract_partition, find_structure, is_free, lift_matching, proof_ledger,
    ColorLedger, Contraction, EdgeColoring, MatchParams, ProofLedger, RepresentativeMap, StructureWitness,
};
pub use error::{Error, Result};
pub use gallai_edmonds::{
    decompose, matching_number_from_decomposition, verify_decomposition, GeDecomposition, VerificationReport,
};
pub use graph::{complete_graph, connected_components, induced_subgraph, Graph, GraphBuilder, VertexSet};
pub use matching::{
    brute_force_matching_number, has_matching_of_size, is_factor_critical, matching_number, maximum_matching, Matching,
};
pub use search::{
    canonical_form, enumerate_colorings, enumerate_critical, ramsey_value, verify_ramsey_exhaustive, ColorSymmetry,
    ColoringSearch, SearchConfig, SearchReport,
};
pub use star::{construct_star_free, star_critical_value, verify_star_exhaustive, StarColoring, StarHost, StarReport};
