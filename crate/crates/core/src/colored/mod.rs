//! Edge-colored graphs and the matching-Ramsey machinery built on them.

mod coloring;
mod contract;
mod ledger;
mod params;
mod structure;

pub(crate) use coloring::critical_parts;
pub use coloring::{construct_critical, is_free, EdgeColoring};
pub use contract::{contract_partition, lift_matching, Contraction, RepresentativeMap};
pub use ledger::{proof_ledger, ColorLedger, ProofLedger};
pub use params::MatchParams;
pub use structure::{check_structure, find_structure, StructureWitness};
