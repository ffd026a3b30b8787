//! Extremal graphs for `{K_{k+1}, (s+1)S_l}`-free graphs: builders for the
//! extremal families, exact detectors for cliques, matchings and star
//! forests, closed-form Turán numbers, and an exhaustive isomorph-free oracle
//! for small orders.

pub mod canon;
pub mod constructions;
pub mod detectors;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use constructions::PartitionCertificate;
pub use family::{ForbiddenFamily, Pattern};
pub use formulas::{FormulaResult, Validity};
pub use graph::{Graph, GraphError, VertexSet};
pub use oracle::ExtremalRecord;
