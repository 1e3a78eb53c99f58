//! Exact distance-based graph invariants (Wiener, Szeged, revised Szeged in
//! integer quarter units), parametric generators for pendant-free tricyclic
//! graphs, and exhaustive search machinery for verifying the extremal
//! behaviour of the revised Szeged index on tricyclic graphs.
//!
//! The crate is organized around immutable [`graph::Graph`] values:
//!
//! * [`graph`] — simple graphs, BFS distances, cut vertices, cycle classes;
//! * [`graph6`] — bit-exact graph6 encoding and decoding;
//! * [`canon`] — canonical labeling and isomorphism certificates;
//! * [`indices`] — the index computations and the quarter-unit identity;
//! * [`families`] — base multigraphs, subdivisions, and the Theta families;
//! * [`search`] — brute-force enumeration, sweeps, and verification;
//! * [`records`] — persisted sweep rows (JSONL / CSV).

pub mod canon;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod random;
pub mod records;
pub mod search;

pub use canon::{certificate, certificate_bounded, Certificate, DEFAULT_CERT_BOUND};
pub use error::{Error, Graph6Error, Result};
pub use families::{
    base_by_id, base_multigraphs, enumerate_assignments, random_tricyclic_with_pendant, subdivide,
    theta, BaseMultigraph, SubdivisionAssignment, ThetaGraph, ThetaParams, ThetaVariant,
};
pub use graph::{CyclomaticClass, DistanceRow, Graph};
pub use indices::{
    delta, edge_partition, fn_closed_form_q, format_quarters, index_report, revised_szeged_q,
    revised_szeged_q_via_identity, szeged, wiener, EdgePartition, IndexEngine, IndexReport,
};
pub use records::{RecordFormat, SweepRecord};
pub use search::{
    check_lemma31, check_pendant_lemma, crossover_scan, enumerate_small, sweep_pendant_free,
    sweep_pendant_free_with, verify_bound, BoundCheck, CheckStatus, CrossoverReport,
    ExtremalReport, SweepOptions,
};
