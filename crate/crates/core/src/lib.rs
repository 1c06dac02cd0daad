//! Upward book embeddings with one page per edge class.
//!
//! An [`Instance`] is a DAG whose edges are partitioned into `k` pages. An
//! ordering of the vertices is valid when every edge points forward and no
//! two edges of the same page interleave. The crate offers an exact
//! backtracking solver ([`search`]), a linear-time solver for two-page
//! matching instances built on strip and single-vertex folding ([`origami`],
//! [`umpbe2`]), the two hardness reductions from Betweenness with witness
//! translation ([`reductions`]), and text formats plus an SVG renderer.

pub mod gen;
pub mod instance;
pub mod io;
pub mod origami;
pub mod reductions;
pub mod search;
pub mod svg;
pub mod umpbe2;

pub use instance::{
    check_instance, edges_cross, is_matching_partition, matching_violation, validate_names, validate_ordering, Edge,
    Instance, InstanceError, MatchingViolation, Ordering, OrderingError, PageId, RawEdge, RawInstance,
    ValidationReport, Violation,
};
pub use origami::{effective_below, fold_cycle, fold_path, Crease, CreasePattern, LayerOrder, PatternError};
pub use reductions::{
    assemble_umpbe4, assemble_upbe3, eval_betweenness, extract_phi, solve_betweenness_bruteforce, witness_umpbe4,
    witness_upbe3, BetweennessError, BetweennessInstance, ElementOrdering, LabeledInstance, ReductionError, Role,
};
pub use search::{
    enumerate_valid_orderings, naive_valid_orderings, solve_exact, EnumerationStatus, SearchConfig, SearchOutcome,
    SearchStats, Verdict,
};
pub use umpbe2::{
    decompose, from_crease_pattern, solve_umpbe2, to_crease_pattern, Component, ComponentKind, Umpbe2Error,
};
