//! Exact total Roman domination on small graphs.
//!
//! The crate computes γ, γ_t, γ_R and γ_tR exactly, measures how each
//! missing edge changes γ_tR, builds and recognises the graph families that
//! the edge-criticality results are stated for, and runs those results as
//! executable checks over enumerated graph universes.

pub mod criticality;
pub mod exec;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod solver;
pub mod verify;

pub use criticality::{complete_to_critical, edge_delta, edge_profile, Classification, EdgeProfile};
pub use exec::Exec;
pub use families::{FamilySpec, Hen1Class};
pub use graph::{Graph, GraphError, GraphMetrics};
pub use solver::{Mode, SolveError, SolveResult, Solver, WeightFunction};
pub use verify::{InstanceUniverse, TheoremId, VerificationReport};
