//! Exhaustive generation of trees, unicyclic and bicyclic graphs, extremal
//! sweeps over them and verification of the extremal claims.

mod cyclic;
pub mod report;
mod sweep;
mod trees;
mod verify;

pub use cyclic::{
    bicyclic_graphs, chord_expansions, class_graphs, unicyclic_graphs, MAX_SWEEP_ORDER,
};
pub use sweep::{extremal_sweep, ExtremalReport, Extremes, Index, SweepConfig, Tally};
pub use trees::{free_trees, FreeTrees, MAX_TREE_ORDER};
pub use verify::{fmt_rational, verify_claims, verify_class, Claim, Status, VerificationOutcome};
