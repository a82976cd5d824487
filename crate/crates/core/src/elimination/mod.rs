//! Cayley-Menger objects, placements and tree-guided elimination.

pub mod cache;
pub mod cm;
pub mod pipeline;
pub mod placement;

pub use cache::{PolyCache, CACHE_DIR_ENV};
pub use cm::{cm_matrix, k4_circuit_polynomial, CayleyMengerMatrix};
pub use pipeline::{
    circuit_polynomial, circuit_polynomial_with, compare_strategies, render_comparison, render_report, trimmed_median,
    CompareOptions, Comparison, EliminationReport, Flag, HardwareFingerprint, PipelineError, PipelineOptions, Status,
    StepRecord, Strategy, StrategyResult,
};
pub use placement::{
    evaluate_at_placement, random_placement, random_placement_bounded, verify_vanishing, Placement, Verification,
    COORDINATE_BOUND,
};
