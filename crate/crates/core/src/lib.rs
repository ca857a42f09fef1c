//! Optimum cycle means of weighted directed multigraphs, and what they say
//! about extremal simple cycles.
//!
//! The crate computes the minimum and maximum cycle mean of a strongly
//! connected component with a policy-iteration solver that returns an
//! exact-rational optimality certificate (witness cycle plus feasible node
//! potentials). From one such pair of certificates it derives strict bounds
//! on the weight and length of the max-weight, max-length, min-weight, and
//! min-length simple cycles, plus heuristic point estimates with guaranteed
//! error bounds. A Karp-style dynamic program and an exhaustive enumerator
//! serve as independent cross-checks.
//!
//! All cycle-mean arithmetic is exact; floating point only appears in the
//! geometric-mean estimator and in report percentages.
//!
//! The crate is `no_std` (with `alloc`); parsing, file formats, random
//! weight generation, and the CLI live in the companion `ocm-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod critical;
pub mod enumerate;
pub mod estimate;
pub mod graph;
pub mod howard;
pub mod karp;
pub mod rational;
pub mod scc;

pub use bounds::{
    evaluate_bounds, gap_ratio, max_length_bounds, max_weight_bounds, min_length_bounds,
    min_weight_bounds, path_bounds, sign_condition, BoundError, BoundReport, ExtremeBounds,
    Interval, LengthInterval, ParametricBounds, PathBounds, SignClass,
};
pub use critical::{critical_subgraph, CriticalSetSummary, CriticalSubgraph};
pub use enumerate::{
    count_simple_cycles, enumerate_simple_cycles, extremal_cycles, CycleVisit, Enumeration,
    EnumerationError, ExtremalCycles,
};
pub use estimate::{estimate, heuristic_error, ErrorDenominator, EstimateError, EstimateReport};
pub use graph::{cycle_mean, Arc, Cycle, CycleError, GraphError, WeightedDigraph};
pub use howard::{
    max_cycle_mean, min_cycle_mean, verify_certificate, CertificateError, CycleMeanCertificate,
    Direction, SolveError,
};
pub use karp::karp_cycle_mean;
pub use rational::Rational;
pub use scc::{decompose_sccs, ComponentGraph, SccComponent, SccDecomposition};

#[cfg(test)]
mod thread_safety {
    // Graphs are immutable after construction and every operation is a pure
    // function, so all public data types cross thread boundaries freely.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn public_types_are_send_and_sync() {
        assert_send_sync::<crate::WeightedDigraph>();
        assert_send_sync::<crate::Cycle>();
        assert_send_sync::<crate::Rational>();
        assert_send_sync::<crate::CycleMeanCertificate>();
        assert_send_sync::<crate::CriticalSubgraph>();
        assert_send_sync::<crate::ExtremalCycles>();
        assert_send_sync::<crate::BoundReport>();
        assert_send_sync::<crate::EstimateReport>();
        assert_send_sync::<crate::SccDecomposition>();
    }
}
