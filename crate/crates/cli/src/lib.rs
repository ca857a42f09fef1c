//! IO, file formats, weight generation, and the analysis pipeline around
//! `ocm-core`. The `ocm` binary is a thin wrapper over this library.
//!
//! ```
//! use ocm_core::{min_cycle_mean, verify_certificate, Rational};
//! use ocm_cli::parse_edge_list;
//!
//! let g = parse_edge_list("p 2 2\na 1 2 3\na 2 1 7")?;
//! let lo = min_cycle_mean(&g)?;
//! assert_eq!(lo.lambda, Rational::new(10, 2));
//! verify_certificate(&g, &lo)?;
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bench;
pub mod format;
pub mod harness;
pub mod report;
pub mod topology;
pub mod weightgen;

pub use bench::{bench_directory, BenchError};
pub use format::{format_cycle_line, parse_edge_list, serialize_edge_list, ParseError};
pub use harness::{analyze, AnalyzeOptions, Report, ReportMeta};
pub use report::{aggregate_stats, emit_report, parse_report, ReportFormat};
pub use weightgen::{assign_weights, WeightDistribution, WeightSpec};
