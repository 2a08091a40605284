//! Batch verification and table generation behind the `parton` binary.

pub mod commands;
pub mod config;
pub mod report;
pub mod suites;
pub mod tables;

pub use config::{parse_grid, parse_primes, Format, RunConfig, SUITES};
pub use report::{CheckRow, Report, Status};
pub use suites::{is_usage_error, resolve_stream, run_suite};
pub use tables::{emit_table, TableKind};
