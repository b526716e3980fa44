//! Batch verification harness: configuration, check execution and reports.

pub mod config;
pub mod literal;
pub mod report;
pub mod run;

pub use config::{CProfile, CValue, CheckConfig, ConfigError};
pub use report::{emit_report, Format, Record, Report, Status};
pub use run::run_checks;
