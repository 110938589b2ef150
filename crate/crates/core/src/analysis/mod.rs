//! Batch analysis and the command implementations behind the `agile` binary.

pub mod commands;
pub mod config;
pub mod render;
pub mod sweep;

pub use commands::{CommandOutput, Context, OrientationInput};
pub use config::{ConfigOverrides, OutputFormat, ToolConfig};
pub use sweep::{sweep, SweepRecord, SweepReport, SweepSummary};
