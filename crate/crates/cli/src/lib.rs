//! Spec parsing, presets, command runners and report emission for the
//! `reclift` binary.

pub mod build;
pub mod commands;
pub mod error;
pub mod presets;
pub mod report;
pub mod spec;

pub use commands::{run, Command, Corruption, Input, Options};
pub use error::{CliError, ParseError, Result};
pub use report::{Format, Report};
pub use spec::{parse_spec, InstanceSpecFile};
