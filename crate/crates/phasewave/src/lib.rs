//! File formats, verification suites and the command-line driver built on
//! `phasewave-core`.

pub mod checks;
pub mod cli;
mod error;
pub mod export;
pub mod report;
pub mod time;

pub use cli::{run, Command, RunConfig, RunOutput};
pub use error::{Error, Result};
pub use export::{FieldMetadata, Format};
pub use report::{CheckResult, VerificationReport};
