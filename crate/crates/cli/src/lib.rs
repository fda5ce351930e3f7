//! Command-line front end for `codimlab-core`: algebra files, cached
//! computations and the claim suite.

pub mod cache;
pub mod claims;
pub mod commands;
pub mod error;
pub mod format;

pub use claims::{run_verify_paper, ClaimResult, Level, Status, SuiteOptions};
pub use commands::{
    load_algebra, load_algebra_text, run, Cli, Command, Output, RunConfig, DEFAULT_ALGEBRA,
};
pub use error::CliError;
