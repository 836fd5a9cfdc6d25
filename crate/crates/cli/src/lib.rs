//! Command-line front end: graph file formats, verification reports and the
//! `rainbow` command dispatcher.

pub mod app;
pub mod format;
pub mod report;
pub mod verify;

pub use app::{run, Cli, Command};
pub use format::{GraphFormat, ParseError};
pub use report::{Expectation, Record, Sharpness, Theorem, Verdict, VerificationReport};
pub use verify::{verify, VerifyError};
