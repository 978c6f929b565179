//! JSON formats, verification suites and the command-line front end for `sustar-core`.

pub mod compute;
pub mod fixtures;
pub mod json;
pub mod report;
pub mod suites;

pub use compute::{compute, ComputeError};
pub use fixtures::{fixture, UnknownFixture};
pub use report::{CheckReport, Status, SuiteReport};
pub use suites::{run, Backend, ConfigError, SuiteConfig};
