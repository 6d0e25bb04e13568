//! Library surface of the command-line workbench: suite runners and the
//! report schema, shared by the binary and the acceptance tests.

pub mod report;
pub mod suites;

pub use report::{Case, Report, Status, Summary};
