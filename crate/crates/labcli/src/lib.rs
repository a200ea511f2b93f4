//! Corpus runner, theorem suites, reports and the `ringlab` command line.

pub mod analysis;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod modspec;
pub mod predicate;
pub mod report;
pub mod suites;
