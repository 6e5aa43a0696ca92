//! Report generation and verification suites for the drinfeld toolkit.

pub mod report;
pub mod suites;
