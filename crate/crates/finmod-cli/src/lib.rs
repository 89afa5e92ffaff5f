//! Library surface of the `finmod` command line: the instance file format,
//! corpus generation, per-instance reports, and the theorem-suite runner.

pub mod corpus;
pub mod instance;
pub mod report;
pub mod suite;
