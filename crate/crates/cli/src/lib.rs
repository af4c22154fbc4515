//! Library surface of the command-line front end: input/output document
//! formats and the command implementations, shared with the test suites.

pub mod commands;
pub mod doc;
