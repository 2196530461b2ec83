//! Graph files, JSON reports and benchmarks for [`bimeet_core`].

pub mod bench;
pub mod format;
pub mod report;
pub mod verify;

pub use bimeet_core;
pub use format::{parse_graph, read_graph, write_graph, ParseError, ParseErrorKind, ParsedGraph};
