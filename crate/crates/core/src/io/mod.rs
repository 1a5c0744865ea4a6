//! Serialization: graph6 and edge-list text formats plus the JSON report.

mod edgelist;
mod graph6;
pub mod report;

pub use edgelist::{parse_edgelist, write_edgelist};
pub use graph6::{parse_graph6, write_graph6};
pub use report::Report;
