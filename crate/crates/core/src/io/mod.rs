//! Text formats: graph files (edge list, graph6, DIMACS) and the
//! line-oriented report documents emitted and re-checked by the CLI.
//!
//! Every format uses 1-based vertex labels.

mod document;
mod formats;
mod reports;

pub use document::{ReportDocument, TIMING_SUFFIX};
pub use formats::{
    parse_dimacs, parse_edge_list, parse_graph6, serialize_dimacs, serialize_edge_list, serialize_graph6, Format,
    GraphDocument,
};
pub use reports::{
    algebra_report, bipartite_report, certify_report, check_report, scan_report, verify, Verification, MIS_LIST_LIMIT,
    TOOL_NAME, TOOL_VERSION,
};
