//! Instance generation and batch scans: exhaustive and seeded random graph
//! streams, the scan for uniformity of qualifying `s`-partite graphs, and a
//! corpus check that runs every recognition equivalence on each instance.

mod generator;
mod scan;

pub use generator::{generate, ConfigRequest, GeneratorConfig, Mode};
pub use scan::{
    conjecture_scan, find_independent_partition, qualifies_for_conjecture, theorem_corpus_check, Check,
    Counterexample, ScanKind, ScanOptions, ScanReport, Tally, COUNTEREXAMPLE_LIMIT, DEFAULT_TIMEOUT,
};
