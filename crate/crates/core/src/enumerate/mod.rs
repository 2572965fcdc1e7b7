//! Transitive group catalogs and the enumeration of connected quandles.

mod algorithm;
mod catalog;
mod obstruction;
mod oracle;

pub use algorithm::{
    classify, enumerate_connected_quandles, enumerate_connected_quandles_with, Counts, Entry,
    EnumerationResult, Source,
};
pub use catalog::{builtin_catalog, subgroup_classes, Catalog, BUILTIN_MAX_DEGREE};
pub use obstruction::{center_generates, obstruction_check, GroupVerdict, ObstructionReport};
pub use oracle::{brute_force_quandles, ORACLE_MAX_ORDER};
