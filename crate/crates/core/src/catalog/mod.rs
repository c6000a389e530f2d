//! Algebra files, the built-in catalog, and the batch runner that applies
//! the verifiers to catalog entries.

mod builtin;
mod format;
mod suite;

pub use builtin::{builtin_catalog, builtin_files, BUILTIN_SOURCES};
pub use format::{
    build_algebra, build_entry, parse_algebra, parse_catalog, parse_files, serialize_algebra,
    splitting_from_complement, AlgebraFile, BracketEntry, CatalogEntry, Coeff, ExpectedDim,
    ExtensionSpec, IdealSpec, NamedExtension, NamedIdeal,
};
pub use suite::{
    emit_report, invariants, run_suite, Check, CheckOutcome, EntryReport, Format, Status,
    SuiteOptions, SuiteReport, SCHEMA_VERSION,
};
