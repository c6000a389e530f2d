//! The catalog shipped with the library.

use super::format::{build_entry, parse_files, AlgebraFile, CatalogEntry};
use crate::error::Result;
use crate::exactla::FieldSpec;

/// `(file name, contents)` for every built-in entry.
pub const BUILTIN_SOURCES: &[(&str, &str)] = &[
    (
        "abelian-1-f2.json",
        include_str!("../../catalog/abelian-1-f2.json"),
    ),
    (
        "abelian-1-q.json",
        include_str!("../../catalog/abelian-1-q.json"),
    ),
    (
        "abelian-2-f2.json",
        include_str!("../../catalog/abelian-2-f2.json"),
    ),
    (
        "abelian-2-q.json",
        include_str!("../../catalog/abelian-2-q.json"),
    ),
    (
        "abelian-3-f2.json",
        include_str!("../../catalog/abelian-3-f2.json"),
    ),
    (
        "abelian-3-q.json",
        include_str!("../../catalog/abelian-3-q.json"),
    ),
    (
        "cyclic2-f2.json",
        include_str!("../../catalog/cyclic2-f2.json"),
    ),
    (
        "cyclic2-q.json",
        include_str!("../../catalog/cyclic2-q.json"),
    ),
    (
        "cyclic3-q.json",
        include_str!("../../catalog/cyclic3-q.json"),
    ),
    ("h3+k-q.json", include_str!("../../catalog/h3+k-q.json")),
    ("h3-f2.json", include_str!("../../catalog/h3-f2.json")),
    ("h3-q.json", include_str!("../../catalog/h3-q.json")),
    ("h5-q.json", include_str!("../../catalog/h5-q.json")),
    ("sl2-q.json", include_str!("../../catalog/sl2-q.json")),
    (
        "sl2xsl2-q.json",
        include_str!("../../catalog/sl2xsl2-q.json"),
    ),
    (
        "solvable2-q.json",
        include_str!("../../catalog/solvable2-q.json"),
    ),
];

pub fn builtin_files() -> Vec<AlgebraFile> {
    BUILTIN_SOURCES
        .iter()
        .flat_map(|(name, text)| {
            parse_files(text).unwrap_or_else(|e| panic!("built-in file {name}: {e}"))
        })
        .collect()
}

/// Every built-in entry, read over `field` when given.
pub fn builtin_catalog(field: Option<FieldSpec>) -> Result<Vec<CatalogEntry>> {
    builtin_files()
        .iter()
        .map(|f| build_entry(f, field))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_entries_parse() {
        let c = builtin_catalog(None).unwrap();
        assert_eq!(c.len(), BUILTIN_SOURCES.len());
        let mut names: Vec<_> = c.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.len());
        assert!(c
            .iter()
            .any(|e| e.extensions.iter().any(|x| x.extension.splitting.is_some())));
    }
}
