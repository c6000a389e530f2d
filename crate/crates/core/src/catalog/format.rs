//! The algebra file format: a JSON document with exact scalars written as
//! strings, 1-based indices, and optional ideals, extensions and expected
//! dimensions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Extension, Ideal, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, LinearMap, Matrix, Scalar, Subspace, Vector};

/// One coefficient `c e_k` of a bracket, written `[k, "c"]`. The order
/// `["c", k]` is accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coeff(pub usize, pub String);

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            IndexFirst(usize, ScalarText),
            ScalarFirst(String, usize),
        }
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum ScalarText {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::IndexFirst(k, ScalarText::Text(c)) => Ok(Coeff(k, c)),
            Raw::IndexFirst(k, ScalarText::Int(c)) => Ok(Coeff(k, c.to_string())),
            Raw::ScalarFirst(c, k) => Ok(Coeff(k, c)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<Coeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub name: String,
    /// Spanning vectors in basis coordinates.
    pub span: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    /// Name of the ideal `a` in `0 -> a -> g -> g/a -> 0`.
    pub ideal: String,
    /// Spanning vectors of a complementary subalgebra; `σ` is the inverse
    /// of the projection restricted to it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedDim {
    pub dim: usize,
    /// How the value was obtained, e.g. `"closed form"` or `"computed"`.
    pub source: String,
}

/// The on-disk form of an algebra and its attached data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<IdealSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extensions: Vec<ExtensionSpec>,
    /// Keys: `HL1`, `HL2`, ..., `tensor`, `exterior`, `lie_exterior`,
    /// `ker_theta`, `gamma_ab`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, ExpectedDim>,
}

#[derive(Clone, Debug)]
pub struct NamedIdeal {
    pub name: String,
    pub ideal: Ideal,
}

#[derive(Clone, Debug)]
pub struct NamedExtension {
    pub ideal: String,
    pub extension: Extension,
}

/// A parsed, validated entry.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LeibnizAlgebra,
    pub ideals: Vec<NamedIdeal>,
    pub extensions: Vec<NamedExtension>,
    pub expected: BTreeMap<String, ExpectedDim>,
}

fn syntax(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Reads one file: a single algebra object or an array of them.
pub fn parse_files(text: &str) -> Result<Vec<AlgebraFile>> {
    if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(syntax)
    } else {
        serde_json::from_str(text).map(|f| vec![f]).map_err(syntax)
    }
}

/// Parses a single algebra, ignoring any attached ideals or extensions.
pub fn parse_algebra(text: &str) -> Result<LeibnizAlgebra> {
    let files = parse_files(text)?;
    match files.as_slice() {
        [f] => build_algebra(f, None),
        _ => Err(Error::Input(format!(
            "expected one algebra, found {}",
            files.len()
        ))),
    }
}

/// Parses every entry of a file. `field` overrides the field named in the
/// file; scalars are then read in the new field.
pub fn parse_catalog(text: &str, field: Option<FieldSpec>) -> Result<Vec<CatalogEntry>> {
    parse_files(text)?
        .iter()
        .map(|f| build_entry(f, field))
        .collect()
}

fn field_of(f: &AlgebraFile, field: Option<FieldSpec>) -> Result<FieldSpec> {
    if let Some(k) = field {
        return Ok(k);
    }
    let k: FieldSpec = f
        .field
        .parse()
        .map_err(|e| Error::Input(format!("{}: field: {e}", f.name)))?;
    if let FieldSpec::Prime(p) = k {
        FieldSpec::prime(p).map_err(|e| Error::Input(format!("{}: field: {e}", f.name)))?;
    }
    Ok(k)
}

fn scalar(field: FieldSpec, text: &str, at: impl Fn() -> String) -> Result<Scalar> {
    field
        .parse(text)
        .map_err(|e| Error::Input(format!("{}: {e}", at())))
}

fn vector(field: FieldSpec, n: usize, texts: &[String], at: impl Fn() -> String) -> Result<Vector> {
    if texts.len() != n {
        return Err(Error::Input(format!(
            "{}: expected {n} coordinates, found {}",
            at(),
            texts.len()
        )));
    }
    texts
        .iter()
        .enumerate()
        .map(|(k, t)| scalar(field, t, || format!("{}[{k}]", at())))
        .collect()
}

/// The algebra alone, validated against the Leibniz identity.
pub fn build_algebra(f: &AlgebraFile, field: Option<FieldSpec>) -> Result<LeibnizAlgebra> {
    let k = field_of(f, field)?;
    let n = f.dim;
    let labels = if f.basis.is_empty() {
        (1..=n).map(|i| format!("e{i}")).collect()
    } else if f.basis.len() == n {
        f.basis.clone()
    } else {
        return Err(Error::Input(format!(
            "{}: {} basis labels for dimension {n}",
            f.name,
            f.basis.len()
        )));
    };
    let one_based = |x: usize, what: &str, at: &str| -> Result<usize> {
        if x == 0 || x > n {
            Err(Error::Input(format!(
                "{}: {at}: {what} {x} is outside 1..={n}",
                f.name
            )))
        } else {
            Ok(x - 1)
        }
    };
    let mut entries = Vec::new();
    for (b, e) in f.brackets.iter().enumerate() {
        let at = format!("brackets[{b}]");
        let i = one_based(e.i, "index i", &at)?;
        let j = one_based(e.j, "index j", &at)?;
        let mut cs = Vec::new();
        for (c, Coeff(kk, text)) in e.coeffs.iter().enumerate() {
            let at = format!("{}: {at}.coeffs[{c}]", f.name);
            cs.push((
                one_based(*kk, "basis index", &at)?,
                scalar(k, text, || at.clone())?,
            ));
        }
        entries.push((i, j, cs));
    }
    LeibnizAlgebra::from_entries(k, labels, &entries)
}

/// Parses the algebra together with its ideals and extensions. Expected
/// dimensions are dropped when `field` differs from the file's own field,
/// since they describe the algebra over that field.
pub fn build_entry(f: &AlgebraFile, field: Option<FieldSpec>) -> Result<CatalogEntry> {
    let g = build_algebra(f, field)?;
    let k = g.field();
    let n = g.dim();
    let mut ideals: Vec<NamedIdeal> = Vec::new();
    for (x, spec) in f.ideals.iter().enumerate() {
        let vs = spec
            .span
            .iter()
            .enumerate()
            .map(|(v, t)| vector(k, n, t, || format!("{}: ideals[{x}].span[{v}]", f.name)))
            .collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::new(&g, Subspace::span(k, n, vs))
            .map_err(|e| Error::Input(format!("{}: ideal {}: {e}", f.name, spec.name)))?;
        ideals.push(NamedIdeal {
            name: spec.name.clone(),
            ideal,
        });
    }
    let mut extensions = Vec::new();
    for (x, spec) in f.extensions.iter().enumerate() {
        let ideal = ideals
            .iter()
            .find(|i| i.name == spec.ideal)
            .ok_or_else(|| {
                Error::Input(format!(
                    "{}: extensions[{x}]: no ideal named {}",
                    f.name, spec.ideal
                ))
            })?
            .ideal
            .clone();
        let mut ext = Extension::from_ideal(&g, ideal)?;
        if let Some(span) = &spec.splitting {
            let vs = span
                .iter()
                .enumerate()
                .map(|(v, t)| {
                    vector(k, n, t, || {
                        format!("{}: extensions[{x}].splitting[{v}]", f.name)
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let sigma = splitting_from_complement(&ext, &Subspace::span(k, n, vs))
                .map_err(|e| Error::Input(format!("{}: extensions[{x}]: {e}", f.name)))?;
            ext = ext
                .with_splitting(sigma)
                .map_err(|e| Error::Input(format!("{}: extensions[{x}]: {e}", f.name)))?;
        }
        extensions.push(NamedExtension {
            ideal: spec.ideal.clone(),
            extension: ext,
        });
    }
    Ok(CatalogEntry {
        name: f.name.clone(),
        algebra: g,
        ideals,
        extensions,
        expected: if f.field.parse::<FieldSpec>().ok() == Some(k) {
            f.expected.clone()
        } else {
            BTreeMap::new()
        },
    })
}

/// `σ = (p|_S)⁻¹` for a complement `S` of the ideal.
pub fn splitting_from_complement(ext: &Extension, s: &Subspace) -> Result<LinearMap> {
    let inc = s.inclusion();
    let ps = ext.projection.map().compose(&inc);
    let inv = ps.inverse().ok_or_else(|| {
        Error::BadExtension("splitting span is not a complement of the ideal".into())
    })?;
    Ok(inc.compose(&inv))
}

fn text(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

/// The file form of an algebra, brackets in `(i, j)` order with zero
/// coefficients omitted.
pub fn serialize_algebra(name: &str, g: &LeibnizAlgebra) -> AlgebraFile {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let coeffs: Vec<Coeff> = g
                .basis_bracket(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| Coeff(k + 1, c.to_string()))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }
    AlgebraFile {
        name: name.to_string(),
        field: g.field().to_string(),
        dim: n,
        basis: g.labels().to_vec(),
        brackets,
        ideals: Vec::new(),
        extensions: Vec::new(),
        expected: BTreeMap::new(),
    }
}

impl CatalogEntry {
    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    /// Back to file form. Ideals are written by their echelon bases and
    /// splittings by the image of `σ`.
    pub fn to_file(&self) -> AlgebraFile {
        let mut f = serialize_algebra(&self.name, &self.algebra);
        f.ideals = self
            .ideals
            .iter()
            .map(|i| IdealSpec {
                name: i.name.clone(),
                span: i.ideal.space().basis().iter().map(|v| text(v)).collect(),
            })
            .collect();
        f.extensions = self
            .extensions
            .iter()
            .map(|e| ExtensionSpec {
                ideal: e.ideal.clone(),
                splitting: e
                    .extension
                    .splitting
                    .as_ref()
                    .map(|s| s.map().matrix().columns().iter().map(|v| text(v)).collect()),
            })
            .collect();
        f.expected = self.expected.clone();
        f
    }

    /// The same entry after reordering the basis; new basis vector `i` is
    /// old basis vector `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<CatalogEntry> {
        let n = self.algebra.dim();
        let field = self.field();
        if perm.len() != n || {
            let mut s = perm.to_vec();
            s.sort_unstable();
            s != (0..n).collect::<Vec<_>>()
        } {
            return Err(Error::Input("not a permutation of the basis".into()));
        }
        let g = self.algebra.permuted(perm);
        let mut m = Matrix::zeros(field, n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.set(i, p, field.one());
        }
        let to_new = LinearMap::new(m);
        let ideals = self
            .ideals
            .iter()
            .map(|i| {
                Ok(NamedIdeal {
                    name: i.name.clone(),
                    ideal: Ideal::new(&g, i.ideal.space().map(&to_new))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let extensions = self
            .extensions
            .iter()
            .map(|e| {
                let ideal = ideals
                    .iter()
                    .find(|i| i.name == e.ideal)
                    .expect("extensions name existing ideals")
                    .ideal
                    .clone();
                let mut ext = Extension::from_ideal(&g, ideal)?;
                if let Some(s) = &e.extension.splitting {
                    let image = Subspace::span(field, n, s.map().matrix().columns()).map(&to_new);
                    let sigma = splitting_from_complement(&ext, &image)?;
                    ext = ext.with_splitting(sigma)?;
                }
                Ok(NamedExtension {
                    ideal: e.ideal.clone(),
                    extension: ext,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CatalogEntry {
            name: self.name.clone(),
            algebra: g,
            ideals,
            extensions,
            expected: self.expected.clone(),
        })
    }
}
