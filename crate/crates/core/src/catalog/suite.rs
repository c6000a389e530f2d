use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::format::CatalogEntry;
use crate::algebra::{Extension, Ideal, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::exactla::kernel;
use crate::gamma::{
    check_gamma_injectivity, check_psi_sequences, check_split_sequence, phi_and_pibar, GammaModule,
    PullbackQuotient,
};
use crate::homology::{leibniz_homology, HomologyConfig};
use crate::products::{exterior_of, lie_exterior_square, square_product, theta, ProductKind};
use crate::report::SequenceReport;
use crate::theorems::{
    central_extension_corollary, check_delta_iso, check_hl2_theorem, check_right_exactness,
    check_split_injectivity, check_uce_perfect, eight_term_audit, lie_comparison_check,
    perfect_lie_sequence, six_term_sequence,
};

/// Bumped whenever the machine report layout changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Invariants,
    Hl2Theorem,
    DeltaIso,
    PsiSequences,
    SplitSequence,
    GammaInjectivity,
    LieComparison,
    PerfectLie,
    UcePerfect,
    SixTerm,
    RightExactness,
    SplitInjectivity,
    EightTerm,
    CentralCorollary,
    PhiPibar,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::Invariants,
        Check::Hl2Theorem,
        Check::DeltaIso,
        Check::PsiSequences,
        Check::SplitSequence,
        Check::GammaInjectivity,
        Check::LieComparison,
        Check::PerfectLie,
        Check::UcePerfect,
        Check::SixTerm,
        Check::RightExactness,
        Check::SplitInjectivity,
        Check::EightTerm,
        Check::CentralCorollary,
        Check::PhiPibar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Invariants => "invariants",
            Check::Hl2Theorem => "hl2-theorem",
            Check::DeltaIso => "delta-iso",
            Check::PsiSequences => "psi-sequences",
            Check::SplitSequence => "split-sequence",
            Check::GammaInjectivity => "gamma-injectivity",
            Check::LieComparison => "lie-comparison",
            Check::PerfectLie => "perfect-lie",
            Check::UcePerfect => "uce-perfect",
            Check::SixTerm => "six-term",
            Check::RightExactness => "right-exactness",
            Check::SplitInjectivity => "split-injectivity",
            Check::EightTerm => "eight-term",
            Check::CentralCorollary => "central-corollary",
            Check::PhiPibar => "phi-pibar",
        }
    }

    /// Whether the check runs once per extension rather than once per
    /// algebra.
    pub fn per_extension(self) -> bool {
        matches!(
            self,
            Check::SixTerm
                | Check::RightExactness
                | Check::SplitInjectivity
                | Check::EightTerm
                | Check::CentralCorollary
                | Check::PhiPibar
        )
    }

    fn run_algebra(self, entry: &CatalogEntry, cfg: &HomologyConfig) -> Result<SequenceReport> {
        let g = &entry.algebra;
        match self {
            Check::Invariants => {
                let mut r = invariants(g, cfg)?;
                compare_expected(&mut r, entry);
                Ok(r)
            }
            Check::Hl2Theorem => check_hl2_theorem(g, cfg),
            Check::DeltaIso => check_delta_iso(g),
            Check::PsiSequences => {
                let t = square_product(g, ProductKind::Tensor)?;
                let e = exterior_of(&t)?;
                check_psi_sequences(&PullbackQuotient::from_products(t, e)?)
            }
            Check::SplitSequence => check_split_sequence(g),
            Check::GammaInjectivity => check_gamma_injectivity(g),
            Check::LieComparison => lie_comparison_check(g, cfg),
            Check::PerfectLie => perfect_lie_sequence(g, cfg),
            Check::UcePerfect => check_uce_perfect(g, cfg),
            _ => unreachable!("per-extension check"),
        }
    }

    fn run_extension(self, ext: &Extension, cfg: &HomologyConfig) -> Result<SequenceReport> {
        match self {
            Check::SixTerm => six_term_sequence(ext, cfg),
            Check::RightExactness => check_right_exactness(ext),
            Check::SplitInjectivity => check_split_injectivity(ext),
            Check::EightTerm => eight_term_audit(ext, cfg),
            Check::CentralCorollary => central_extension_corollary(ext, cfg),
            Check::PhiPibar => {
                phi_and_pibar(&ext.total, &ext.ideal, &Ideal::whole(&ext.total)).map(|(_, r)| r)
            }
            _ => unreachable!("per-algebra check"),
        }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                Error::Input(format!(
                    "unknown check {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check's hypotheses do not hold for this input.
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    /// `"algebra"` or `"extension:<ideal>"`.
    pub target: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<SequenceReport>,
}

impl CheckOutcome {
    fn from_result(check: Check, target: String, result: Result<SequenceReport>) -> Self {
        let (status, detail, report) = match result {
            Ok(r) if r.verdict => (Status::Pass, None, Some(r)),
            Ok(r) => (Status::Fail, Some(r.failures().join("; ")), Some(r)),
            Err(
                e @ (Error::NotLie
                | Error::NotPerfect
                | Error::NotCentral
                | Error::MissingSplitting),
            ) => (Status::Skipped, Some(e.to_string()), None),
            Err(e) => (Status::Error, Some(e.to_string()), None),
        };
        CheckOutcome {
            check,
            target,
            status,
            detail,
            report,
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Skipped)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub entry: String,
    pub field: String,
    pub dim: usize,
    pub checks: Vec<CheckOutcome>,
    pub verdict: bool,
}

impl EntryReport {
    /// A dimension recorded by the invariants check.
    pub fn invariant(&self, key: &str) -> Option<usize> {
        self.checks
            .iter()
            .find(|c| c.check == Check::Invariants)
            .and_then(|c| c.report.as_ref())
            .and_then(|r| r.dim_of(key))
    }

    pub fn outcome(&self, check: Check) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(move |c| c.check == check)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub max_degree: usize,
    pub entries: Vec<EntryReport>,
    pub verdict: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Empty selects every check.
    pub checks: Vec<Check>,
    /// Entry names to keep; empty keeps all.
    pub entries: Vec<String>,
    pub max_degree: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            checks: Vec::new(),
            entries: Vec::new(),
            max_degree: 3,
            jobs: None,
        }
    }
}

/// Dimensions of `HL_1..HL_max`, `g⋆g`, `g∧g`, `ker θ`, `Γ(g^ab)` and, for
/// Lie algebras, `g∧_Lie g`.
pub fn invariants(g: &LeibnizAlgebra, cfg: &HomologyConfig) -> Result<SequenceReport> {
    let mut r = SequenceReport::new("invariants");
    for n in 1..=cfg.max_degree {
        r.dim(format!("HL{n}"), leibniz_homology(g, n, cfg)?.dim());
    }
    let t = square_product(g, ProductKind::Tensor)?;
    let e = exterior_of(&t)?;
    let (gab, _) = g.abelianization();
    r.dim("tensor", t.dim())
        .dim("exterior", e.dim())
        .dim("ker_theta", kernel(&theta(&e)?).dim())
        .dim("gamma_ab", GammaModule::new(g.field(), gab.dim()).dim());
    if g.is_lie() {
        r.dim("lie_exterior", lie_exterior_square(g)?.dim());
    }
    Ok(r)
}

fn compare_expected(r: &mut SequenceReport, entry: &CatalogEntry) {
    for (key, want) in &entry.expected {
        let known = key.starts_with("HL") && key[2..].parse::<usize>().is_ok()
            || matches!(
                key.as_str(),
                "tensor" | "exterior" | "ker_theta" | "gamma_ab" | "lie_exterior"
            );
        if !known {
            r.condition(format!("expected key {key} is recognised"), false);
            continue;
        }
        // degrees above the configured maximum are not computed
        if let Some(got) = r.dim_of(key) {
            r.condition(
                format!("{key} = {} ({})", want.dim, want.source),
                got == want.dim,
            );
        }
    }
}

struct Job<'a> {
    entry: usize,
    check: Check,
    target: String,
    extension: Option<&'a Extension>,
}

/// Runs the selected checks on the selected entries. Entries are ordered by
/// name and checks by their fixed order, so the result does not depend on
/// scheduling.
pub fn run_suite(entries: &[CatalogEntry], opts: &SuiteOptions) -> Result<SuiteReport> {
    for name in &opts.entries {
        if !entries.iter().any(|e| &e.name == name) {
            return Err(Error::Input(format!("no entry named {name:?}")));
        }
    }
    let mut selected: Vec<&CatalogEntry> = entries
        .iter()
        .filter(|e| opts.entries.is_empty() || opts.entries.contains(&e.name))
        .collect();
    selected.sort_by(|a, b| a.name.cmp(&b.name));
    let mut checks = if opts.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        opts.checks.clone()
    };
    checks.sort();
    checks.dedup();

    let mut jobs = Vec::new();
    for (i, e) in selected.iter().enumerate() {
        for &c in &checks {
            if c.per_extension() {
                for x in &e.extensions {
                    jobs.push(Job {
                        entry: i,
                        check: c,
                        target: format!("extension:{}", x.ideal),
                        extension: Some(&x.extension),
                    });
                }
            } else {
                jobs.push(Job {
                    entry: i,
                    check: c,
                    target: "algebra".into(),
                    extension: None,
                });
            }
        }
    }

    let cfg = HomologyConfig::with_max_degree(opts.max_degree);
    let run = |j: &Job| {
        let start = Instant::now();
        let result = match j.extension {
            Some(x) => j.check.run_extension(x, &cfg),
            None => j.check.run_algebra(selected[j.entry], &cfg),
        };
        let mut out = CheckOutcome::from_result(j.check, j.target.clone(), result);
        if let Some(r) = out.report.as_mut() {
            r.elapsed = Some(start.elapsed());
        }
        out
    };
    let outcomes: Vec<CheckOutcome> = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?
            .install(|| jobs.par_iter().map(run).collect()),
        None => jobs.par_iter().map(run).collect(),
    };

    let mut reports: Vec<EntryReport> = selected
        .iter()
        .map(|e| EntryReport {
            entry: e.name.clone(),
            field: e.field().to_string(),
            dim: e.algebra.dim(),
            checks: Vec::new(),
            verdict: true,
        })
        .collect();
    for (j, o) in jobs.iter().zip(outcomes) {
        let r = &mut reports[j.entry];
        r.verdict &= o.is_ok();
        r.checks.push(o);
    }
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        max_degree: opts.max_degree,
        verdict: reports.iter().all(|r| r.verdict),
        entries: reports,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Input(format!(
                "unknown format {s:?}; expected json or md"
            ))),
        }
    }
}

/// Renders a report. Both formats omit timings, so equal inputs give equal
/// text.
pub fn emit_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Markdown => markdown(report),
    }
}

fn markdown(report: &SuiteReport) -> String {
    let mut s = String::new();
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    let _ = writeln!(s, "# Suite report\n");
    let _ = writeln!(
        s,
        "schema {} · max degree {} · verdict **{}**\n",
        report.schema_version,
        report.max_degree,
        verdict(report.verdict)
    );
    let mut header = String::from("| entry | field | dim |");
    let mut rule = String::from("|---|---|---:|");
    let mut keys: Vec<String> = (1..=report.max_degree).map(|n| format!("HL{n}")).collect();
    let mut titles = keys.clone();
    keys.extend(["tensor", "exterior", "gamma_ab"].map(String::from));
    titles.extend(["dim ⋆", "dim ∧", "Γ(g^ab)"].map(String::from));
    for title in &titles {
        let _ = write!(header, " {title} |");
        rule.push_str("---:|");
    }
    header.push_str(" verdict |");
    rule.push_str("---|");
    let _ = writeln!(s, "{header}\n{rule}");
    for e in &report.entries {
        let _ = write!(s, "| {} | {} | {} |", e.entry, e.field, e.dim);
        for k in &keys {
            match e.invariant(k) {
                Some(d) => {
                    let _ = write!(s, " {d} |");
                }
                None => s.push_str(" – |"),
            }
        }
        let _ = writeln!(s, " {} |", verdict(e.verdict));
    }
    let _ = writeln!(
        s,
        "\n## Checks\n\n| entry | check | target | status | notes |\n|---|---|---|---|---|"
    );
    for e in &report.entries {
        for c in &e.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
                Status::Error => "ERROR",
            };
            let notes = c.detail.as_deref().unwrap_or("").replace('|', "\\|");
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                e.entry, c.check, c.target, status, notes
            );
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_catalog;

    fn abelian(n: usize) -> CatalogEntry {
        let text = format!(r#"{{"name": "ab{n}", "field": "Q", "dim": {n}}}"#);
        parse_catalog(&text, None).unwrap().remove(0)
    }

    #[test]
    fn empty_selection() {
        let r = run_suite(&[], &SuiteOptions::default()).unwrap();
        assert!(r.verdict);
        assert!(r.entries.is_empty());
    }

    #[test]
    fn abelian_row() {
        let opts = SuiteOptions {
            checks: vec![Check::Invariants],
            ..SuiteOptions::default()
        };
        let r = run_suite(&[abelian(2)], &opts).unwrap();
        assert_eq!(r.entries[0].invariant("HL2"), Some(4));
        let md = emit_report(&r, Format::Markdown);
        assert!(
            md.contains("| ab2 | Q | 2 | 2 | 4 | 8 | 8 | 4 | 3 | pass |"),
            "{md}"
        );
    }

    #[test]
    fn fabricated_failure_surfaces() {
        let text = r#"{"name": "liar", "field": "Q", "dim": 1,
            "expected": {"HL2": {"dim": 7, "source": "made up"}}}"#;
        let entries = parse_catalog(text, None).unwrap();
        let r = run_suite(&entries, &SuiteOptions::default()).unwrap();
        assert!(!r.verdict);
        let md = emit_report(&r, Format::Markdown);
        assert!(md.contains("FAIL"));
        assert!(md.contains("HL2 = 7"));
    }

    #[test]
    fn oversized_degree() {
        let opts = SuiteOptions {
            checks: vec![Check::Invariants],
            max_degree: 12,
            ..SuiteOptions::default()
        };
        let r = run_suite(&[abelian(3)], &opts).unwrap();
        let o = &r.entries[0].checks[0];
        assert_eq!(o.status, Status::Error);
        assert!(o.detail.as_ref().unwrap().contains("exceeds the limit"));
    }

    #[test]
    fn unknown_entry_and_check() {
        assert!(run_suite(
            &[abelian(1)],
            &SuiteOptions {
                entries: vec!["nope".into()],
                ..SuiteOptions::default()
            }
        )
        .is_err());
        assert!("bogus".parse::<Check>().is_err());
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
    }
}
