use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lodaykit::catalog::{
    builtin_catalog, emit_report, invariants, parse_catalog, parse_files, run_suite, CatalogEntry,
    Check, Format, SuiteOptions,
};
use lodaykit::exactla::{kernel, FieldSpec};
use lodaykit::gamma::GammaModule;
use lodaykit::homology::{chevalley_eilenberg_homology, leibniz_homology, HomologyConfig};
use lodaykit::products::{exterior_of, square_product, theta, NonAbelianProduct, ProductKind};
use lodaykit::Error;

/// Exact Leibniz homology, non-abelian tensor and exterior squares, and the
/// verifiers relating them.
#[derive(Parser)]
#[command(name = "lodaykit", version)]
struct Cli {
    /// Read every algebra over this field instead of the one in its file
    /// (Q, F2, F3, ...).
    #[arg(long, global = true)]
    field: Option<String>,
    /// Highest homology degree to compute.
    #[arg(long, global = true, default_value_t = 3)]
    max_degree: usize,
    /// Worker threads for `check` and `report`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Algebra file (one object or an array); the built-in catalog if omitted.
    file: Option<PathBuf>,
    /// Restrict to these entries.
    #[arg(long = "entry")]
    entries: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and check the Leibniz identity, ideals and splittings.
    Validate { file: PathBuf },
    /// Table of homology and product dimensions.
    Invariants(Input),
    /// Leibniz homology and, for Lie algebras, Chevalley–Eilenberg homology.
    Homology(Input),
    /// Dimension and basis of g⋆g.
    TensorSquare(Input),
    /// Dimension and basis of g∧g, with the kernel and image of θ.
    ExteriorSquare(Input),
    /// Dimension of Γ(g^ab), or of Γ(K^n) with --rank.
    Gamma {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Run verifiers and print one line per check.
    Check {
        #[command(flatten)]
        input: Input,
        /// Checks to run; all if omitted.
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
    /// Run verifiers and emit the full report.
    Report {
        #[command(flatten)]
        input: Input,
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
}

enum Failure {
    Verdict,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    if let Err(e) = emit(&cli, &out) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn field(cli: &Cli) -> Result<Option<FieldSpec>, Failure> {
    let Some(text) = &cli.field else {
        return Ok(None);
    };
    let k: FieldSpec = text
        .parse()
        .map_err(|e| Failure::Input(format!("--field: {e}")))?;
    if let FieldSpec::Prime(p) = k {
        FieldSpec::prime(p).map_err(|e| Failure::Input(format!("--field: {e}")))?;
    }
    Ok(Some(k))
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(cli: &Cli, input: &Input) -> Result<Vec<CatalogEntry>, Failure> {
    let k = field(cli)?;
    let all = match &input.file {
        Some(path) => parse_catalog(&read(path)?, k)?,
        None => builtin_catalog(k)?,
    };
    for name in &input.entries {
        if !all.iter().any(|e| &e.name == name) {
            return Err(Failure::Input(format!("no entry named {name:?}")));
        }
    }
    Ok(all
        .into_iter()
        .filter(|e| input.entries.is_empty() || input.entries.contains(&e.name))
        .collect())
}

fn checks(suites: &[String]) -> Result<Vec<Check>, Failure> {
    Ok(suites
        .iter()
        .map(|s| s.parse::<Check>())
        .collect::<Result<_, _>>()?)
}

fn cfg(cli: &Cli) -> HomologyConfig {
    HomologyConfig::with_max_degree(cli.max_degree)
}

fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate { file } => validate(cli, file, out),
        Command::Invariants(input) => {
            for e in load(cli, input)? {
                let r = invariants(&e.algebra, &cfg(cli))?;
                let dims: Vec<String> = r
                    .dims
                    .iter()
                    .map(|d| format!("{}={}", d.label, d.dim))
                    .collect();
                out.push_str(&format!(
                    "{} ({}, dim {}): {}\n",
                    e.name,
                    e.field(),
                    e.algebra.dim(),
                    dims.join(" ")
                ));
            }
            Ok(())
        }
        Command::Homology(input) => {
            for e in load(cli, input)? {
                let g = &e.algebra;
                out.push_str(&format!("{} ({}, dim {})\n", e.name, e.field(), g.dim()));
                for n in 0..=cli.max_degree {
                    let hl = leibniz_homology(g, n, &cfg(cli))?.dim();
                    out.push_str(&format!("  HL{n} = {hl}"));
                    if g.is_lie() {
                        let h = chevalley_eilenberg_homology(g, n, &cfg(cli))?.dim();
                        out.push_str(&format!("  H{n} = {h}"));
                    }
                    out.push('\n');
                }
            }
            Ok(())
        }
        Command::TensorSquare(input) => {
            for e in load(cli, input)? {
                let t = square_product(&e.algebra, ProductKind::Tensor)?;
                describe_product(out, &e, "g⋆g", &t);
            }
            Ok(())
        }
        Command::ExteriorSquare(input) => {
            for e in load(cli, input)? {
                let t = square_product(&e.algebra, ProductKind::Tensor)?;
                let x = exterior_of(&t)?;
                describe_product(out, &e, "g∧g", &x);
                let th = theta(&x)?;
                out.push_str(&format!(
                    "  dim ker θ = {}, rank θ = {}\n",
                    kernel(&th).dim(),
                    th.rank()
                ));
            }
            Ok(())
        }
        Command::Gamma { input, rank } => {
            if let Some(n) = rank {
                let k = field(cli)?.unwrap_or(FieldSpec::Rationals);
                let g = GammaModule::new(k, *n);
                out.push_str(&format!(
                    "Γ({k}^{n}): dim {}, witness basis {}\n",
                    g.dim(),
                    if g.witness_is_basis() {
                        "independent"
                    } else {
                        "DEPENDENT"
                    }
                ));
                return if g.witness_is_basis() {
                    Ok(())
                } else {
                    Err(Failure::Verdict)
                };
            }
            for e in load(cli, input)? {
                let (ab, _) = e.algebra.abelianization();
                let g = GammaModule::new(e.field(), ab.dim());
                out.push_str(&format!(
                    "{}: dim g^ab = {}, dim Γ(g^ab) = {}\n",
                    e.name,
                    ab.dim(),
                    g.dim()
                ));
            }
            Ok(())
        }
        Command::Check { input, suites } => {
            let report = suite(cli, input, suites)?;
            for e in &report.entries {
                for c in &e.checks {
                    let status = format!("{:?}", c.status).to_uppercase();
                    out.push_str(&format!("{status:7} {} {} {}", e.entry, c.check, c.target));
                    if let Some(d) = &c.detail {
                        out.push_str(&format!(" ({d})"));
                    }
                    out.push('\n');
                }
            }
            out.push_str(if report.verdict {
                "verdict: pass\n"
            } else {
                "verdict: FAIL\n"
            });
            if report.verdict {
                Ok(())
            } else {
                Err(Failure::Verdict)
            }
        }
        Command::Report {
            input,
            suites,
            format,
        } => {
            let report = suite(cli, input, suites)?;
            let format = match format {
                OutputFormat::Json => Format::Json,
                OutputFormat::Md => Format::Markdown,
            };
            out.push_str(&emit_report(&report, format));
            if report.verdict {
                Ok(())
            } else {
                Err(Failure::Verdict)
            }
        }
    }
}

fn suite(
    cli: &Cli,
    input: &Input,
    suites: &[String],
) -> Result<lodaykit::catalog::SuiteReport, Failure> {
    let entries = load(cli, input)?;
    let opts = SuiteOptions {
        checks: checks(suites)?,
        entries: Vec::new(),
        max_degree: cli.max_degree,
        jobs: cli.jobs,
    };
    Ok(run_suite(&entries, &opts)?)
}

fn validate(cli: &Cli, file: &PathBuf, out: &mut String) -> Result<(), Failure> {
    let text = read(file)?;
    let k = field(cli)?;
    for f in parse_files(&text)? {
        match lodaykit::catalog::build_entry(&f, k) {
            Ok(e) => out.push_str(&format!(
                "ok {} ({}, dim {}, {} ideals, {} extensions)\n",
                e.name,
                e.field(),
                e.algebra.dim(),
                e.ideals.len(),
                e.extensions.len()
            )),
            Err(Error::NotLeibniz(report)) => {
                out.push_str(&format!("invalid {}\n{report}\n", f.name));
                return Err(Failure::Input(format!(
                    "{}: Leibniz identity fails",
                    f.name
                )));
            }
            Err(e) => return Err(Failure::Input(format!("{}: {e}", f.name))),
        }
    }
    Ok(())
}

fn describe_product(out: &mut String, e: &CatalogEntry, title: &str, p: &NonAbelianProduct) {
    let labels = p.symbol_labels();
    let basis: Vec<&str> = p
        .quotient
        .free_columns()
        .iter()
        .map(|&i| labels[i].as_str())
        .collect();
    out.push_str(&format!(
        "{} ({}): dim {title} = {}\n",
        e.name,
        e.field(),
        p.dim()
    ));
    if !basis.is_empty() {
        out.push_str(&format!("  basis: {}\n", basis.join(", ")));
    }
}
