//! Batch front-end: load a self-describing JSON input, run validators,
//! nerves, homotopy colimits, theorem checks, or homology, and emit a
//! deterministic report.
//!
//! Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 budget
//! exhaustion. Reports are byte-identical across runs on identical inputs;
//! the text format is a stable line-oriented rendering of the JSON report.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nervekit::fincat::nerve;
use nervekit::hocolim::{
    bisimplicial_s_br, bisimplicial_s_mon, hocolim_br, hocolim_mon, theorem_certificate_br,
    theorem_certificate_mon,
};
use nervekit::homology::{homology_table, normalized_complex, HomologyRow};
use nervekit::nerves::{
    diagram_nerve_br, diagram_nerve_mon, geometric_nerve_br, geometric_nerve_mon,
};
use nervekit::schema::{InputFile, ParseError};
use nervekit::simplicial::TruncatedSimplicialSet;
use nervekit::{
    validate_braided, validate_braided_diagram, validate_braided_functor, validate_category,
    validate_monoidal, validate_monoidal_diagram, validate_monoidal_functor, EnumError,
    DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "nervekit", version, about = "Exact nerves, homotopy colimits, and homology certificates for finite diagrams of (braided) monoidal categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Self-describing JSON input file.
    #[arg(long)]
    input: PathBuf,
    /// Truncation bound N (simplicial data kept for dimensions <= N).
    #[arg(long, default_value_t = 4)]
    truncation: usize,
    /// Node budget per cocycle enumeration.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout (written atomically).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the validator matching the input kind.
    Validate(Common),
    /// Per-dimension cardinalities of the nerve of the input.
    Nerve {
        #[command(flatten)]
        common: Common,
        /// Include the canonical simplex labels per dimension.
        #[arg(long)]
        dump_simplices: bool,
    },
    /// Per-dimension cardinalities of the homotopy colimit of a diagram.
    Hocolim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dump_simplices: bool,
    },
    /// Full pipeline: bisimplicial set, comparison maps, triangle, homology.
    CheckTheorem(Common),
    /// Integral homology table of the nerve of the input.
    Homology(Common),
}

enum Failure {
    /// Mathematical failure (validation or theorem check).
    Math,
    /// Unreadable or unusable input.
    Input(String),
    /// Enumeration budget exhausted.
    Budget(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        Failure::Budget(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("NERVEKIT_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        } else {
            eprintln!("error: NERVEKIT_THREADS must be a positive integer");
            return ExitCode::from(2);
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn load(path: &Path) -> Result<InputFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(InputFile::parse(&text)?)
}

/// Stable line-oriented rendering of a JSON value.
fn render_text(v: &serde_json::Value) -> String {
    fn walk(prefix: &str, v: &serde_json::Value, out: &mut String) {
        match v {
            serde_json::Value::Object(map) => {
                for (k, v) in map {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&p, v, out);
                }
            }
            serde_json::Value::Array(items) => {
                if items.is_empty() {
                    out.push_str(&format!("{prefix}: []\n"));
                }
                for (i, v) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), v, out);
                }
            }
            scalar => {
                out.push_str(&format!("{prefix}: {scalar}\n"));
            }
        }
    }
    let mut out = String::new();
    walk("", v, &mut out);
    out
}

fn emit<T: Serialize>(common: &Common, report: &T) -> Result<(), Failure> {
    let value = serde_json::to_value(report).expect("serializable report");
    let rendered = match common.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
        Format::Text => render_text(&value),
    };
    match &common.output {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, rendered)
                .and_then(|_| std::fs::rename(&tmp, path))
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
        }
    }
}

#[derive(Serialize)]
struct SpaceReport {
    input: String,
    construction: String,
    truncation: usize,
    cards: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simplices: Option<Vec<Vec<String>>>,
}

impl SpaceReport {
    fn new(common: &Common, construction: &str, space: &TruncatedSimplicialSet, dump: bool) -> Self {
        SpaceReport {
            input: common.input.display().to_string(),
            construction: construction.to_string(),
            truncation: space.bound,
            cards: space.cards(),
            simplices: dump.then(|| space.labels.clone()),
        }
    }
}

#[derive(Serialize)]
struct HomologyReport {
    input: String,
    construction: String,
    truncation: usize,
    note: String,
    rows: Vec<HomologyRow>,
}

/// The nerve a given input kind naturally carries.
fn space_of(input: &InputFile, common: &Common) -> Result<(String, TruncatedSimplicialSet), Failure> {
    let n = common.truncation;
    let budget = common.budget;
    match input {
        InputFile::Category(f) => Ok((
            "grothendieck-nerve".to_string(),
            nerve(&f.to_category()?, n),
        )),
        InputFile::Monoidal(f) => {
            let m = Arc::new(f.to_monoidal()?);
            Ok((
                "geometric-nerve-monoidal".to_string(),
                geometric_nerve_mon(&m, n, budget)?.space,
            ))
        }
        InputFile::Braided(f) => {
            let b = Arc::new(f.to_braided()?);
            Ok((
                "geometric-nerve-braided".to_string(),
                geometric_nerve_br(&b, n, budget)?.space,
            ))
        }
        InputFile::MonoidalDiagram(f) => {
            let d = f.to_monoidal_diagram()?;
            Ok((
                "diagram-nerve-monoidal".to_string(),
                diagram_nerve_mon(&d, n, budget)?.space,
            ))
        }
        InputFile::BraidedDiagram(f) => {
            let d = f.to_braided_diagram()?;
            Ok((
                "diagram-nerve-braided".to_string(),
                diagram_nerve_br(&d, n, budget)?.space,
            ))
        }
        _ => Err(Failure::Input(
            "functor inputs have no associated nerve; use the validate command".to_string(),
        )),
    }
}

fn check_common(common: &Common) -> Result<(), Failure> {
    if common.truncation == 0 {
        return Err(Failure::Input("--truncation must be at least 1".to_string()));
    }
    if common.budget == 0 {
        return Err(Failure::Input("--budget must be at least 1".to_string()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate(c)
        | Command::CheckTheorem(c)
        | Command::Homology(c)
        | Command::Nerve { common: c, .. }
        | Command::Hocolim { common: c, .. } => check_common(c)?,
    }
    match cli.command {
        Command::Validate(common) => {
            let input = load(&common.input)?;
            let report = match &input {
                InputFile::Category(f) => validate_category(&f.to_category()?),
                InputFile::Monoidal(f) => validate_monoidal(&f.to_monoidal()?),
                InputFile::Braided(f) => validate_braided(&f.to_braided()?),
                InputFile::MonoidalFunctor(f) => validate_monoidal_functor(
                    &f.source.to_monoidal()?,
                    &f.target.to_monoidal()?,
                    &f.functor.to_functor(),
                ),
                InputFile::BraidedFunctor(f) => validate_braided_functor(
                    &f.source.to_braided()?,
                    &f.target.to_braided()?,
                    &f.functor.to_functor(),
                ),
                InputFile::MonoidalDiagram(f) => {
                    validate_monoidal_diagram(&f.to_monoidal_diagram()?)
                }
                InputFile::BraidedDiagram(f) => validate_braided_diagram(&f.to_braided_diagram()?),
            };
            emit(&common, &report)?;
            if report.is_clean() {
                Ok(())
            } else {
                Err(Failure::Math)
            }
        }
        Command::Nerve {
            common,
            dump_simplices,
        } => {
            let input = load(&common.input)?;
            let (construction, space) = space_of(&input, &common)?;
            emit(
                &common,
                &SpaceReport::new(&common, &construction, &space, dump_simplices),
            )
        }
        Command::Hocolim {
            common,
            dump_simplices,
        } => {
            let input = load(&common.input)?;
            let space = match &input {
                InputFile::BraidedDiagram(f) => {
                    let d = f.to_braided_diagram()?;
                    let s = bisimplicial_s_br(&d, common.truncation, common.budget)?;
                    hocolim_br(&s).space
                }
                InputFile::MonoidalDiagram(f) => {
                    let d = f.to_monoidal_diagram()?;
                    let s = bisimplicial_s_mon(&d, common.truncation, common.budget)?;
                    hocolim_mon(&s).space
                }
                _ => {
                    return Err(Failure::Input(
                        "the hocolim command needs a diagram input".to_string(),
                    ))
                }
            };
            emit(
                &common,
                &SpaceReport::new(&common, "homotopy-colimit", &space, dump_simplices),
            )
        }
        Command::CheckTheorem(common) => {
            let input = load(&common.input)?;
            let name = common.input.display().to_string();
            let cert = match &input {
                InputFile::BraidedDiagram(f) => {
                    let d = f.to_braided_diagram()?;
                    let validation = validate_braided_diagram(&d);
                    if !validation.is_clean() {
                        emit(&common, &validation)?;
                        return Err(Failure::Math);
                    }
                    run_certificate(|| theorem_certificate_br(&d, &name, common.truncation, common.budget))?
                }
                InputFile::MonoidalDiagram(f) => {
                    let d = f.to_monoidal_diagram()?;
                    let validation = validate_monoidal_diagram(&d);
                    if !validation.is_clean() {
                        emit(&common, &validation)?;
                        return Err(Failure::Math);
                    }
                    run_certificate(|| theorem_certificate_mon(&d, &name, common.truncation, common.budget))?
                }
                _ => {
                    return Err(Failure::Input(
                        "the check-theorem command needs a diagram input".to_string(),
                    ))
                }
            };
            emit(&common, &cert)?;
            if cert.overall {
                Ok(())
            } else {
                Err(Failure::Math)
            }
        }
        Command::Homology(common) => {
            let input = load(&common.input)?;
            let (construction, space) = space_of(&input, &common)?;
            let cc = normalized_complex(&space);
            let rows = homology_table(&cc, space.bound.saturating_sub(1));
            let report = HomologyReport {
                input: common.input.display().to_string(),
                construction,
                truncation: space.bound,
                note: format!(
                    "degrees above {} are untrusted at truncation {}",
                    space.bound.saturating_sub(2),
                    space.bound
                ),
                rows,
            };
            emit(&common, &report)
        }
    }
}

/// Budget errors surface in the certificate pipeline as stringly-typed
/// failures; recover the budget exit code from the message.
fn run_certificate<F>(f: F) -> Result<nervekit::hocolim::TheoremCertificate, Failure>
where
    F: FnOnce() -> Result<nervekit::hocolim::TheoremCertificate, String>,
{
    f().map_err(|msg| {
        if msg.contains("budget exceeded") {
            Failure::Budget(msg)
        } else {
            Failure::Input(msg)
        }
    })
}
