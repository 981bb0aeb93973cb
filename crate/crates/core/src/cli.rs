//! The `incidence-lie` command line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
//! 3 enumeration bound exceeded.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bijection::{Analyzer, EnumerationOptions, DEFAULT_BOUND};
use crate::classes::class_report_json;
use crate::error::Error;
use crate::families;
use crate::field::Field;
use crate::groups::{structure_report, verify_group};
use crate::poset::{MapKind, Poset, PosetMap};
use crate::verify::{self, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "incidence-lie",
    version,
    about = "Edge bijections and Lie automorphisms of finite posets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Family selector, e.g. crown:3, kmn:2x3, fence:5, star:4, chain:4, example:6
    #[arg(long, global = true, conflicts_with = "file")]
    pub family: Option<String>,
    /// Poset file in the `poset v1` format
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest |B| for exhaustive enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: usize,
    /// Ground field: q or fp:<p>
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetKind {
    M,
    Am,
    P,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size, length, extremal elements and crown status
    Info,
    /// Maximal chains
    Chains,
    /// Classes of linked maximal chains and their supports
    Classes,
    /// Automorphisms and anti-automorphisms
    Aut,
    /// Elements and structure of M, AM or P
    Enumerate {
        #[arg(value_enum)]
        set: SetKind,
    },
    /// Whether every Lie automorphism is proper
    Decide,
    /// Run a verification block: all, or one of the names listed by `verify --help`
    Verify {
        #[arg(default_value = "all", help = verify_help())]
        suite: String,
    },
}

fn verify_help() -> String {
    format!(
        "all, a number 1-{}, or one of: {}",
        verify::SUITES.len(),
        verify::SUITES.join(", ")
    )
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        Error::Parse { .. }
        | Error::Cycle(..)
        | Error::Disconnected(..)
        | Error::Empty
        | Error::InvalidParameter(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

enum CliError {
    Io(std::io::Error),
    Lib(Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult = Result<i32, CliError>;

fn load(g: &GlobalArgs) -> Result<(Poset, Option<usize>), Error> {
    match (&g.family, &g.file) {
        (Some(sel), _) => {
            let crown = sel
                .strip_prefix("crown:")
                .and_then(|n| n.trim().parse().ok());
            Ok((families::from_selector(sel)?, crown))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
            })?;
            Ok((Poset::parse(&text)?, None))
        }
        (None, None) => Err(Error::InvalidParameter(
            "a poset is required: pass --family or --file".into(),
        )),
    }
}

fn labels(p: &Poset, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| p.name(x).to_owned()).collect()
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("serializable")
    )
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let g = &cli.global;
    let opts = EnumerationOptions {
        bound: g.bound,
        jobs: g.jobs,
    };
    if let Command::Verify { suite } = &cli.command {
        return verify_cmd(
            suite,
            &VerifyOptions {
                enumeration: opts,
                field: g.field,
            },
            g.format,
            out,
        );
    }
    let (poset, crown) = load(g)?;
    let a = Analyzer::new(&poset);
    let p = &poset;
    let json = g.format == Format::Json;
    match &cli.command {
        Command::Info => {
            let info = json!({
                "elements": p.len(),
                "strict_pairs": p.num_strict_pairs(),
                "length": p.length(),
                "min": labels(p, p.min_set()),
                "max": labels(p, p.max_set()),
                "maximal_chains": a.chains().len(),
                "weak_crowns": a.crowns().len(),
                "crownless": a.crowns().is_empty(),
            });
            if json {
                json_line(out, &info)?;
            } else {
                writeln!(out, "elements: {}", p.len())?;
                writeln!(out, "strict pairs: {}", p.num_strict_pairs())?;
                writeln!(out, "length: {}", p.length())?;
                writeln!(out, "min: {}", labels(p, p.min_set()).join(" "))?;
                writeln!(out, "max: {}", labels(p, p.max_set()).join(" "))?;
                writeln!(out, "maximal chains: {}", a.chains().len())?;
                writeln!(out, "weak crowns: {}", a.crowns().len())?;
                writeln!(out, "crownless: {}", a.crowns().is_empty())?;
            }
        }
        Command::Chains => {
            let chains: Vec<Vec<String>> = a.chains().iter().map(|c| c.labels(p)).collect();
            if json {
                json_line(out, &json!({ "chains": chains }))?;
            } else {
                for c in chains {
                    writeln!(out, "{}", c.join(" < "))?;
                }
            }
        }
        Command::Classes => {
            let classes = a.chain_classes();
            if json {
                writeln!(out, "{}", class_report_json(p, a.chains(), &classes))?;
            } else {
                for (i, class) in classes.iter().enumerate() {
                    writeln!(
                        out,
                        "class {i}: support {{{}}}",
                        labels(p, &class.support).join(", ")
                    )?;
                    for &c in &class.chains {
                        writeln!(out, "  {}", a.chains()[c].labels(p).join(" < "))?;
                    }
                }
            }
        }
        Command::Aut => {
            let (auts, antis): (Vec<PosetMap>, Vec<PosetMap>) = p
                .poset_maps()
                .into_iter()
                .partition(|m| m.kind() == MapKind::Iso);
            let images = |maps: &[PosetMap]| -> Vec<Vec<String>> {
                maps.iter().map(|m| labels(p, m.perm())).collect()
            };
            if json {
                json_line(
                    out,
                    &json!({
                        "elements": p.names(),
                        "automorphisms": images(&auts),
                        "anti_automorphisms": images(&antis),
                    }),
                )?;
            } else {
                writeln!(out, "elements: {}", p.names().join(" "))?;
                writeln!(out, "automorphisms: {}", auts.len())?;
                for m in images(&auts) {
                    writeln!(out, "  {}", m.join(" "))?;
                }
                writeln!(out, "anti-automorphisms: {}", antis.len())?;
                for m in images(&antis) {
                    writeln!(out, "  {}", m.join(" "))?;
                }
            }
        }
        Command::Enumerate { set } => {
            let elements = match set {
                SetKind::M => a.enumerate_m(&opts)?,
                SetKind::Am => a.enumerate_am(&opts)?,
                SetKind::P => a.enumerate_p(),
            };
            let name = match set {
                SetKind::M => "m",
                SetKind::Am => "am",
                SetKind::P => "p",
            };
            let group = verify_group(elements.clone())?;
            let report = structure_report(&group, p, crown);
            if json {
                let pairs: Vec<_> = elements.iter().map(|t| t.json_pairs(p)).collect();
                json_line(
                    out,
                    &json!({ "set": name, "order": elements.len(), "elements": pairs, "structure": report }),
                )?;
            } else {
                writeln!(out, "{}: order {}", name.to_uppercase(), elements.len())?;
                let hist: Vec<String> = report
                    .element_orders
                    .iter()
                    .map(|(k, v)| format!("{k}:{v}"))
                    .collect();
                writeln!(out, "element orders: {}", hist.join(" "))?;
                if let Some(d) = report.dihedral {
                    writeln!(
                        out,
                        "dihedral of order {}, rotation of order {d}",
                        report.order
                    )?;
                }
                writeln!(out, "generators: {}", report.generators.len())?;
                for (i, t) in elements.iter().enumerate() {
                    writeln!(out, "#{i}")?;
                    write!(out, "{}", t.display(p))?;
                }
            }
        }
        Command::Decide => {
            let v = a.decide_all_proper(&opts)?;
            if json {
                writeln!(out, "{}", v.to_json(p))?;
            } else {
                writeln!(out, "all proper: {}", v.all_proper)?;
                writeln!(out, "|AM| = {}, |P| = {}", v.am_order, v.p_order)?;
                writeln!(out, "chain classes: {}", v.class_count)?;
                if let Some(t) = &v.counterexample {
                    writeln!(out, "admissible bijection that is not proper:")?;
                    write!(out, "{}", t.display(p))?;
                }
            }
        }
        Command::Verify { .. } => unreachable!("handled above"),
    }
    Ok(EXIT_OK)
}

fn verify_cmd(suite: &str, opts: &VerifyOptions, format: Format, out: &mut dyn Write) -> CliResult {
    let ids = verify::suite_ids(suite)?;
    let mut all_passed = true;
    let mut reports = Vec::new();
    for k in ids {
        let outcome = verify::run_criterion(k, opts)?;
        all_passed &= outcome.passed();
        if format == Format::Json {
            reports.push(json!({
                "criterion": outcome.criterion,
                "name": outcome.name,
                "passed": outcome.passed(),
                "summary": outcome.summary,
                "failures": outcome.failures,
            }));
        } else {
            let tag = if outcome.passed() { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "[{tag}] {:>2} {}: {}",
                outcome.criterion, outcome.name, outcome.summary
            )?;
            for f in &outcome.failures {
                writeln!(out, "       {f}")?;
            }
        }
    }
    if format == Format::Json {
        json_line(out, &json!({ "passed": all_passed, "criteria": reports }))?;
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILURE })
}
