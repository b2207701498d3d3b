//! Command-line surface. Exit codes encode the verdict: 0 for yes/success,
//! 1 for a mathematical "no", 2 for usage or input errors.

use crate::families::{self, FamilyDescriptor};
use crate::graph::{ParityLabelling, Sign, SignedGraph};
use crate::io::{export_dot, format_signed_edge_list, parse_signed_edge_list};
use crate::oracle::{oracle_is_parity_signed, oracle_rna};
use crate::recognition::{is_parity_signed, RecognitionResult};
use crate::rna::{rna_exact, rna_heuristic, CutReport, DEFAULT_EXACT_LIMIT};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;

/// Environment variable overriding the default exact-solver order bound.
pub const EXACT_LIMIT_ENV: &str = "PARITYCUT_EXACT_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "paritycut",
    version,
    about = "Parity signed graph recognition and near-balanced minimum cuts"
)]
struct Cli {
    /// Output format for analysis subcommands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a signed edge-list document is a parity signed graph.
    Check { file: PathBuf },
    /// Compute the rna and adhika numbers of the underlying graph.
    Rna {
        file: PathBuf,
        /// Order bound for the exact solver (default 28, or the
        /// PARITYCUT_EXACT_LIMIT environment variable).
        #[arg(long)]
        exact_limit: Option<usize>,
        /// Use seeded local search instead of the exact solver.
        #[arg(long)]
        heuristic: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Local-search restarts.
        #[arg(long, default_value_t = 20)]
        iterations: usize,
    },
    /// Detect a known shape and report its closed-form verdict alongside the
    /// general one.
    Classify { file: PathBuf },
    /// Emit the edge-list document of a named family.
    ///
    /// Families: path N | cycle N | star M N | bistar-plus M N |
    /// bistar-allneg M N | wheel N | complete-bipartite-allneg M N |
    /// ladder N | corona FILE T
    Gen {
        family: String,
        params: Vec<String>,
        /// Replace the generated signs, one `+`/`-` per edge in document
        /// order.
        #[arg(long)]
        sign_pattern: Option<String>,
    },
    /// Emit the parity complement under the given witness labels.
    Complement {
        file: PathBuf,
        /// Comma-separated labels, one per vertex: L1,L2,...,Ln
        #[arg(long)]
        labels: String,
    },
    /// Brute-force verdict and rna number (small graphs only).
    Oracle { file: PathBuf },
    /// Emit DOT with positive edges solid and negative edges dashed.
    ExportDot {
        file: PathBuf,
        /// Optional comma-separated labels used as vertex names.
        #[arg(long)]
        labels: Option<String>,
    },
}

/// Machine-readable report; every key is always present.
#[derive(Debug, Serialize)]
struct Report {
    verdict: Option<String>,
    reason: Option<String>,
    witness: Option<Vec<usize>>,
    sigma_minus: Option<usize>,
    sigma_plus: Option<usize>,
    method: Option<String>,
}

impl Report {
    fn empty() -> Self {
        Report {
            verdict: None,
            reason: None,
            witness: None,
            sigma_minus: None,
            sigma_plus: None,
            method: None,
        }
    }
}

/// Runs the CLI on the given arguments (without the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run_cli(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(
        std::iter::once("paritycut".to_string()).chain(args.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    match &cli.command {
        Command::Check { file } => cmd_check(&read_graph(file)?, cli.format, out),
        Command::Rna {
            file,
            exact_limit,
            heuristic,
            seed,
            iterations,
        } => cmd_rna(
            &read_graph(file)?,
            *exact_limit,
            *heuristic,
            *seed,
            *iterations,
            cli.format,
            out,
        ),
        Command::Classify { file } => cmd_classify(&read_graph(file)?, cli.format, out),
        Command::Gen {
            family,
            params,
            sign_pattern,
        } => cmd_gen(family, params, sign_pattern.as_deref(), out),
        Command::Complement { file, labels } => cmd_complement(&read_graph(file)?, labels, out),
        Command::Oracle { file } => cmd_oracle(&read_graph(file)?, cli.format, out),
        Command::ExportDot { file, labels } => {
            cmd_export_dot(&read_graph(file)?, labels.as_deref(), out)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<SignedGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_signed_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_labels(list: &str) -> Result<ParityLabelling, String> {
    let labels: Vec<usize> = list
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad label `{t}`"))
        })
        .collect::<Result<_, _>>()?;
    ParityLabelling::new(labels).map_err(|e| e.to_string())
}

fn emit(report: &Report, out: &mut dyn Write) -> Result<(), String> {
    let json = serde_json::to_string(report).map_err(|e| e.to_string())?;
    writeln!(out, "{json}").map_err(|e| e.to_string())
}

fn verdict_word(yes: bool) -> String {
    if yes {
        "Yes".into()
    } else {
        "No".into()
    }
}

fn cmd_check(s: &SignedGraph, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let result = is_parity_signed(s).map_err(|e| e.to_string())?;
    let code = i32::from(!result.is_yes());
    match format {
        Format::Text => match &result {
            RecognitionResult::Yes { witness, .. } => {
                writeln!(out, "Yes").map_err(|e| e.to_string())?;
                writeln!(out, "witness: {}", join(witness.labels())).map_err(|e| e.to_string())?;
            }
            RecognitionResult::No { reason } => {
                writeln!(out, "No: {reason}").map_err(|e| e.to_string())?;
            }
        },
        Format::Json => {
            let report = Report {
                verdict: Some(verdict_word(result.is_yes())),
                reason: result.reason().map(|r| r.to_string()),
                witness: result.witness().map(|w| w.labels().to_vec()),
                ..Report::empty()
            };
            emit(&report, out)?;
        }
    }
    Ok(code)
}

fn resolve_limit(flag: Option<usize>) -> Result<usize, String> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(EXACT_LIMIT_ENV) {
        Ok(value) => value
            .parse()
            .map_err(|_| format!("bad {EXACT_LIMIT_ENV} value `{value}`")),
        Err(_) => Ok(DEFAULT_EXACT_LIMIT),
    }
}

fn cmd_rna(
    s: &SignedGraph,
    exact_limit: Option<usize>,
    heuristic: bool,
    seed: u64,
    iterations: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let g = s.graph();
    let report: CutReport = if heuristic {
        rna_heuristic(g, seed, iterations)
    } else {
        let limit = resolve_limit(exact_limit)?;
        rna_exact(g, limit).map_err(|e| e.to_string())?
    };
    let sigma_minus = report.cut_size;
    let sigma_plus = g.edge_count() - sigma_minus;
    match format {
        Format::Text => {
            writeln!(
                out,
                "sigma-={sigma_minus} sigma+={sigma_plus} method={}",
                report.method.name()
            )
            .map_err(|e| e.to_string())?;
            let block0: Vec<usize> = report.bipartition.block(0).iter().map(|v| v + 1).collect();
            let block1: Vec<usize> = report.bipartition.block(1).iter().map(|v| v + 1).collect();
            writeln!(out, "bipartition: {} | {}", join(&block0), join(&block1))
                .map_err(|e| e.to_string())?;
        }
        Format::Json => {
            let json = Report {
                sigma_minus: Some(sigma_minus),
                sigma_plus: Some(sigma_plus),
                method: Some(report.method.name().into()),
                ..Report::empty()
            };
            emit(&json, out)?;
        }
    }
    Ok(0)
}

fn cmd_classify(s: &SignedGraph, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let shape = families::detect_shape(s);
    let closed_form = families::closed_form_verdict(s).map_err(|e| e.to_string())?;
    let general = is_parity_signed(s).map_err(|e| e.to_string())?;
    if let Some(cf) = closed_form {
        debug_assert_eq!(cf, general.is_yes());
    }
    let code = i32::from(!general.is_yes());
    match format {
        Format::Text => {
            writeln!(out, "shape: {}", shape.name()).map_err(|e| e.to_string())?;
            let cf = match closed_form {
                Some(v) => verdict_word(v),
                None => "n/a".into(),
            };
            writeln!(out, "closed-form: {cf}").map_err(|e| e.to_string())?;
            writeln!(out, "general: {}", verdict_word(general.is_yes()))
                .map_err(|e| e.to_string())?;
        }
        Format::Json => {
            let report = Report {
                verdict: Some(verdict_word(general.is_yes())),
                reason: general.reason().map(|r| r.to_string()),
                witness: general.witness().map(|w| w.labels().to_vec()),
                method: Some(shape.name().into()),
                ..Report::empty()
            };
            emit(&report, out)?;
        }
    }
    Ok(code)
}

fn cmd_gen(
    family: &str,
    params: &[String],
    sign_pattern: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let number = |i: usize| -> Result<usize, String> {
        params.get(i).and_then(|p| p.parse().ok()).ok_or(format!(
            "family `{family}` needs numeric parameter {}",
            i + 1
        ))
    };
    let want = |count: usize| -> Result<(), String> {
        if params.len() == count {
            Ok(())
        } else {
            Err(format!("family `{family}` takes {count} parameter(s)"))
        }
    };
    let descriptor = match family {
        "path" => {
            want(1)?;
            FamilyDescriptor::Path { n: number(0)? }
        }
        "cycle" => {
            want(1)?;
            FamilyDescriptor::Cycle { n: number(0)? }
        }
        "star" => {
            want(2)?;
            FamilyDescriptor::Star {
                positive: number(0)?,
                negative: number(1)?,
            }
        }
        "bistar-plus" => {
            want(2)?;
            FamilyDescriptor::BistarPlus {
                positive: number(0)?,
                negative: number(1)?,
            }
        }
        "bistar-allneg" => {
            want(2)?;
            FamilyDescriptor::BistarAllNeg {
                left: number(0)?,
                right: number(1)?,
            }
        }
        "wheel" => {
            want(1)?;
            FamilyDescriptor::Wheel { order: number(0)? }
        }
        "complete-bipartite-allneg" => {
            want(2)?;
            FamilyDescriptor::CompleteBipartiteAllNeg {
                left: number(0)?,
                right: number(1)?,
            }
        }
        "ladder" => {
            want(1)?;
            FamilyDescriptor::Ladder { rungs: number(0)? }
        }
        "corona" => {
            want(2)?;
            let base = read_graph(&PathBuf::from(&params[0]))?;
            let pendants = params[1]
                .parse()
                .map_err(|_| "corona needs a numeric pendant count".to_string())?;
            FamilyDescriptor::Corona { base, pendants }
        }
        other => return Err(format!("unknown family `{other}`")),
    };
    let mut graph = families::generate(&descriptor).map_err(|e| e.to_string())?;
    if let Some(pattern) = sign_pattern {
        let signs: Vec<Sign> = pattern
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Positive),
                '-' => Ok(Sign::Negative),
                other => Err(format!("bad sign `{other}` in pattern")),
            })
            .collect::<Result<_, _>>()?;
        graph = graph.resign(&signs).map_err(|e| e.to_string())?;
    }
    write!(out, "{}", format_signed_edge_list(&graph)).map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_complement(s: &SignedGraph, labels: &str, out: &mut dyn Write) -> Result<i32, String> {
    let labelling = parse_labels(labels)?;
    let complement = crate::rna::parity_complement(s, &labelling).map_err(|e| e.to_string())?;
    write!(out, "{}", format_signed_edge_list(&complement)).map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_oracle(s: &SignedGraph, format: Format, out: &mut dyn Write) -> Result<i32, String> {
    let yes = oracle_is_parity_signed(s).map_err(|e| e.to_string())?;
    let sigma_minus = oracle_rna(s.graph()).map_err(|e| e.to_string())?;
    let sigma_plus = s.edge_count() - sigma_minus;
    match format {
        Format::Text => {
            writeln!(
                out,
                "oracle: {} sigma-={sigma_minus} sigma+={sigma_plus}",
                verdict_word(yes)
            )
            .map_err(|e| e.to_string())?;
        }
        Format::Json => {
            let report = Report {
                verdict: Some(verdict_word(yes)),
                sigma_minus: Some(sigma_minus),
                sigma_plus: Some(sigma_plus),
                method: Some("oracle".into()),
                ..Report::empty()
            };
            emit(&report, out)?;
        }
    }
    Ok(i32::from(!yes))
}

fn cmd_export_dot(
    s: &SignedGraph,
    labels: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let labelling = labels.map(parse_labels).transpose()?;
    let dot = export_dot(s, labelling.as_ref()).map_err(|e| e.to_string())?;
    write!(out, "{dot}").map_err(|e| e.to_string())?;
    Ok(0)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
