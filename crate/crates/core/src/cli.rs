//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 resource limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cohnwords::christoffel;
use crate::error::Error;
use crate::fenceposet::{cf_numden, n_of};
use crate::gmtree::{gm_enumerate, GmParams, Sigma};
use crate::matrix2::{gc_recursive, monodromy, monodromy_completed, Mat2};
use crate::rational::ExtRational;
use crate::signseq::{gm_sequence, strongly_admissible};
use crate::svg::{render, Annotation, SvgOptions};
use crate::verify::verify_slope;
use crate::words::{omega_completed, omega_geometric, CompletionMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "markov-words", version, about = "Words, sequences and matrices attached to Farey slopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `matrix` defaults to json, everything else to text.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Params {
    /// Coefficients k1,k2,k3.
    #[arg(long, default_value = "0,0,0", value_parser = parse_k)]
    k: [u64; 3],

    /// Images sigma(1),sigma(2),sigma(3).
    #[arg(long, default_value = "1,2,3", value_parser = parse_sigma)]
    sigma: Sigma,
}

impl Params {
    fn gm(&self) -> GmParams {
        GmParams::new(self.k, self.sigma)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Monodromy,
    Completed,
    Cohn,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print omega_t, or the completed word with --completed.
    Word {
        #[arg(long, value_parser = parse_slope)]
        t: ExtRational,
        #[arg(long)]
        completed: bool,
    },
    /// Print a matrix attached to t.
    Matrix {
        which: Which,
        #[arg(long, value_parser = parse_slope)]
        t: ExtRational,
        #[command(flatten)]
        params: Params,
    },
    /// Print the GM sequence, or the strongly admissible one with --completed.
    Sequence {
        #[arg(long, value_parser = parse_slope)]
        t: ExtRational,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        completed: bool,
    },
    /// Print the Cohn word of t.
    Cohnword {
        #[arg(long, value_parser = parse_slope)]
        t: ExtRational,
    },
    /// Dump the labeled GM tree breadth-first.
    Gmtree {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
    /// Count order ideals of the fence of a comma-separated sequence.
    Ideals {
        #[arg(value_parser = parse_sequence)]
        sequence: Sequence,
    },
    /// Run every cross-identity for t.
    Verify {
        #[arg(long, value_parser = parse_slope)]
        t: ExtRational,
        #[command(flatten)]
        params: Params,
    },
    /// Render the segment as SVG.
    Svg {
        #[arg(long, value_parser = parse_slope)]
        t: ExtRational,
        #[command(flatten)]
        params: Params,
        /// Annotate signs instead of letters.
        #[arg(long)]
        signs: bool,
        /// Draw the shifted segment.
        #[arg(long)]
        completed: bool,
    },
}

fn parse_slope(s: &str) -> Result<ExtRational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_k(s: &str) -> Result<[u64; 3], String> {
    GmParams::parse_k(s).map_err(|e| e.to_string())
}

fn parse_sigma(s: &str) -> Result<Sigma, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A comma-separated list of positive integers.
#[derive(Clone, Debug)]
struct Sequence(Vec<u64>);

fn parse_sequence(s: &str) -> Result<Sequence, String> {
    if s.trim().is_empty() {
        return Ok(Sequence(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| format!("{p:?} is not a nonnegative integer")))
        .collect::<Result<_, _>>()
        .map(Sequence)
}

enum Failure {
    Lib(Error),
    Verify(serde_json::Value),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::CrossCheck(_) | Error::Invariant(_) | Error::Integrality(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn execute(cmd: &Command, format: Option<Format>) -> Result<String, Failure> {
    let text = format.unwrap_or(Format::Text) == Format::Text;
    Ok(match cmd {
        Command::Word { t, completed } => {
            let w = if *completed {
                omega_completed(*t, CompletionMode::Geometric)?
            } else {
                omega_geometric(*t)
            };
            if text {
                w.to_string()
            } else {
                pretty(&json!({ "t": t, "completed": completed, "word": w }))
            }
        }
        Command::Matrix { which, t, params } => {
            let p = params.gm();
            let m: Mat2 = match which {
                Which::Monodromy => monodromy(*t, &p)?,
                Which::Completed => monodromy_completed(*t, &p)?,
                Which::Cohn => gc_recursive(*t, &p)?,
            };
            if format == Some(Format::Text) {
                m.to_string()
            } else {
                pretty(&serde_json::to_value(&m).expect("matrices serialize"))
            }
        }
        Command::Sequence { t, params, completed } => {
            let p = params.gm();
            let s = if *completed {
                strongly_admissible(*t, &p)?
            } else {
                gm_sequence(*t, &p)?
            };
            if text {
                s.to_string()
            } else {
                pretty(&serde_json::to_value(&s).expect("sequences serialize"))
            }
        }
        Command::Cohnword { t } => {
            let c = christoffel(*t);
            if text {
                c.to_string()
            } else {
                pretty(&json!({ "t": t, "word": c }))
            }
        }
        Command::Gmtree { params, depth } => {
            let p = params.gm();
            let tree = gm_enumerate(*depth, &p)?;
            if text {
                let mut lines = Vec::with_capacity(tree.len());
                let mut level_size = 1;
                let mut level = 0;
                let mut seen = 0;
                for (f, v) in &tree {
                    lines.push(format!("{level}\t{}\t{v}", f.mid));
                    seen += 1;
                    if seen == level_size {
                        seen = 0;
                        level += 1;
                        level_size *= 2;
                    }
                }
                lines.join("\n")
            } else {
                let items: Vec<_> = tree
                    .iter()
                    .map(|(f, v)| json!({ "t": f.mid, "triple": v }))
                    .collect();
                pretty(&json!({ "k": p.k, "sigma": p.sigma.images(), "depth": depth, "vertices": items }))
            }
        }
        Command::Ideals { sequence: Sequence(sequence) } => {
            let n = n_of(sequence)?;
            if text {
                n.to_string()
            } else {
                let (num, den) = cf_numden(sequence)?;
                pretty(&json!({
                    "sequence": sequence,
                    "ideals": n.to_string(),
                    "cf_numerator": num.to_string(),
                    "cf_denominator": den.to_string(),
                }))
            }
        }
        Command::Verify { t, params } => {
            let report = verify_slope(*t, &params.gm())?;
            if let Some(c) = report.first_failure() {
                return Err(Failure::Verify(json!({
                    "status": "FAIL",
                    "t": t,
                    "k": report.k,
                    "sigma": report.sigma,
                    "identity": c.name,
                    "detail": c.detail,
                })));
            }
            if text {
                let mut lines: Vec<String> = report
                    .checks
                    .iter()
                    .map(|c| format!("PASS  {}", c.name))
                    .collect();
                let conj = &report.denominator_conjecture;
                lines.push(format!(
                    "{}  {} (conjecture, reported only)",
                    if conj.passed { "HOLDS" } else { "FAILS" },
                    conj.name
                ));
                lines.push("PASS (all identities)".to_string());
                lines.join("\n")
            } else {
                pretty(&serde_json::to_value(&report).expect("reports serialize"))
            }
        }
        Command::Svg { t, params, signs, completed } => {
            let opts = SvgOptions {
                shifted: *completed,
                annotation: if *signs { Annotation::Signs } else { Annotation::Letters },
            };
            let mut s = render(*t, &params.gm(), opts)?;
            // the document already ends in a newline
            s.pop();
            s
        }
    })
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let msg = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{msg}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{msg}");
                    EXIT_USAGE
                }
            };
        }
    };

    let result = execute(&cli.command, cli.format).and_then(|body| {
        match &cli.out {
            Some(path) => std::fs::write(path, format!("{body}\n")).map_err(Failure::Io),
            None => writeln!(out, "{body}").map_err(Failure::Io),
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Verify(record)) => {
            let _ = writeln!(err, "{}", serde_json::to_string(&record).expect("json values serialize"));
            EXIT_VERIFY
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
