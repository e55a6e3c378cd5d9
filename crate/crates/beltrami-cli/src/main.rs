//! `beltrami`: analyze k-linear maps over Q(sqrt(d)) and replay test
//! vectors. Reports are single JSON documents on standard output; every
//! rational is an exact string, never a float.

use beltrami_cli::{analyze, exit_code, run_vectors, MapSpec};
use beltrami_core::rational::{parse_rational, Rational};
use beltrami_core::{EndoMatrix, Error, ExtScalar};
use clap::{ArgGroup, Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "beltrami",
    version,
    about = "Conformal dilatation and Beltrami forms over Q(sqrt(d))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one map: L/A split, Beltrami form, conformal dilatation
    Analyze(AnalyzeArgs),
    /// Replay a file of {input, expected} records and compare exactly
    Vectors(VectorsArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("map").required(true).args(["pair", "matrix"])))]
struct AnalyzeArgs {
    /// Field discriminant d: any nonzero non-square rational, e.g. -1 or 8/9
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
    d: String,

    /// Map as the pair (a, b) over K, given as a.a a.b b.a b.b
    #[arg(long, num_args = 4, value_names = ["A_A", "A_B", "B_A", "B_B"], allow_hyphen_values = true)]
    pair: Option<Vec<String>>,

    /// Map as its row-major 2x2 matrix over k, given as f11 f12 f21 f22
    #[arg(long, num_args = 4, value_names = ["F11", "F12", "F21", "F22"], allow_hyphen_values = true)]
    matrix: Option<Vec<String>>,

    /// Pretty-print the JSON report
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct VectorsArgs {
    /// Vector file: one JSON record per line, or one top-level JSON array
    #[arg(long, value_name = "PATH")]
    file: PathBuf,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Vectors(args) => run_vector_replay(args),
    };
    std::process::exit(code);
}

/// Write one line to stdout. A closed pipe (`beltrami ... | head`) means the
/// consumer has everything it wanted, so stop quietly instead of panicking.
fn print_line(text: &str) {
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").and_then(|()| out.flush()).is_err() {
        std::process::exit(0);
    }
}

/// Diagnostics are best effort; a closed stderr must not change the outcome.
fn diagnostic(text: &str) {
    let _ = writeln!(std::io::stderr().lock(), "{text}");
}

fn run_analyze(args: AnalyzeArgs) -> i32 {
    let d = match parse_flag_rational("--d", &args.d) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let spec = if let Some(parts) = &args.pair {
        match parse_four("--pair", ["a.a", "a.b", "b.a", "b.b"], parts) {
            Ok([aa, ab, ba, bb]) => {
                MapSpec::Pair(ExtScalar::new(aa, ab), ExtScalar::new(ba, bb))
            }
            Err(code) => return code,
        }
    } else if let Some(parts) = &args.matrix {
        match parse_four("--matrix", ["f11", "f12", "f21", "f22"], parts) {
            Ok([f11, f12, f21, f22]) => MapSpec::Matrix(EndoMatrix::new(f11, f12, f21, f22)),
            Err(code) => return code,
        }
    } else {
        unreachable!("clap enforces the pair/matrix group");
    };

    match analyze(d, spec) {
        Ok(report) => {
            let json = if args.pretty {
                serde_json::to_string_pretty(&report)
            } else {
                serde_json::to_string(&report)
            }
            .expect("reports always serialize");
            print_line(&json);
            0
        }
        Err(e) => {
            match &e {
                Error::ZeroDiscriminant | Error::SquareDiscriminant(_) => {
                    diagnostic(&format!("error in --d: {e}"))
                }
                Error::ZeroMap => diagnostic(&format!("error in the map argument: {e}")),
                _ => diagnostic(&format!("error: {e}")),
            }
            exit_code(&e)
        }
    }
}

fn run_vector_replay(args: VectorsArgs) -> i32 {
    let text = match std::fs::read_to_string(&args.file) {
        Ok(text) => text,
        Err(e) => {
            diagnostic(&format!(
                "error in --file: cannot read {}: {e}",
                args.file.display()
            ));
            return 2;
        }
    };
    match run_vectors(&text) {
        Ok(summary) => {
            for failure in &summary.failures {
                diagnostic(&format!("vector {}: {}", failure.index, failure.reason));
            }
            print_line(&format!("{}/{} passed", summary.passed, summary.total));
            if summary.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            diagnostic(&format!("error in --file: {e}"));
            exit_code(&e)
        }
    }
}

fn parse_flag_rational(flag: &str, text: &str) -> Result<Rational, i32> {
    parse_rational(text).map_err(|e| {
        diagnostic(&format!("error in {flag}: {e}"));
        2
    })
}

fn parse_four(flag: &str, names: [&str; 4], parts: &[String]) -> Result<[Rational; 4], i32> {
    debug_assert_eq!(parts.len(), 4, "clap enforces num_args = 4");
    let mut out = Vec::with_capacity(4);
    for (name, part) in names.iter().zip(parts) {
        out.push(parse_flag_rational(&format!("{flag} ({name})"), part)?);
    }
    Ok(out.try_into().expect("exactly four values"))
}
