//! Command-line front end.
//!
//! Every command writes to caller-supplied streams and returns a process exit
//! status, so the binary is a thin wrapper and the commands are testable
//! in-process.

mod atlas;
mod exercises;
mod report;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::engine::{classify, verify_certificate, Certificate, EngineError, Verdict, DEFAULT_BOUND};
use crate::numtheory::set_default_seed;
use crate::theta::{parse_theta, ThetaClass, ThetaError};

pub use atlas::{atlas_records, write_atlas, AtlasRecord};
pub use exercises::{run_exercises, ExerciseOutcome};
pub use report::{exact_coordinate, witness_report, WitnessReport};

/// Process exit statuses. These are a stable contract.
pub mod exit {
    pub const GOOD: i32 = 0;
    pub const NOT_GOOD: i32 = 1;
    pub const UNKNOWN: i32 = 2;
    /// The side length expression did not parse.
    pub const PARSE_ERROR: i32 = 64;
    /// The certificate file is not a valid schema-1 document.
    pub const MALFORMED: i32 = 65;
    pub const NO_INPUT: i32 = 66;
    /// Factoring budget exceeded or another internal limit hit.
    pub const SOFTWARE: i32 = 70;
    pub const IO_ERROR: i32 = 74;
}

/// Default number of certified decimal digits for numeric witness coordinates.
pub const DEFAULT_PRECISION: u32 = 50;

#[derive(Debug, Parser)]
#[command(
    name = "equidist",
    version,
    about = "Decide whether an equilateral triangle of side θ has a point at rational distance from all three vertices",
    after_help = "EXAMPLES:\n\
                  \n  equidist classify 'sqrt(7)'\
                  \n  equidist classify --json 'sqrt(25+12*sqrt(3))' > cert.json\
                  \n  equidist verify cert.json\
                  \n  equidist witness 'sqrt(3)'\
                  \n  equidist atlas --max-side 40 --format csv --out atlas.csv\
                  \n  equidist exercises\n\
                  \nEXIT STATUS:\n\
                  \n  0 good / verified, 1 not good / verification failed, 2 unknown,\
                  \n  64 unparsable side length, 65 malformed certificate"
)]
pub struct Cli {
    /// Seed for the randomized factorizer (results never depend on it, only running time)
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a side length and print its certificate
    Classify {
        /// Side length, e.g. `sqrt(7)`, `3/2*sqrt(5)`, `sqrt(25+12*sqrt(3))`, `1+qroot(2)`
        expr: String,
        /// Longest triangle side searched for biquadratic side lengths
        #[arg(long, env = "EQUIDIST_BOUND", default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        /// Print only the JSON certificate
        #[arg(long)]
        json: bool,
    },
    /// Print a rational-distance point and its distances
    Witness {
        expr: String,
        #[arg(long, env = "EQUIDIST_BOUND", default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        /// Certified decimal digits for numeric coordinates
        #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = clap::value_parser!(u32).range(1..=10_000))]
        precision: u32,
        #[arg(long)]
        json: bool,
    },
    /// Re-check a JSON certificate without consulting the classifier
    Verify {
        /// Certificate file (`-` for stdin)
        path: PathBuf,
    },
    /// Export the triangle-derived good side lengths
    Atlas {
        /// Longest side of the enumerated primitive triangles
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=crate::triangles::MAX_SIDE))]
        max_side: u64,
        #[arg(long, value_enum, default_value_t = AtlasFormat::Jsonl)]
        format: AtlasFormat,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the six closing exercises
    Exercises {
        #[arg(long, env = "EQUIDIST_BOUND", default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AtlasFormat {
    Jsonl,
    Csv,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    if let Some(seed) = cli.seed {
        set_default_seed(seed);
    }
    let result = match cli.command {
        Command::Classify { expr, bound, json } => cmd_classify(&expr, bound, json, out, err),
        Command::Witness { expr, bound, precision, json } => cmd_witness(&expr, bound, precision, json, out, err),
        Command::Verify { path } => cmd_verify(&path, out, err),
        Command::Atlas { max_side, format, out: path } => cmd_atlas(max_side, format, path.as_deref(), out, err),
        Command::Exercises { bound } => cmd_exercises(bound, out),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        exit::IO_ERROR
    })
}

pub fn verdict_exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Good => exit::GOOD,
        Verdict::NotGood => exit::NOT_GOOD,
        Verdict::Unknown => exit::UNKNOWN,
    }
}

fn report_parse_error(expr: &str, e: &ThetaError, err: &mut dyn Write) -> io::Result<i32> {
    writeln!(err, "error: cannot parse `{expr}`: {e}")?;
    if let Some(pos) = e.position() {
        writeln!(err, "  {expr}")?;
        writeln!(err, "  {:>width$}", "^", width = pos)?;
    }
    Ok(exit::PARSE_ERROR)
}

/// Parses and classifies, reporting failures; `Err(code)` carries the exit status.
fn parse_and_classify(expr: &str, bound: u64, err: &mut dyn Write) -> io::Result<Result<Certificate, i32>> {
    let theta: ThetaClass = match parse_theta(expr) {
        Ok(t) => t,
        Err(e) => return report_parse_error(expr, &e, err).map(Err),
    };
    match classify(&theta, bound) {
        Ok(c) => Ok(Ok(c)),
        Err(e) => {
            writeln!(err, "error: {}", describe_engine_error(&e))?;
            Ok(Err(exit::SOFTWARE))
        }
    }
}

fn describe_engine_error(e: &EngineError) -> String {
    format!("classification aborted: {e}")
}

pub fn cmd_classify(expr: &str, bound: u64, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let cert = match parse_and_classify(expr, bound, err)? {
        Ok(c) => c,
        Err(code) => return Ok(code),
    };
    if json {
        writeln!(out, "{}", cert.to_json())?;
    } else {
        report::write_summary(&cert, out)?;
        writeln!(out, "certificate:")?;
        writeln!(out, "{}", cert.to_json())?;
    }
    Ok(verdict_exit_code(cert.verdict()))
}

pub fn cmd_witness(
    expr: &str,
    bound: u64,
    precision: u32,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let cert = match parse_and_classify(expr, bound, err)? {
        Ok(c) => c,
        Err(code) => return Ok(code),
    };
    if cert.verdict() != Verdict::Good {
        report::write_summary(&cert, err)?;
        writeln!(err, "error: no witness: side length is not known to be good")?;
        return Ok(verdict_exit_code(cert.verdict()));
    }
    let report = match witness_report(&cert, precision) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(exit::SOFTWARE);
        }
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"))?;
    } else {
        report.write_text(out)?;
    }
    Ok(exit::GOOD)
}

pub fn cmd_verify(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let text = if path == Path::new("-") { io::read_to_string(io::stdin()) } else { fs::read_to_string(path) };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            return Ok(exit::NO_INPUT);
        }
    };
    let cert = match Certificate::from_json(&text) {
        Ok(c) => c,
        Err(e) => {
            writeln!(err, "error: malformed certificate: {e}")?;
            return Ok(exit::MALFORMED);
        }
    };
    match verify_certificate(&cert) {
        Ok(()) => {
            writeln!(out, "OK: {} is {} ({})", cert.theta, cert.verdict().as_str(), cert.reason_code())?;
            Ok(exit::GOOD)
        }
        Err(e) => {
            writeln!(out, "FAILED: {e}")?;
            Ok(exit::NOT_GOOD)
        }
    }
}

pub fn cmd_atlas(
    max_side: u64,
    format: AtlasFormat,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    match path {
        None => {
            write_atlas(max_side, format, out)?;
        }
        Some(p) => {
            let file = match fs::File::create(p) {
                Ok(f) => f,
                Err(e) => {
                    writeln!(err, "error: cannot create {}: {e}", p.display())?;
                    return Ok(exit::IO_ERROR);
                }
            };
            let mut w = io::BufWriter::new(file);
            let n = write_atlas(max_side, format, &mut w)?;
            w.flush()?;
            writeln!(err, "wrote {n} records to {}", p.display())?;
        }
    }
    Ok(exit::GOOD)
}

pub fn cmd_exercises(bound: u64, out: &mut dyn Write) -> io::Result<i32> {
    let outcomes = run_exercises(bound);
    for o in &outcomes {
        writeln!(out, "Exercise {}: {} - {}", o.number, if o.passed { "PASS" } else { "FAIL" }, o.title)?;
        for line in &o.details {
            writeln!(out, "    {line}")?;
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    writeln!(out, "{passed}/{} exercises passed", outcomes.len())?;
    Ok(if passed == outcomes.len() { exit::GOOD } else { exit::NOT_GOOD })
}
