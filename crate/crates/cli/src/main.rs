//! `skewpoly`: batch front end. Reads one JSON job, writes one JSON result.
//!
//! Exit status is 0 on success, 1 when the mathematics rejects the request
//! and 2 when the input is malformed.

mod job;
mod selftest;
mod verbs;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};
use skewpoly::algebra::AnyRing;
use skewpoly::frame::DEFAULT_SEED;
use skewpoly::Error;

use verbs::{Failure, Options, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    ValidateFrame,
    Mul,
    Divide,
    Eval,
    /// Fundamental functions `N_m(a)`.
    Norm,
    Conjugate,
    Vandermonde,
    Rank,
    Pbasis,
    Closure,
    TwoSided,
    MatroidCheck,
    Interpolate,
    DualBasis,
    Reduce,
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Newton,
    Vandermonde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "skewpoly", version, about = "Free skew polynomial rings: evaluation, P-bases, interpolation")]
struct Cli {
    verb: Verb,
    /// Job file; standard input when absent.
    #[arg(long)]
    job: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Seed for randomized checks (frame validation over infinite rings, selftest).
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Interpolation algorithm; overrides the job's "method".
    #[arg(long, value_enum)]
    method: Option<Method>,
}

fn read_job(cli: &Cli) -> Result<Value, Failure> {
    let text = match &cli.job {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
    if !v.is_object() {
        return Err(Error::Parse("job must be a JSON object".into()).into());
    }
    Ok(v)
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let opts = Options {
        seed: cli.seed,
        method: cli.method,
    };
    if cli.verb == Verb::Selftest {
        return Ok(selftest::run(opts.seed));
    }
    let job = read_job(cli)?;
    let ring = AnyRing::from_spec(&job::ring_spec(&job)?)?;
    match ring {
        AnyRing::Finite(f) => verbs::run(cli.verb, f, &job, &opts),
        AnyRing::Quaternion(q) => verbs::run(cli.verb, q, &job, &opts),
    }
}

fn render(format: Format, json: Map<String, Value>, text: &[String]) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&Value::Object(json)).expect("serializable"),
        Format::Text => text.join("\n"),
    }
}

/// Prints the result; a closed pipe downstream is not an error.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            // a selftest with failing cases exits 1
            let failed = out.json.get("failed").and_then(Value::as_u64).is_some_and(|f| f > 0);
            emit(&render(cli.format, out.json, &out.text));
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure { error, details }) => {
            let mut obj = Map::new();
            obj.insert("error".into(), json!(error.name()));
            obj.insert("message".into(), json!(error.to_string()));
            let mut text = vec![format!("error: {}: {error}", error.name())];
            if let Some(d) = details {
                text.push(format!("details: {d}"));
                obj.insert("details".into(), d);
            }
            emit(&render(cli.format, obj, &text));
            eprintln!("skewpoly: {error}");
            ExitCode::from(if error.is_malformed_input() { 2 } else { 1 })
        }
    }
}
