//! Command-line front end for `curvezeta`.
//!
//! Results go to stdout, diagnostics to stderr. Exit status: 0 on
//! success, 1 on a usage or parse error, 2 on a domain error, 3 when a
//! verification fails.

mod args;
mod commands;
mod json;
mod render;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::Parser;
use curvezeta::{Diagnostic, Error, Level};
use serde_json::{Map, Value};

pub use args::Cli;
pub use json::SAFE_INTEGER;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

/// Runs one command against the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_SUCCESS
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let report = commands::execute(&cli);
    let (result, text, diagnostics, status) = match report.outcome {
        Ok(body) => {
            let status = if body.verified {
                EXIT_SUCCESS
            } else {
                EXIT_VERIFICATION
            };
            (body.result, body.text, body.diagnostics, status)
        }
        Err(e) => {
            let status = match e {
                Error::Syntax { .. } => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            };
            let diag = Diagnostic::new(Level::Error, e.code(), e.to_string());
            (Value::Null, String::new(), vec![diag], status)
        }
    };

    for d in &diagnostics {
        if !cli.quiet || d.level == Level::Error {
            let _ = writeln!(err, "{d}");
        }
    }
    if cli.json {
        let envelope = envelope(report.command, report.inputs, result, &diagnostics);
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&envelope).expect("plain values")
        );
    } else {
        let _ = write!(out, "{text}");
    }
    let _ = out.flush();
    status
}

/// `{command, inputs, result, diagnostics}` in that order.
fn envelope(
    command: &str,
    inputs: Map<String, Value>,
    result: Value,
    diagnostics: &[Diagnostic],
) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), Value::from(command));
    m.insert("inputs".into(), Value::Object(inputs));
    m.insert("result".into(), result);
    m.insert(
        "diagnostics".into(),
        serde_json::to_value(diagnostics).expect("diagnostics serialize"),
    );
    Value::Object(m)
}
