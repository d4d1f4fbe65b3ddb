mod config;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::error::{ContextKind, ContextValue, ErrorKind as ClapKind};
use serde_json::{json, Value};

use config::{CliError, Format, ParseError, Position, RunConfig};
use xjacobi::ErrorKind;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_IO: u8 = 9;

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Parse => EXIT_PARSE,
        ErrorKind::Admissibility => 3,
        ErrorKind::Domain => 4,
        ErrorKind::Degenerate => 5,
        ErrorKind::Convergence => 6,
        ErrorKind::Internal => 7,
    }
}

fn fail(kind: &str, message: String, code: u8, extra: Option<Value>) -> ExitCode {
    let mut err = json!({ "kind": kind, "message": message, "exit_code": code });
    if let Some(v) = extra {
        err["errors"] = v;
    }
    let text = serde_json::to_string(&json!({ "error": err })).expect("error object serializes");
    eprintln!("{text}");
    ExitCode::from(code)
}

/// Clap errors become one structured parse error pointing at the offending token.
fn clap_failure(e: clap::Error, argv: &[String]) -> ExitCode {
    let token = [ContextKind::InvalidSubcommand, ContextKind::InvalidArg, ContextKind::InvalidValue]
        .into_iter()
        .find_map(|k| match e.get(k) {
            Some(ContextValue::String(s)) => Some(s.clone()),
            _ => None,
        });
    let position = token
        .as_deref()
        .and_then(|t| argv.iter().position(|a| a == t || a.starts_with(&format!("{t}="))))
        .map(|index| Position::Argv { index })
        .unwrap_or(Position::Default);
    let message = e.render().to_string();
    let first = message.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
    let detail = ParseError {
        key: token.unwrap_or_default(),
        message: first.clone(),
        position,
    };
    fail("parse", first, EXIT_PARSE, Some(json!([detail])))
}

fn invalid(errors: Vec<ParseError>) -> ExitCode {
    let summary = errors
        .iter()
        .map(|e| format!("{} ({}): {}", e.key, e.position, e.message))
        .collect::<Vec<_>>()
        .join("; ");
    fail("parse", summary, EXIT_PARSE, Some(json!(errors)))
}

fn render(cfg: &RunConfig, art: &run::Artifact) -> String {
    let version = env!("CARGO_PKG_VERSION");
    let echo = serde_json::to_value(cfg).expect("config serializes");
    match cfg.format {
        Format::Json => {
            let doc = json!({
                "artifact": { "name": "xjacobi", "version": version },
                "config": echo,
                "result": art.result,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("artifact serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = format!("# xjacobi {version}\n# config {}\n", serde_json::to_string(&echo).expect("config serializes"));
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &art.table {
                w.write_record(row).expect("in-memory csv write");
            }
            out.push_str(&String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8 csv"));
            out
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cfg = match config::parse_args(&argv) {
        Ok(c) => c,
        Err(CliError::Clap(e)) => {
            return match e.kind() {
                ClapKind::DisplayHelp | ClapKind::DisplayVersion => {
                    let _ = e.print();
                    ExitCode::SUCCESS
                }
                _ => clap_failure(e, &argv),
            }
        }
        Err(CliError::Invalid(errors)) => return invalid(errors),
    };
    let art = match run::run(&cfg) {
        Ok(a) => a,
        Err(e) => {
            let kind = e.kind();
            let name = serde_json::to_value(kind).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            return fail(&name, e.to_string(), exit_code(kind), None);
        }
    };
    let text = render(&cfg, &art);
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| format!("stdout: {e}")),
    };
    if let Err(msg) = written {
        return fail("io", msg, EXIT_IO, None);
    }
    if art.failed {
        return ExitCode::from(EXIT_VERIFY_FAILED);
    }
    ExitCode::SUCCESS
}
