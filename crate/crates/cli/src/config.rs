//! Command line and config-file parsing into a validated RunConfig.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rug::Rational;
use serde::Serialize;

use xjacobi::exceptional::{GridSize, IdentityCase};
use xjacobi::polyalg::parse_rational;
use xjacobi::zeros::{ConjectureGrid, Edge, ElectrostaticForm};
use xjacobi::{ExceptionalSpec, FamilySpec, Partition};

pub const DEFAULT_PRECISION: u32 = 128;

#[derive(Parser, Debug)]
#[command(name = "xjacobi", version, about = "Exceptional Jacobi polynomials: construction, identities and zeros")]
pub struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, value_name = "BITS")]
    pub precision_bits: Option<String>,
    /// Write the artifact here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<String>,
    /// json or csv.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// Seed for random grid sampling.
    #[arg(long, global = true)]
    pub seed: Option<String>,
    /// Flat TOML file with the same keys; command-line values win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Cmd>,
}

#[derive(Args, Debug, Default)]
pub struct FamilyArgs {
    /// Partition λ as a comma list; "" is empty.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Partition μ as a comma list; "" is empty.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// α as p/q or an integer.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// β as p/q or an integer.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Build Ω (and P when --n is given) with the predicted degree, leading coefficient and admissibility.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
    },
    /// Run the identity suite; exits nonzero on any failure.
    Verify {
        /// all, or one of duality, conjugation, shift, shift-step, reflection,
        /// reflection-exceptional, xm, type23, revisited, tilde-duality.
        #[arg(long)]
        suite: Option<String>,
        /// default or full.
        #[arg(long)]
        grid: Option<String>,
        /// Evaluate a seeded random sample of this many grid inputs.
        #[arg(long)]
        sample: Option<String>,
    },
    /// Regular/exceptional zero classification of P.
    Zeros {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
    },
    /// Asymptotic harnesses.
    Asymptotics {
        #[command(subcommand)]
        harness: Harness,
    },
    /// Exact scan for multiple zeros of Ω.
    ScanConjecture {
        #[arg(long)]
        max_size: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha_grid: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta_offset_grid: Option<String>,
        #[arg(long)]
        sample: Option<String>,
    },
    /// Zeros of Ω and P for λ=(3,1,1), μ=(3,3), α=0, β=1/2.
    Figure1 {
        #[arg(long)]
        n: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Harness {
    /// n θ_{k,n} against the Bessel zero j_{ν,k}.
    MehlerHeine {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        n_list: Option<String>,
        /// plus or minus.
        #[arg(long)]
        edge: Option<String>,
    },
    /// KS distance of the regular zeros to the arcsine law.
    Arcsine {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_list: Option<String>,
    },
    /// n times the distance from each simple Ω-zero to the nearest exceptional zero.
    Attraction {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_list: Option<String>,
    },
    /// Residual of the electrostatic identity at the simple Ω-zeros.
    Electrostatic {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        /// Index into the sorted Ω-zeros; all simple ones when absent.
        #[arg(long)]
        j: Option<String>,
        /// derived (default) or stated.
        #[arg(long)]
        form: Option<String>,
    },
}

/// Where a raw value came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "lowercase")]
pub enum Position {
    /// Index into argv of the flag carrying the value.
    Argv { index: usize },
    File { path: String, line: usize },
    Default,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Argv { index } => write!(f, "argv[{index}]"),
            Position::File { path, line } => write!(f, "{path}:{line}"),
            Position::Default => write!(f, "default"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParseError {
    pub key: String,
    pub message: String,
    pub position: Position,
}

#[derive(Clone, Debug)]
struct RawValue {
    text: String,
    pos: Position,
}

/// Keys accepted in a config file; "command" and "harness" select the run.
const FILE_KEYS: &[&str] = &[
    "command",
    "harness",
    "precision_bits",
    "output",
    "format",
    "seed",
    "lambda",
    "mu",
    "alpha",
    "beta",
    "n",
    "suite",
    "grid",
    "sample",
    "k",
    "n_list",
    "edge",
    "j",
    "form",
    "max_size",
    "alpha_grid",
    "beta_offset_grid",
];

const COMMANDS: &[&str] = &["construct", "verify", "zeros", "asymptotics", "scan-conjecture", "figure1"];
const HARNESSES: &[&str] = &["mehler-heine", "arcsine", "attraction", "electrostatic"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    Construct {
        family: FamilySpec,
        #[serde(skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Verify {
        /// None means every identity.
        suite: Option<IdentityCase>,
        grid: GridSize,
        #[serde(skip_serializing_if = "Option::is_none")]
        sample: Option<usize>,
    },
    Zeros {
        spec: ExceptionalSpec,
    },
    MehlerHeine {
        family: FamilySpec,
        k: u32,
        n_list: Vec<usize>,
        edge: Edge,
    },
    Arcsine {
        family: FamilySpec,
        n_list: Vec<usize>,
    },
    Attraction {
        family: FamilySpec,
        n_list: Vec<usize>,
    },
    Electrostatic {
        spec: ExceptionalSpec,
        #[serde(skip_serializing_if = "Option::is_none")]
        j: Option<usize>,
        form: ElectrostaticForm,
    },
    ScanConjecture {
        grid: ConjectureGrid,
        #[serde(skip_serializing_if = "Option::is_none")]
        sample: Option<usize>,
    },
    Figure1 {
        spec: ExceptionalSpec,
    },
}

impl Command {
    /// Asymptotic harnesses default to CSV records.
    fn default_format(&self) -> Format {
        match self {
            Command::MehlerHeine { .. }
            | Command::Arcsine { .. }
            | Command::Attraction { .. }
            | Command::Electrostatic { .. } => Format::Csv,
            _ => Format::Json,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub precision_bits: u32,
    pub format: Format,
    pub seed: u64,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

/// Raw key/value pairs from the file, then argv on top.
#[derive(Default)]
struct Raw {
    values: BTreeMap<String, RawValue>,
    errors: Vec<ParseError>,
}

impl Raw {
    fn set(&mut self, key: &str, text: Option<String>, pos: Position) {
        if let Some(text) = text {
            self.values.insert(key.to_string(), RawValue { text, pos });
        }
    }

    fn error(&mut self, key: &str, message: impl Into<String>, pos: Position) {
        self.errors.push(ParseError {
            key: key.to_string(),
            message: message.into(),
            position: pos,
        });
    }

    fn get(&self, key: &str) -> Option<&RawValue> {
        self.values.get(key)
    }

    fn pos(&self, key: &str) -> Position {
        self.get(key).map(|v| v.pos.clone()).unwrap_or(Position::Default)
    }

    fn parsed<T>(&mut self, key: &str, f: impl Fn(&str) -> Result<T, String>) -> Option<T> {
        let v = self.get(key)?.clone();
        match f(&v.text) {
            Ok(x) => Some(x),
            Err(e) => {
                self.error(key, e, v.pos);
                None
            }
        }
    }

    fn required<T>(&mut self, key: &str, f: impl Fn(&str) -> Result<T, String>) -> Option<T> {
        if self.get(key).is_none() {
            self.error(key, format!("missing required value '{key}'"), Position::Default);
            return None;
        }
        self.parsed(key, f)
    }
}

fn flag_name(key: &str) -> String {
    format!("--{}", key.replace('_', "-"))
}

/// argv index of the flag carrying `key`, or of its `--key=value` form.
fn argv_index(argv: &[String], key: &str) -> usize {
    let flag = flag_name(key);
    let eq = format!("{flag}=");
    argv.iter()
        .rposition(|a| *a == flag || a.starts_with(&eq))
        .unwrap_or(0)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| strip_kind(e.to_string()))
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| strip_kind(e.to_string()))
}

fn strip_kind(s: String) -> String {
    s.strip_prefix("parse error: ").map(str::to_string).unwrap_or(s)
}

fn parse_usize(s: &str) -> Result<usize, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a non-negative integer"))
}

fn parse_list<T>(s: &str, f: impl Fn(&str) -> Result<T, String>) -> Result<Vec<T>, String> {
    let mut out = Vec::new();
    let mut errs = Vec::new();
    for (i, tok) in s.split(',').enumerate() {
        match f(tok.trim()) {
            Ok(v) => out.push(v),
            Err(e) => errs.push(format!("entry {}: {e}", i + 1)),
        }
    }
    if errs.is_empty() && !out.is_empty() {
        Ok(out)
    } else if out.is_empty() && errs.is_empty() {
        Err("empty list".into())
    } else {
        Err(errs.join("; "))
    }
}

fn parse_suite(s: &str) -> Result<Option<IdentityCase>, String> {
    let t = s.trim().to_ascii_lowercase();
    if t == "all" {
        return Ok(None);
    }
    let upper = t.replace('-', "_").to_ascii_uppercase();
    serde_json::from_value(serde_json::Value::String(upper))
        .map(Some)
        .map_err(|_| format!("unknown identity suite '{s}'"))
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    match s.trim() {
        "plus" | "+1" => Ok(Edge::Plus),
        "minus" | "-1" => Ok(Edge::Minus),
        other => Err(format!("unknown edge '{other}' (expected plus or minus)")),
    }
}

fn parse_form(s: &str) -> Result<ElectrostaticForm, String> {
    match s.trim() {
        "stated" => Ok(ElectrostaticForm::Stated),
        "derived" => Ok(ElectrostaticForm::Derived),
        other => Err(format!("unknown form '{other}' (expected stated or derived)")),
    }
}

fn parse_format(s: &str) -> Result<Format, String> {
    match s.trim() {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        other => Err(format!("unknown format '{other}' (expected json or csv)")),
    }
}

fn parse_precision(s: &str) -> Result<u32, String> {
    let p: u32 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a positive integer"))?;
    if !(16..=xjacobi::zeros::MAX_PRECISION_BITS).contains(&p) {
        return Err(format!("precision must lie in 16..={}", xjacobi::zeros::MAX_PRECISION_BITS));
    }
    Ok(p)
}

/// Reads a flat TOML table; scalars and arrays become comma-joined text.
fn read_file(path: &std::path::Path, raw: &mut Raw) {
    let shown = path.display().to_string();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            raw.error("config", format!("cannot read config file: {e}"), Position::File { path: shown, line: 0 });
            return;
        }
    };
    let table: toml::Table = match text.parse() {
        Ok(t) => t,
        Err(e) => {
            let line = e
                .span()
                .map(|s| text[..s.start.min(text.len())].lines().count().max(1))
                .unwrap_or(0);
            raw.error("config", e.message().to_string(), Position::File { path: shown, line });
            return;
        }
    };
    let line_of = |key: &str| {
        text.lines()
            .position(|l| {
                let t = l.trim_start();
                t.strip_prefix(key)
                    .map(|rest| rest.trim_start().starts_with('='))
                    .unwrap_or(false)
            })
            .map(|i| i + 1)
            .unwrap_or(0)
    };
    for (key, value) in table {
        let pos = Position::File {
            path: shown.clone(),
            line: line_of(&key),
        };
        if !FILE_KEYS.contains(&key.as_str()) {
            raw.error(&key, format!("unknown key '{key}'"), pos);
            continue;
        }
        match scalar_text(&value) {
            Ok(t) => raw.set(&key, Some(t), pos),
            Err(e) => raw.error(&key, e, pos),
        }
    }
}

fn scalar_text(v: &toml::Value) -> Result<String, String> {
    match v {
        toml::Value::String(s) => Ok(s.clone()),
        toml::Value::Integer(i) => Ok(i.to_string()),
        toml::Value::Boolean(b) => Ok(b.to_string()),
        toml::Value::Array(a) => {
            let parts: Result<Vec<String>, String> = a.iter().map(scalar_text).collect();
            Ok(parts?.join(","))
        }
        toml::Value::Float(_) => Err("floating-point values are not accepted; write rationals as \"p/q\"".into()),
        _ => Err("expected a string, integer or array".into()),
    }
}

fn family_args(raw: &mut Raw, f: FamilyArgs, argv: &[String]) {
    for (key, v) in [("lambda", f.lambda), ("mu", f.mu), ("alpha", f.alpha), ("beta", f.beta)] {
        let pos = Position::Argv { index: argv_index(argv, key) };
        raw.set(key, v, pos);
    }
}

fn set_args(raw: &mut Raw, argv: &[String], pairs: Vec<(&str, Option<String>)>) {
    for (key, v) in pairs {
        let pos = Position::Argv { index: argv_index(argv, key) };
        raw.set(key, v, pos);
    }
}

/// Layers argv over the config file and returns the command name.
fn collect(cli: Cli, argv: &[String], raw: &mut Raw) -> Option<String> {
    if let Some(path) = &cli.config {
        read_file(path, raw);
    }
    set_args(
        raw,
        argv,
        vec![
            ("precision_bits", cli.precision_bits),
            ("output", cli.output),
            ("format", cli.format),
            ("seed", cli.seed),
        ],
    );
    let name = match cli.command {
        None => None,
        Some(Cmd::Construct { family, n }) => {
            family_args(raw, family, argv);
            set_args(raw, argv, vec![("n", n)]);
            Some("construct")
        }
        Some(Cmd::Verify { suite, grid, sample }) => {
            set_args(raw, argv, vec![("suite", suite), ("grid", grid), ("sample", sample)]);
            Some("verify")
        }
        Some(Cmd::Zeros { family, n }) => {
            family_args(raw, family, argv);
            set_args(raw, argv, vec![("n", n)]);
            Some("zeros")
        }
        Some(Cmd::ScanConjecture {
            max_size,
            alpha_grid,
            beta_offset_grid,
            sample,
        }) => {
            set_args(
                raw,
                argv,
                vec![
                    ("max_size", max_size),
                    ("alpha_grid", alpha_grid),
                    ("beta_offset_grid", beta_offset_grid),
                    ("sample", sample),
                ],
            );
            Some("scan-conjecture")
        }
        Some(Cmd::Figure1 { n }) => {
            set_args(raw, argv, vec![("n", n)]);
            Some("figure1")
        }
        Some(Cmd::Asymptotics { harness }) => {
            let h = match harness {
                Harness::MehlerHeine { family, k, n_list, edge } => {
                    family_args(raw, family, argv);
                    set_args(raw, argv, vec![("k", k), ("n_list", n_list), ("edge", edge)]);
                    "mehler-heine"
                }
                Harness::Arcsine { family, n_list } => {
                    family_args(raw, family, argv);
                    set_args(raw, argv, vec![("n_list", n_list)]);
                    "arcsine"
                }
                Harness::Attraction { family, n_list } => {
                    family_args(raw, family, argv);
                    set_args(raw, argv, vec![("n_list", n_list)]);
                    "attraction"
                }
                Harness::Electrostatic { family, n, j, form } => {
                    family_args(raw, family, argv);
                    set_args(raw, argv, vec![("n", n), ("j", j), ("form", form)]);
                    "electrostatic"
                }
            };
            let index = argv.iter().position(|a| a == "asymptotics").unwrap_or(0);
            raw.set("harness", Some(h.to_string()), Position::Argv { index: index + 1 });
            Some("asymptotics")
        }
    };
    match name {
        Some(n) => {
            let index = argv.iter().position(|a| a == n).unwrap_or(0);
            raw.set("command", Some(n.to_string()), Position::Argv { index });
            Some(n.to_string())
        }
        None => {
            let v = raw.get("command").cloned();
            match v {
                Some(v) if COMMANDS.contains(&v.text.as_str()) => Some(v.text),
                Some(v) => {
                    raw.error("command", format!("unknown command '{}'", v.text), v.pos);
                    None
                }
                None => {
                    raw.error("command", "no command given", Position::Default);
                    None
                }
            }
        }
    }
}

fn family(raw: &mut Raw) -> Option<FamilySpec> {
    let lambda = raw.parsed("lambda", parse_partition).or_else(|| raw.get("lambda").is_none().then(Partition::empty));
    let mu = raw.parsed("mu", parse_partition).or_else(|| raw.get("mu").is_none().then(Partition::empty));
    let alpha = raw.required("alpha", parse_rat);
    let beta = raw.required("beta", parse_rat);
    Some(FamilySpec::new(lambda?, mu?, alpha?, beta?))
}

fn exceptional(raw: &mut Raw, family: Option<FamilySpec>) -> Option<ExceptionalSpec> {
    let n = raw.required("n", parse_usize);
    let (family, n) = (family?, n?);
    match ExceptionalSpec::new(family, n) {
        Ok(s) => Some(s),
        Err(e) => {
            let pos = raw.pos("n");
            raw.error("n", e.to_string(), pos);
            None
        }
    }
}

fn n_list(raw: &mut Raw, default: &[usize]) -> Option<Vec<usize>> {
    if raw.get("n_list").is_none() {
        return Some(default.to_vec());
    }
    raw.parsed("n_list", |s| parse_list(s, parse_usize))
}

/// Rejects keys that the chosen command does not read.
fn check_unused(raw: &mut Raw, used: &[&str]) {
    let common = ["command", "harness", "precision_bits", "output", "format", "seed"];
    let extra: Vec<(String, Position)> = raw
        .values
        .iter()
        .filter(|(k, _)| !common.contains(&k.as_str()) && !used.contains(&k.as_str()))
        .map(|(k, v)| (k.clone(), v.pos.clone()))
        .collect();
    for (k, pos) in extra {
        raw.error(&k, format!("'{k}' does not apply to this command"), pos);
    }
}

fn build_command(raw: &mut Raw, name: &str) -> Option<Command> {
    const FAM: [&str; 4] = ["lambda", "mu", "alpha", "beta"];
    let with = |extra: &[&'static str]| -> Vec<&'static str> { FAM.iter().chain(extra).copied().collect() };
    match name {
        "construct" => {
            check_unused(raw, &with(&["n"]));
            let f = family(raw);
            let n = raw.parsed("n", parse_usize);
            let has_n = raw.get("n").is_some();
            let f = f?;
            if has_n {
                let n = n?;
                if let Err(e) = ExceptionalSpec::new(f.clone(), n) {
                    let pos = raw.pos("n");
                    raw.error("n", e.to_string(), pos);
                    return None;
                }
                Some(Command::Construct { family: f, n: Some(n) })
            } else {
                Some(Command::Construct { family: f, n: None })
            }
        }
        "verify" => {
            check_unused(raw, &["suite", "grid", "sample"]);
            let suite = if raw.get("suite").is_some() {
                raw.parsed("suite", parse_suite)
            } else {
                Some(None)
            };
            let grid = if raw.get("grid").is_some() {
                raw.parsed("grid", |s| s.parse::<GridSize>().map_err(|e| strip_kind(e.to_string())))
            } else {
                Some(GridSize::Default)
            };
            let sample = optional(raw, "sample", parse_usize);
            Some(Command::Verify {
                suite: suite?,
                grid: grid?,
                sample: sample?,
            })
        }
        "zeros" => {
            check_unused(raw, &with(&["n"]));
            let f = family(raw);
            Some(Command::Zeros {
                spec: exceptional(raw, f)?,
            })
        }
        "scan-conjecture" => {
            check_unused(raw, &["max_size", "alpha_grid", "beta_offset_grid", "sample"]);
            let d = ConjectureGrid::default();
            let max_size = optional(raw, "max_size", parse_usize);
            let alpha = optional(raw, "alpha_grid", |s| parse_list(s, parse_rat));
            let beta = optional(raw, "beta_offset_grid", |s| parse_list(s, parse_rat));
            let sample = optional(raw, "sample", parse_usize);
            Some(Command::ScanConjecture {
                grid: ConjectureGrid {
                    max_size: max_size?.unwrap_or(d.max_size),
                    alpha_grid: alpha?.unwrap_or(d.alpha_grid),
                    beta_offsets: beta?.unwrap_or(d.beta_offsets),
                },
                sample: sample?,
            })
        }
        "figure1" => {
            check_unused(raw, &["n"]);
            let n = optional(raw, "n", parse_usize)?.unwrap_or(20);
            let f = FamilySpec::new(
                Partition::from_slice(&[3, 1, 1]),
                Partition::from_slice(&[3, 3]),
                Rational::new(),
                Rational::from((1, 2)),
            );
            match ExceptionalSpec::new(f, n) {
                Ok(spec) => Some(Command::Figure1 { spec }),
                Err(e) => {
                    let pos = raw.pos("n");
                    raw.error("n", e.to_string(), pos);
                    None
                }
            }
        }
        "asymptotics" => {
            let Some(h) = raw.get("harness").cloned() else {
                raw.error("harness", "asymptotics needs a harness", Position::Default);
                return None;
            };
            match h.text.as_str() {
                "mehler-heine" => {
                    check_unused(raw, &with(&["k", "n_list", "edge"]));
                    let f = family(raw);
                    let k = optional(raw, "k", |s| parse_usize(s).map(|v| v as u32));
                    let ns = n_list(raw, &[100, 200, 400]);
                    let edge = optional(raw, "edge", parse_edge);
                    Some(Command::MehlerHeine {
                        family: f?,
                        k: k?.unwrap_or(1),
                        n_list: ns?,
                        edge: edge?.unwrap_or(Edge::Plus),
                    })
                }
                "arcsine" => {
                    check_unused(raw, &with(&["n_list"]));
                    let f = family(raw);
                    let ns = n_list(raw, &[50, 100, 200]);
                    Some(Command::Arcsine {
                        family: f?,
                        n_list: ns?,
                    })
                }
                "attraction" => {
                    check_unused(raw, &with(&["n_list"]));
                    let f = family(raw);
                    let ns = n_list(raw, &[50, 100, 200, 400]);
                    Some(Command::Attraction {
                        family: f?,
                        n_list: ns?,
                    })
                }
                "electrostatic" => {
                    check_unused(raw, &with(&["n", "j", "form"]));
                    let f = family(raw);
                    let spec = exceptional(raw, f);
                    let j = optional(raw, "j", parse_usize);
                    let form = optional(raw, "form", parse_form);
                    Some(Command::Electrostatic {
                        spec: spec?,
                        j: j?,
                        form: form?.unwrap_or(ElectrostaticForm::Derived),
                    })
                }
                other => {
                    raw.error(
                        "harness",
                        format!("unknown harness '{other}' (expected one of {})", HARNESSES.join(", ")),
                        h.pos,
                    );
                    None
                }
            }
        }
        _ => None,
    }
}

/// Some(None) when absent, None after recording an error.
fn optional<T>(raw: &mut Raw, key: &str, f: impl Fn(&str) -> Result<T, String>) -> Option<Option<T>> {
    if raw.get(key).is_none() {
        return Some(None);
    }
    raw.parsed(key, f).map(Some)
}

/// Validates a parsed command line, reporting every problem found.
pub fn parse_config(cli: Cli, argv: &[String]) -> Result<RunConfig, Vec<ParseError>> {
    let mut raw = Raw::default();
    let name = collect(cli, argv, &mut raw);
    let precision = optional(&mut raw, "precision_bits", parse_precision);
    let format = optional(&mut raw, "format", parse_format);
    let seed = optional(&mut raw, "seed", |s| {
        s.trim().parse::<u64>().map_err(|_| format!("'{s}' is not a u64 seed"))
    });
    let output = raw.get("output").map(|v| PathBuf::from(&v.text));
    let command = name.and_then(|n| build_command(&mut raw, &n));
    if !raw.errors.is_empty() {
        return Err(raw.errors);
    }
    let command = command.expect("no errors implies a command");
    Ok(RunConfig {
        format: format.flatten().unwrap_or_else(|| command.default_format()),
        precision_bits: precision.flatten().unwrap_or(DEFAULT_PRECISION),
        seed: seed.flatten().unwrap_or(0),
        output,
        command,
    })
}

/// Parses argv (including the program name).
pub fn parse_args(argv: &[String]) -> Result<RunConfig, CliError> {
    let cli = Cli::try_parse_from(argv).map_err(CliError::Clap)?;
    parse_config(cli, argv).map_err(CliError::Invalid)
}

#[derive(Debug)]
pub enum CliError {
    Clap(clap::Error),
    Invalid(Vec<ParseError>),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &[&str]) -> Vec<String> {
        std::iter::once("xjacobi").chain(s.iter().copied()).map(String::from).collect()
    }

    fn errors(s: &[&str]) -> Vec<ParseError> {
        match parse_args(&args(s)) {
            Err(CliError::Invalid(e)) => e,
            other => panic!("expected validation errors, got {other:?}"),
        }
    }

    #[test]
    fn figure_one_construct() {
        let c = parse_args(&args(&[
            "construct", "--lambda", "3,1,1", "--mu", "3,3", "--alpha", "0", "--beta", "1/2", "--n", "20",
        ]))
        .unwrap();
        match c.command {
            Command::Construct { family, n } => {
                assert_eq!(family.lambda, Partition::from_slice(&[3, 1, 1]));
                assert_eq!(family.beta, Rational::from((1, 2)));
                assert_eq!(n, Some(20));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(c.precision_bits, 128);
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn increasing_partition_is_rejected() {
        let e = errors(&["construct", "--lambda", "1,2", "--alpha", "0", "--beta", "0"]);
        assert_eq!(e.len(), 1);
        assert!(e[0].message.contains("partition must be weakly decreasing"));
        assert_eq!(e[0].position, Position::Argv { index: 2 });
    }

    #[test]
    fn all_errors_are_collected() {
        let e = errors(&["zeros", "--lambda", "1,2", "--alpha", "x/3", "--beta", "1/0", "--precision-bits", "7"]);
        let keys: Vec<&str> = e.iter().map(|e| e.key.as_str()).collect();
        for k in ["lambda", "alpha", "beta", "n", "precision_bits"] {
            assert!(keys.contains(&k), "{k} missing from {keys:?}");
        }
    }

    #[test]
    fn conjecture_grid_echo() {
        let c = parse_args(&args(&[
            "scan-conjecture",
            "--max-size",
            "8",
            "--alpha-grid",
            "-3/4,0,1,2",
            "--beta-offset-grid",
            "1/4,1,3",
        ]))
        .unwrap();
        let echo = serde_json::to_value(&c).unwrap();
        assert_eq!(echo["command"], "scan-conjecture");
        assert_eq!(echo["grid"]["max_size"], 8);
        assert_eq!(echo["grid"]["alpha_grid"], serde_json::json!(["-3/4", "0", "1", "2"]));
        assert_eq!(echo["grid"]["beta_offsets"], serde_json::json!(["1/4", "1", "3"]));
    }

    #[test]
    fn empty_partitions() {
        let c = parse_args(&args(&["construct", "--lambda", "", "--mu", "", "--alpha", "0", "--beta", "0", "--n", "4"]))
            .unwrap();
        match c.command {
            Command::Construct { family, .. } => {
                assert!(family.lambda.is_empty() && family.mu.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_suite_and_grid() {
        let e = errors(&["verify", "--suite", "bogus", "--grid", "huge"]);
        assert_eq!(e.len(), 2);
        assert!(matches!(
            parse_args(&args(&["verify", "--suite", "shift-step"])).unwrap().command,
            Command::Verify {
                suite: Some(IdentityCase::ShiftStep),
                ..
            }
        ));
    }

    #[test]
    fn unknown_command_is_a_clap_error() {
        assert!(matches!(parse_args(&args(&["bogus"])), Err(CliError::Clap(_))));
    }

    #[test]
    fn file_values_are_overridden() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.toml");
        std::fs::write(&path, "command = \"zeros\"\nlambda = \"2\"\nalpha = \"1/2\"\nbeta = \"5\"\nn = 6\nprecision_bits = 192\n").unwrap();
        let p = path.to_str().unwrap();
        let c = parse_args(&args(&["--config", p])).unwrap();
        assert_eq!(c.precision_bits, 192);
        let c = parse_args(&args(&["--config", p, "--precision-bits", "256"])).unwrap();
        assert_eq!(c.precision_bits, 256);
        match c.command {
            Command::Zeros { spec } => assert_eq!(spec.n, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn file_errors_carry_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.toml");
        std::fs::write(&path, "command = \"construct\"\nalpha = 0.5\nbeta = \"1\"\ncolour = \"red\"\n").unwrap();
        let e = match parse_args(&args(&["--config", path.to_str().unwrap()])) {
            Err(CliError::Invalid(e)) => e,
            other => panic!("{other:?}"),
        };
        let lines: Vec<usize> = e
            .iter()
            .filter_map(|e| match &e.position {
                Position::File { line, .. } => Some(*line),
                _ => None,
            })
            .collect();
        assert!(lines.contains(&2) && lines.contains(&4), "{e:?}");
    }
}
