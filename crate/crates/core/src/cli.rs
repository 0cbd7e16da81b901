//! Command-line front end. `run` does all the work and returns the exit code
//! with the captured output, so the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation error (or a
//! failing suite), 3 cap exceeded.
//!
//! `HINDLAB_CAP_OVERRIDE` replaces the default caps, as `dim=N`, `vertex=N`
//! or both separated by a comma. Explicit `--dim-cap` / `--vertex-cap`
//! flags take precedence over it.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::actions::{validate_action, ActionError, ActionJson};
use crate::complexes::{ComplexError, SComplex, DEFAULT_DIM_CAP};
use crate::graphs::{chromatic_number_with_cap, homological_chromatic_number, Graph, GraphError, GraphJson, DEFAULT_VERTEX_CAP};
use crate::hypergraphs::{afl_bound, hyper_chromatic_number_with_cap, HyperChromatic, HyperError, Hypergraph, HypergraphJson};
use crate::index::{hind, IndexError};
use crate::suites::{run_suite, DEFAULT_SEED};

pub const CAP_ENV: &str = "HINDLAB_CAP_OVERRIDE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "hindlab", version, about = "Homological index of free Z/p actions")]
struct Args {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    dim_cap: Option<usize>,
    #[arg(long, global = true)]
    vertex_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index report for an action file.
    Hind {
        file: PathBuf,
        /// Require the action to be over this prime.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Chromatic number against the homological bound for a graph file.
    GraphBound { file: PathBuf },
    /// Chromatic number against the AFL bound for a hypergraph file.
    HyperBound {
        file: PathBuf,
        /// The prime; defaults to the uniformity.
        #[arg(long)]
        p: Option<u32>,
        /// Required uniformity.
        #[arg(long)]
        r: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandKind {
    Hind { file: PathBuf, p: Option<u32> },
    Verify { suite: String, seed: u64 },
    GraphBound { file: PathBuf },
    HyperBound { file: PathBuf, p: Option<u32>, r: Option<usize> },
}

/// Fully resolved invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub dim_cap: usize,
    pub vertex_cap: usize,
    pub format: Format,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parse `dim=N,vertex=N`; either key may be missing.
pub fn parse_cap_override(s: &str) -> Result<(Option<usize>, Option<usize>), String> {
    let (mut dim, mut vertex) = (None, None);
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        let v: usize = v.trim().parse().map_err(|_| format!("bad cap value {v:?}"))?;
        if v == 0 {
            return Err("caps must be positive".into());
        }
        match k.trim() {
            "dim" => dim = Some(v),
            "vertex" => vertex = Some(v),
            other => return Err(format!("unknown cap {other:?}")),
        }
    }
    Ok((dim, vertex))
}

/// Resolve arguments and the cap override (value of `HINDLAB_CAP_OVERRIDE`).
pub fn parse_config<I, T>(args: I, cap_override: Option<&str>) -> Result<RunConfig, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(args).map_err(|e| {
        let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        let text = e.render().to_string();
        if code == EXIT_OK {
            Outcome::ok(text)
        } else {
            Outcome {
                code,
                stdout: String::new(),
                stderr: text,
            }
        }
    })?;
    let (env_dim, env_vertex) = match cap_override {
        Some(s) => parse_cap_override(s).map_err(|e| Outcome::err(EXIT_USAGE, format!("{CAP_ENV}: {e}")))?,
        None => (None, None),
    };
    let dim_cap = args.dim_cap.or(env_dim).unwrap_or(DEFAULT_DIM_CAP);
    let vertex_cap = args.vertex_cap.or(env_vertex).unwrap_or(DEFAULT_VERTEX_CAP);
    if dim_cap == 0 || vertex_cap == 0 {
        return Err(Outcome::err(EXIT_USAGE, "caps must be positive"));
    }
    let command = match args.command {
        Command::Hind { file, p } => CommandKind::Hind { file, p },
        Command::Verify { suite, seed } => CommandKind::Verify { suite, seed },
        Command::GraphBound { file } => CommandKind::GraphBound { file },
        Command::HyperBound { file, p, r } => CommandKind::HyperBound { file, p, r },
    };
    Ok(RunConfig {
        command,
        dim_cap,
        vertex_cap,
        format: args.format,
    })
}

/// Parse, then run.
pub fn main_with<I, T>(args: I, cap_override: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_config(args, cap_override) {
        Ok(cfg) => run(&cfg),
        Err(o) => o,
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let r = match &cfg.command {
        CommandKind::Hind { file, p } => cmd_hind(cfg, file, *p),
        CommandKind::Verify { suite, seed } => return cmd_verify(cfg, suite, *seed),
        CommandKind::GraphBound { file } => cmd_graph_bound(cfg, file),
        CommandKind::HyperBound { file, p, r } => cmd_hyper_bound(cfg, file, *p, *r),
    };
    r.unwrap_or_else(|o| o)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::err(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Outcome::err(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn complex_code(e: &ComplexError) -> i32 {
    match e {
        ComplexError::DimCapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

fn action_code(e: &ActionError) -> i32 {
    match e {
        ActionError::Complex(c) => complex_code(c),
        _ => EXIT_INVALID,
    }
}

fn index_code(e: &IndexError) -> i32 {
    match e {
        IndexError::Action(a) => action_code(a),
        _ => EXIT_INVALID,
    }
}

fn graph_code(e: &GraphError) -> i32 {
    match e {
        GraphError::CapExceeded { .. } => EXIT_CAP,
        GraphError::Complex(c) => complex_code(c),
        GraphError::Action(a) => action_code(a),
        GraphError::Index(i) => index_code(i),
        _ => EXIT_INVALID,
    }
}

fn hyper_code(e: &HyperError) -> i32 {
    match e {
        HyperError::CapExceeded { .. } => EXIT_CAP,
        HyperError::Complex(c) => complex_code(c),
        HyperError::Action(a) => action_code(a),
        HyperError::Index(i) => index_code(i),
        _ => EXIT_INVALID,
    }
}

fn emit<T: Serialize>(format: Format, value: &T, header: &[&str], row: Vec<String>) -> String {
    match format {
        Format::Json => serde_json::to_string(value).expect("plain data serializes") + "\n",
        Format::Tsv => format!("{}\n{}\n", header.join("\t"), row.join("\t")),
    }
}

fn cmd_hind(cfg: &RunConfig, file: &PathBuf, p: Option<u32>) -> Result<Outcome, Outcome> {
    let json: ActionJson = read_json(file)?;
    if let Some(p) = p {
        if p != json.p {
            return Err(Outcome::err(EXIT_INVALID, format!("action is over Z/{}, not Z/{p}", json.p)));
        }
    }
    let k = SComplex::from_maximal_faces_with_cap(json.complex.labels.clone(), &json.complex.maximal_faces, cfg.dim_cap)
        .map_err(|e| Outcome::err(complex_code(&e), e))?;
    let a = validate_action(k, json.generator.clone(), json.p).map_err(|e| Outcome::err(action_code(&e), e))?;
    let r = hind(&a).map_err(|e| Outcome::err(index_code(&e), e))?;
    let van = r.vanishing.iter().map(bool::to_string).collect::<Vec<_>>().join(",");
    Ok(Outcome::ok(emit(
        cfg.format,
        &r,
        &["hind", "dim", "vanishing"],
        vec![r.hind.to_string(), r.dim.to_string(), van],
    )))
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    suite: &'a str,
    seed: u64,
    passed: bool,
    rows: &'a [crate::suites::CheckRow],
}

fn cmd_verify(cfg: &RunConfig, suite: &str, seed: u64) -> Outcome {
    let report = match run_suite(suite, seed) {
        Ok(r) => r,
        Err(e) => return Outcome::err(EXIT_USAGE, e),
    };
    let passed = report.passed();
    let stdout = match cfg.format {
        Format::Json => {
            let out = VerifyOut {
                suite,
                seed,
                passed,
                rows: &report.rows,
            };
            serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n"
        }
        Format::Tsv => {
            let mut s = String::from("name\texpected\tgot\tpass\n");
            for r in &report.rows {
                let _ = writeln!(s, "{}\t{}\t{}\t{}", r.name, r.expected, r.got, r.pass);
            }
            s
        }
    };
    let failed = report.rows.iter().filter(|r| !r.pass).count();
    Outcome {
        code: if passed { EXIT_OK } else { EXIT_INVALID },
        stdout,
        stderr: if passed {
            String::new()
        } else {
            format!("{failed} of {} checks failed\n", report.rows.len())
        },
    }
}

#[derive(Serialize)]
struct GraphBoundOut {
    chi: usize,
    h_chi: usize,
    gap: usize,
}

fn cmd_graph_bound(cfg: &RunConfig, file: &PathBuf) -> Result<Outcome, Outcome> {
    let json: GraphJson = read_json(file)?;
    let g = Graph::from_json(&json).map_err(|e| Outcome::err(graph_code(&e), e))?;
    if g.n() > cfg.vertex_cap {
        let e = GraphError::CapExceeded {
            n: g.n(),
            cap: cfg.vertex_cap,
        };
        return Err(Outcome::err(EXIT_CAP, e));
    }
    let chi = chromatic_number_with_cap(&g, cfg.vertex_cap).map_err(|e| Outcome::err(graph_code(&e), e))?;
    let h_chi = homological_chromatic_number(&g).map_err(|e| Outcome::err(graph_code(&e), e))?;
    let out = GraphBoundOut {
        chi,
        h_chi,
        gap: chi - h_chi,
    };
    Ok(Outcome::ok(emit(
        cfg.format,
        &out,
        &["chi", "h_chi", "gap"],
        vec![chi.to_string(), h_chi.to_string(), out.gap.to_string()],
    )))
}

#[derive(Serialize)]
struct HyperBoundOut {
    p: u32,
    chi: usize,
    afl: usize,
    gap: usize,
}

fn cmd_hyper_bound(cfg: &RunConfig, file: &PathBuf, p: Option<u32>, r: Option<usize>) -> Result<Outcome, Outcome> {
    let json: HypergraphJson = read_json(file)?;
    let h = Hypergraph::from_json(&json).map_err(|e| Outcome::err(hyper_code(&e), e))?;
    let unif = h.uniformity();
    if let Some(r) = r {
        if unif != Some(r) {
            return Err(Outcome::err(EXIT_INVALID, HyperError::NotUniform(r)));
        }
    }
    let p = match (p, unif) {
        (Some(p), _) => p,
        (None, Some(u)) => u as u32,
        (None, None) => return Err(Outcome::err(EXIT_INVALID, "hypergraph is not uniform; pass --p")),
    };
    if h.n() > cfg.vertex_cap {
        let e = HyperError::CapExceeded {
            what: "vertex count",
            size: h.n(),
            cap: cfg.vertex_cap,
        };
        return Err(Outcome::err(EXIT_CAP, e));
    }
    let afl = afl_bound(&h, p).map_err(|e| Outcome::err(hyper_code(&e), e))?;
    let chi = match hyper_chromatic_number_with_cap(&h, cfg.vertex_cap).map_err(|e| Outcome::err(hyper_code(&e), e))? {
        HyperChromatic::Finite(k) => k,
        HyperChromatic::Infinite => return Err(Outcome::err(EXIT_INVALID, "a singleton edge admits no proper coloring")),
    };
    let out = HyperBoundOut {
        p,
        chi,
        afl,
        gap: chi.saturating_sub(afl),
    };
    Ok(Outcome::ok(emit(
        cfg.format,
        &out,
        &["p", "chi", "afl", "gap"],
        vec![p.to_string(), chi.to_string(), afl.to_string(), out.gap.to_string()],
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_override_parsing() {
        assert_eq!(parse_cap_override("dim=5"), Ok((Some(5), None)));
        assert_eq!(parse_cap_override("vertex=30, dim=4"), Ok((Some(4), Some(30))));
        assert_eq!(parse_cap_override(""), Ok((None, None)));
        assert!(parse_cap_override("dim").is_err());
        assert!(parse_cap_override("dim=0").is_err());
        assert!(parse_cap_override("depth=3").is_err());
    }

    #[test]
    fn flags_beat_environment() {
        let c = parse_config(["hindlab", "graph-bound", "g.json", "--vertex-cap", "7"], Some("vertex=40,dim=3")).unwrap();
        assert_eq!(c.vertex_cap, 7);
        assert_eq!(c.dim_cap, 3);
        let c = parse_config(["hindlab", "graph-bound", "g.json"], None).unwrap();
        assert_eq!((c.dim_cap, c.vertex_cap), (DEFAULT_DIM_CAP, DEFAULT_VERTEX_CAP));
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(main_with(["hindlab"], None).code, EXIT_USAGE);
        assert_eq!(main_with(["hindlab", "frobnicate"], None).code, EXIT_USAGE);
        assert_eq!(main_with(["hindlab", "verify"], None).code, EXIT_USAGE);
        assert_eq!(main_with(["hindlab", "verify", "--suite", "nope"], None).code, EXIT_USAGE);
        assert_eq!(main_with(["hindlab", "hind", "x.json", "--format", "xml"], None).code, EXIT_USAGE);
        assert_eq!(main_with(["hindlab", "hind", "/nonexistent/x.json"], None).code, EXIT_USAGE);
        assert_eq!(main_with(["hindlab", "graph-bound", "g.json"], Some("dim=x")).code, EXIT_USAGE);
    }

    #[test]
    fn help_exits_0() {
        let o = main_with(["hindlab", "--help"], None);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("hyper-bound"));
    }
}
