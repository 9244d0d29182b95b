//! Command-line front end. Every command prints one JSON document (or a
//! flat table with `--pretty`) and exits 0 only when the requested check
//! passed: 1 when it ran and failed, 2 on bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cubing::{build_cubing, boundary_cubings, corruptions, verify_npc, CubingError};
use crate::decide::{classify_2bridge_input, classify_alternating_pair, ArcInput, DecideError, Decision};
use crate::diagram::{two_bridge_diagram, AlternatingDiagram, DiagramError, TwistSequence};
use crate::farey::{
    cf_expand, covering_automorphism, covering_slope, farey_distance, rational_p3_classify, rational_p3_hyperbolic,
    rational_p3_trivial, two_bridge_equivalent, two_bridge_hyperbolic, FareyError, Slope,
};
use crate::pingpong::{self, MobiusMap, PingPongError, PingPongVerdict};
use crate::polyhedra::{build_polyhedra, circle_pattern_svg, PolyhedraError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Farey(#[from] FareyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Cubing(#[from] CubingError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error(transparent)]
    Decide(#[from] DecideError),
    #[error(transparent)]
    PingPong(#[from] PingPongError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Arithmetic used by the ping-pong verifier, from `CUSPCUBES_MODE`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn from_env() -> Result<Mode, CliError> {
        match std::env::var("CUSPCUBES_MODE").as_deref() {
            Err(_) | Ok("") | Ok("exact") => Ok(Mode::Exact),
            Ok("float") => Ok(Mode::Float),
            Ok(other) => Err(CliError::Usage(format!("CUSPCUBES_MODE must be exact or float, not {other:?}"))),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "cuspcubes", version, about = "Farey classification, cubings, ideal polyhedra and meridian-pair certificates")]
pub struct RunConfig {
    /// Human-readable key/value table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Swap the checkerboard colouring (reverses butterfly orders and the gear direction).
    #[arg(long, global = true)]
    pub mirror: bool,
    /// Worker threads for corpus runs (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Farey-graph computations on slopes.
    #[command(subcommand)]
    Farey(FareyCommand),
    /// Build and verify the cubed decomposition.
    Cubing(CubingArgs),
    /// Classify a meridian pair.
    Decide(DecideArgs),
    /// Round-disk ping-pong certificate for two parabolic maps.
    Pingpong(PingpongArgs),
    /// Circle pattern of the checkerboard regions as SVG.
    Svg(SvgArgs),
}

#[derive(Subcommand, Debug)]
pub enum FareyCommand {
    /// Distance in the Farey graph.
    Dist {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(allow_hyphen_values = true)]
        s: Slope,
    },
    /// Continued fraction expansion.
    Cf {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
    },
    /// Slope of the 2-bridge link double covering the projective rational link.
    CoveringSlope {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
    },
    /// Are K(r) and K(s) equivalent 2-bridge links?
    #[command(name = "classify-2bridge")]
    Classify2bridge {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(allow_hyphen_values = true)]
        s: Slope,
        /// Require an orientation-preserving homeomorphism.
        #[arg(long)]
        oriented: bool,
    },
    /// Are the projective rational links of r and s equivalent?
    ClassifyP3 {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(allow_hyphen_values = true)]
        s: Slope,
        #[arg(long)]
        oriented: bool,
    },
    /// Hyperbolicity of K(r), or of the projective link with --p3.
    Hyperbolic {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(long)]
        p3: bool,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct DiagramSource {
    /// Twist sequence of a standard 2-bridge diagram, e.g. 2,1,2.
    #[arg(long, value_name = "A1,A2,...")]
    pub two_bridge: Option<TwistSequence>,
    /// Diagram JSON file ({"pd": ...} or a rotation system).
    #[arg(long, value_name = "FILE")]
    pub pd: Option<PathBuf>,
}

impl DiagramSource {
    fn load(&self) -> Result<AlternatingDiagram, CliError> {
        match (&self.two_bridge, &self.pd) {
            (Some(a), _) => Ok(two_bridge_diagram(a)?),
            (None, Some(path)) => load_diagram(path),
            (None, None) => Err(CliError::Usage("a diagram source is required".into())),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load_diagram(path: &Path) -> Result<AlternatingDiagram, CliError> {
    Ok(AlternatingDiagram::from_json(&read(path)?)?)
}

#[derive(Args, Debug)]
pub struct CubingArgs {
    #[arg(long, value_name = "A1,A2,...", conflicts_with_all = ["pd", "corpus"])]
    pub two_bridge: Option<TwistSequence>,
    #[arg(long, value_name = "FILE", conflicts_with = "corpus")]
    pub pd: Option<PathBuf>,
    /// Every *.json diagram in a directory, checked in parallel.
    #[arg(long, value_name = "DIR")]
    pub corpus: Option<PathBuf>,
    /// Write the cube complex (cubes, gluings, hyperplanes) as JSON.
    #[arg(long, value_name = "FILE")]
    pub emit_complex: Option<PathBuf>,
    /// Apply the k-th systematic corruption first (negative control).
    #[arg(long, value_name = "K")]
    pub corrupt: Option<usize>,
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    #[command(flatten)]
    pub source: DiagramSource,
    /// Crossing arc, `A<i>:<k>` (twist region i, position k) or `X<c>`.
    #[arg(long, value_name = "ARC", group = "arc")]
    pub crossing_arc: Option<ArcInput>,
    /// Arc inside a region, `R<r>:c<x>:c<y>`.
    #[arg(long, value_name = "ARC", group = "arc")]
    pub in_region: Option<ArcInput>,
    /// Arc crossing diagram edges, `T:c<x>:c<y>:e<i>,e<j>,...`.
    #[arg(long, value_name = "ARC", group = "arc")]
    pub transverse: Option<ArcInput>,
    /// Arc as JSON, e.g. {"kind":"in_region","region":3,"c1":0,"c2":2}.
    #[arg(long, value_name = "JSON", group = "arc")]
    pub arc_json: Option<String>,
}

#[derive(Args, Debug)]
pub struct PingpongArgs {
    /// First generator, `[[a,b],[c,d]]` with Gaussian rational entries.
    #[arg(long, default_value = "[[1,0],[4,1]]", allow_hyphen_values = true)]
    pub m1: String,
    #[arg(long, default_value = "[[9,-16],[4,-7]]", allow_hyphen_values = true)]
    pub m2: String,
    /// Check every reduced word up to this length against the identity.
    #[arg(long, default_value_t = 0)]
    pub words: usize,
    /// Tangency tolerance of the floating path.
    #[arg(long, default_value_t = pingpong::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Args, Debug)]
pub struct SvgArgs {
    #[command(flatten)]
    pub source: DiagramSource,
}

/// A report and whether its check passed.
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, passed: bool) -> Result<Self, CliError> {
        Ok(Outcome { report: serde_json::to_value(report)?, passed })
    }
}

pub fn run() -> ExitCode {
    let cfg = RunConfig::parse();
    match execute(&cfg) {
        Ok(out) => {
            if let Err(e) = emit(&cfg, &out.report) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cfg: &RunConfig, report: &Value) -> Result<(), CliError> {
    let text = match report {
        Value::String(s) => s.clone(),
        _ if cfg.pretty => table(report),
        _ => format!("{}\n", serde_json::to_string_pretty(report)?),
    };
    match &cfg.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Flattens nested JSON into `path: value` lines.
pub fn table(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, out);
                }
            }
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, out);
                }
            }
            Value::String(s) => out.push((prefix.to_string(), s.clone())),
            other => out.push((prefix.to_string(), other.to_string())),
        }
    }
    let mut rows = Vec::new();
    walk("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, x)| format!("{k:<width$}  {x}\n")).collect()
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if let Some(n) = cfg.jobs {
        // only fails if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match &cfg.command {
        Command::Farey(cmd) => cmd_farey(cmd),
        Command::Cubing(args) => cmd_cubing(args),
        Command::Decide(args) => cmd_decide(args, cfg.mirror),
        Command::Pingpong(args) => cmd_pingpong(args, Mode::from_env()?),
        Command::Svg(args) => cmd_svg(args),
    }
}

pub fn cmd_farey(cmd: &FareyCommand) -> Result<Outcome, CliError> {
    match *cmd {
        FareyCommand::Dist { r, s } => Outcome::new(&json!({"r": r, "s": s, "distance": farey_distance(r, s)}), true),
        FareyCommand::Cf { r } => {
            let cf = cf_expand(r)?;
            Outcome::new(&json!({"r": r, "integer_part": cf.integer_part, "terms": cf.terms}), true)
        }
        FareyCommand::CoveringSlope { r } => {
            let rt = covering_slope(r)?;
            let (q, p) = (rt.numerator() as i128, rt.denominator() as i128);
            let congruence = !rt.is_infinite() && (q * q - 1).rem_euclid(2 * p) == 0;
            let aut = covering_automorphism(r, rt);
            Outcome::new(&json!({"r": r, "r_tilde": rt, "congruence": congruence, "automorphism": aut}), congruence)
        }
        FareyCommand::Classify2bridge { r, s, oriented } => {
            let aut = two_bridge_equivalent(r, s, oriented);
            Outcome::new(
                &json!({"r": r, "s": s, "oriented": oriented, "equivalent": aut.is_some(), "automorphism": aut}),
                aut.is_some(),
            )
        }
        FareyCommand::ClassifyP3 { r, s, oriented } => {
            let eq = rational_p3_classify(r, s, oriented);
            Outcome::new(&json!({"r": r, "s": s, "oriented": oriented, "equivalent": eq}), eq)
        }
        FareyCommand::Hyperbolic { r, p3 } => {
            let two_bridge = two_bridge_hyperbolic(r);
            let proj = rational_p3_hyperbolic(r);
            let report = json!({
                "r": r,
                "two_bridge_hyperbolic": two_bridge,
                "p3_hyperbolic": proj,
                "p3_trivial": rational_p3_trivial(r),
            });
            Outcome::new(&report, if p3 { proj } else { two_bridge })
        }
    }
}

#[derive(Serialize)]
struct CubingReport {
    source: String,
    #[serde(flatten)]
    summary: crate::cubing::CubingSummary,
    meridians_consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    corruption: Option<crate::cubing::Corruption>,
}

fn cubing_report(d: &AlternatingDiagram, source: String, corrupt: Option<usize>) -> Result<CubingReport, CliError> {
    let cx = build_cubing(d)?;
    let (cx, corruption) = match corrupt {
        None => (cx, None),
        Some(k) => {
            let list = corruptions(&cx, k + 1);
            let (c, bad) = list
                .into_iter()
                .nth(k)
                .ok_or_else(|| CliError::Usage(format!("only {} corruptions exist", cx.crossing_count() * 4)))?;
            (bad, Some(c))
        }
    };
    let mut summary = cx.summary();
    if corruption.is_some() {
        // recompute from the corrupted complex; the summary may still pass counts
        summary.npc = verify_npc(&cx).npc;
    }
    let meridians_consistent = boundary_cubings(&cx).iter().all(|t| t.meridians_consistent());
    Ok(CubingReport { source, summary, meridians_consistent, corruption })
}

fn cubing_ok(r: &CubingReport) -> bool {
    let s = &r.summary;
    let c = s.crossings;
    s.npc
        && s.cubes == 2 * c
        && s.inner_vertices == 2
        && s.inner_edges == c + 2
        && s.boundary_squares == 2 * c
        && s.euler.iter().all(|&e| e == 0)
}

pub fn cmd_cubing(args: &CubingArgs) -> Result<Outcome, CliError> {
    if let Some(dir) = &args.corpus {
        let mut files: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|source| CliError::Io { path: dir.clone(), source })?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        let reports: Vec<Result<CubingReport, String>> = files
            .par_iter()
            .map(|p| {
                load_diagram(p)
                    .and_then(|d| cubing_report(&d, p.display().to_string(), args.corrupt))
                    .map_err(|e| format!("{}: {e}", p.display()))
            })
            .collect();
        let passed = !files.is_empty() && reports.iter().all(|r| r.as_ref().is_ok_and(cubing_ok));
        let entries: Vec<Value> = reports
            .iter()
            .map(|r| match r {
                Ok(rep) => json!({"ok": cubing_ok(rep), "report": rep}),
                Err(e) => json!({"ok": false, "error": e}),
            })
            .collect();
        return Outcome::new(&json!({"files": files.len(), "passed": passed, "results": entries}), passed);
    }
    let (d, source) = match (&args.two_bridge, &args.pd) {
        (Some(a), _) => (two_bridge_diagram(a)?, format!("two-bridge {a}")),
        (None, Some(p)) => (load_diagram(p)?, p.display().to_string()),
        (None, None) => return Err(CliError::Usage("one of --two-bridge, --pd, --corpus is required".into())),
    };
    let report = cubing_report(&d, source, args.corrupt)?;
    if let Some(path) = &args.emit_complex {
        let cx = build_cubing(&d)?;
        let cx = match report.corruption {
            Some(c) => cx.corrupted(c),
            None => cx,
        };
        let text = serde_json::to_string_pretty(&cx.dump())?;
        fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    let ok = cubing_ok(&report);
    Outcome::new(&report, ok)
}

pub fn cmd_decide(args: &DecideArgs, mirror: bool) -> Result<Outcome, CliError> {
    let arc = match (&args.crossing_arc, &args.in_region, &args.transverse, &args.arc_json) {
        (Some(a), _, _, _) | (_, Some(a), _, _) | (_, _, Some(a), _) => a.clone(),
        (_, _, _, Some(j)) => ArcInput::Spec(serde_json::from_str(j)?),
        _ => return Err(CliError::Usage("an arc is required (--crossing-arc, --in-region, --transverse, --arc-json)".into())),
    };
    let verdict = match (&args.source.two_bridge, &arc) {
        (Some(a), _) => classify_2bridge_input(a, &arc, mirror)?,
        (None, ArcInput::Spec(spec)) => classify_alternating_pair(&args.source.load()?, spec, mirror)?,
        (None, ArcInput::Twist { .. }) => {
            return Err(CliError::Usage("twist-region addresses need --two-bridge".into()));
        }
    };
    let passed = !matches!(verdict, crate::decide::Verdict::NotCovered { .. });
    Outcome::new(&Decision::from(verdict), passed)
}

pub fn cmd_pingpong(args: &PingpongArgs, mode: Mode) -> Result<Outcome, CliError> {
    let m1: MobiusMap = args.m1.parse()?;
    let m2: MobiusMap = args.m2.parse()?;
    match mode {
        Mode::Exact => {
            let cert = pingpong::certify(&m1, &m2, args.words)?;
            let certified = matches!(cert.verdict, PingPongVerdict::FreeCertified { .. });
            Outcome::new(&cert, certified && cert.words_ok)
        }
        Mode::Float => {
            let v = pingpong::pingpong_certificate_f64(m1.to_f64(), m2.to_f64(), args.tolerance)?;
            let passed = matches!(v, pingpong::FloatVerdict::NumericallyCertified { .. });
            Outcome::new(&json!({"numeric": true, "result": v}), passed)
        }
    }
}

pub fn cmd_svg(args: &SvgArgs) -> Result<Outcome, CliError> {
    let d = args.source.load()?;
    // the pair is built so that the drawing is only offered for diagrams the
    // polyhedral decomposition accepts
    build_polyhedra(&d, false)?;
    Ok(Outcome { report: Value::String(circle_pattern_svg(&d)?), passed: true })
}
