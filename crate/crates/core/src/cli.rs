//! The `rainbow` command line.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails, 2 on
//! errors and refusals. The JSON [`RunReport`] goes to stdout, a one-line
//! summary to stderr.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::dot::export_reduction_dot;
use crate::graph::{load_graph, EdgeColoredGraph, GraphError, PathWitness};
use crate::recognizers::{recognize, ClassReport, GraphClass};
use crate::reductions::{build, Construction, Reduction, ReductionError};
use crate::sat::{brute_force_sat, parse_dimacs, SatError, SatResult};
use crate::verifiers::{
    rainbow_path_between, rainbow_shortest_path_between, rc_verify, src_verify_enumerate, src_verify_fpt,
    src_verify_geodetic, src_verify_kgeodetic, CapPolicy, RcAlgorithm, Verdict, VerifyError,
};

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow connectivity verification and gadget reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a gadget graph from a DIMACS formula.
    Reduce(ReduceArgs),
    /// Check rainbow or strong rainbow connectivity of a graph document.
    Verify(VerifyArgs),
    /// Test graph class membership with certificates.
    Recognize(RecognizeArgs),
    /// Compare satisfiability with the rainbow verdict on the built graph.
    Roundtrip(RoundtripArgs),
}

#[derive(Debug, Args)]
pub struct ConstructionArgs {
    #[arg(long)]
    pub cnf: PathBuf,
    #[arg(long, value_parser = ["base", "io", "ib", "cubic", "kreg"])]
    pub construction: String,
    /// Degree for `kreg`, at least 4.
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub input: ConstructionArgs,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Rc,
    Src,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Fpt,
    Brute,
    Enum,
    Geodetic,
    Kgeo,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Check a single pair instead of the whole graph.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pub pair: Option<Vec<String>>,
    /// Refuse `enum` when some pair has more shortest paths than this.
    #[arg(long)]
    pub cap: Option<u64>,
    /// Largest geodecity accepted by `kgeo`.
    #[arg(long, default_value_t = 2)]
    pub k_max: u64,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Comma-separated classes: bipartite, outerplanar, chordal, interval,
    /// claw-free, block, regular[=K], geodetic[=K], max-clique=K.
    #[arg(long, value_delimiter = ',', required = true)]
    pub classes: Vec<String>,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    #[command(flatten)]
    pub input: ConstructionArgs,
    /// Also run the full strong rainbow check.
    #[arg(long)]
    pub strong: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Formula { path: PathBuf, source: SatError },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Sat(#[from] SatError),
    #[error(transparent)]
    Lookup(#[from] GraphError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub vertices: Vec<String>,
    pub colors: Vec<String>,
}

impl WitnessReport {
    fn new(g: &EdgeColoredGraph, w: &PathWitness) -> Self {
        WitnessReport {
            vertices: w.names(g).into_iter().map(String::from).collect(),
            colors: w.color_names(g).into_iter().map(String::from).collect(),
        }
    }
}

/// One checked property.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub check: String,
    pub holds: bool,
    /// The value the construction predicts, for round trips.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<crate::verifiers::Stats>,
}

impl VerdictReport {
    fn plain(check: impl Into<String>, holds: bool) -> Self {
        VerdictReport {
            check: check.into(),
            holds,
            expected: None,
            algorithm: None,
            failing_pair: None,
            witness: None,
            stats: None,
        }
    }

    fn from_verdict(check: impl Into<String>, g: &EdgeColoredGraph, v: &Verdict) -> Self {
        VerdictReport {
            algorithm: Some(serde_json::to_value(v.algorithm).unwrap().as_str().unwrap_or_default().to_string()),
            failing_pair: v.failing_names(g).map(|(a, b)| [a.to_string(), b.to_string()]),
            witness: v.witness.as_ref().map(|w| WitnessReport::new(g, w)),
            stats: Some(v.stats),
            ..VerdictReport::plain(check, v.connected)
        }
    }

    fn summary(&self) -> String {
        let word = if self.holds { "yes" } else { "no" };
        match &self.failing_pair {
            Some([a, b]) => format!("{}: {word} (fails at {a}, {b})", self.check),
            None => format!("{}: {word}", self.check),
        }
    }
}

/// Structured result of one command.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub verdicts: Vec<VerdictReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<ClassReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
    pub timings_ms: f64,
}

/// Parses arguments, runs the command, prints the report and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = Instant::now();
    let mut report = RunReport {
        command: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
        inputs: Vec::new(),
        verdicts: Vec::new(),
        classes: Vec::new(),
        error: None,
        exit_code: 0,
        timings_ms: 0.0,
    };
    let outcome = match &cli.command {
        Command::Reduce(a) => reduce(a, &mut report),
        Command::Verify(a) => verify(a, &mut report),
        Command::Recognize(a) => recognize_cmd(a, &mut report),
        Command::Roundtrip(a) => roundtrip(a, &mut report),
    };
    report.exit_code = match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            report.error = Some(e.to_string());
            2
        }
    };
    report.timings_ms = start.elapsed().as_secs_f64() * 1e3;
    for v in &report.verdicts {
        eprintln!("{}", v.summary());
    }
    for c in &report.classes {
        eprintln!("{}: {}", c.class, c.verdict);
    }
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    report.exit_code
}

fn read(path: &Path, report: &mut RunReport) -> Result<String, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    report.inputs.push(InputDigest {
        path: path.display().to_string(),
        sha256: format!("{:x}", Sha256::digest(&bytes)),
    });
    String::from_utf8(bytes).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        source: std::io::Error::new(std::io::ErrorKind::InvalidData, e),
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn construction(a: &ConstructionArgs) -> Result<Construction, CliError> {
    if a.construction != "kreg" && a.k.is_some() {
        return Err(CliError::Usage(format!("--k only applies to kreg, not {}", a.construction)));
    }
    Ok(Construction::from_tag(&a.construction, a.k)?)
}

fn load_reduction(a: &ConstructionArgs, report: &mut RunReport) -> Result<Reduction, CliError> {
    let c = construction(a)?;
    let text = read(&a.cnf, report)?;
    let f = parse_dimacs(&text).map_err(|source| CliError::Formula { path: a.cnf.clone(), source })?;
    Ok(build(&f, c)?)
}

fn load(path: &Path, report: &mut RunReport) -> Result<EdgeColoredGraph, CliError> {
    let text = read(path, report)?;
    let (g, _) = load_graph(&text).map_err(|source| CliError::Graph { path: path.to_path_buf(), source })?;
    Ok(g)
}

fn reduce(a: &ReduceArgs, report: &mut RunReport) -> Result<bool, CliError> {
    let r = load_reduction(&a.input, report)?;
    let doc = serde_json::to_string_pretty(&r.to_document()).expect("document serializes");
    write(&a.out, &doc)?;
    if let Some(dot) = &a.dot {
        write(dot, &export_reduction_dot(&r))?;
    }
    let g = &r.graph;
    eprintln!("{}: {} vertices, {} edges, {} colors", r.construction, g.vertex_count(), g.edge_count(), g.color_count());
    Ok(true)
}

fn verify(a: &VerifyArgs, report: &mut RunReport) -> Result<bool, CliError> {
    let g = load(&a.graph, report)?;
    let unsupported = || {
        let name = |v: Option<clap::builder::PossibleValue>| v.map(|p| p.get_name().to_string()).unwrap_or_default();
        CliError::Usage(format!(
            "--algo {} is not available for --mode {}",
            name(a.algo.to_possible_value()),
            name(a.mode.to_possible_value())
        ))
    };
    let (check, verdict) = match (&a.pair, a.mode) {
        (Some(pair), mode) => {
            let (u, v) = (g.require(&pair[0])?, g.require(&pair[1])?);
            match mode {
                Mode::Rc => (format!("rc({}, {})", pair[0], pair[1]), rainbow_path_between(&g, u, v)?),
                Mode::Src => (format!("src({}, {})", pair[0], pair[1]), rainbow_shortest_path_between(&g, u, v)?),
            }
        }
        (None, Mode::Rc) => {
            let algo = match a.algo {
                Algo::Fpt => RcAlgorithm::Fpt,
                Algo::Brute => RcAlgorithm::Brute,
                _ => return Err(unsupported()),
            };
            ("rc".to_string(), rc_verify(&g, algo)?)
        }
        (None, Mode::Src) => {
            let verdict = match a.algo {
                Algo::Fpt => src_verify_fpt(&g)?,
                Algo::Enum => src_verify_enumerate(&g, a.cap.map_or(CapPolicy::Unlimited, CapPolicy::AtMost))?,
                Algo::Geodetic => src_verify_geodetic(&g)?,
                Algo::Kgeo => src_verify_kgeodetic(&g, a.k_max)?,
                Algo::Brute => return Err(unsupported()),
            };
            ("src".to_string(), verdict)
        }
    };
    report.verdicts.push(VerdictReport::from_verdict(check, &g, &verdict));
    Ok(verdict.connected)
}

fn recognize_cmd(a: &RecognizeArgs, report: &mut RunReport) -> Result<bool, CliError> {
    let classes = a
        .classes
        .iter()
        .map(|s| s.trim().parse::<GraphClass>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::Usage)?;
    let g = load(&a.graph, report)?;
    report.classes = classes.into_iter().map(|c| recognize(&g, c)).collect();
    Ok(report.classes.iter().all(|c| c.verdict == "yes"))
}

/// The strong verdict each construction predicts from satisfiability.
fn predicted_strong(c: Construction, sat: bool) -> bool {
    match c {
        Construction::IntervalBlock => false,
        _ => sat,
    }
}

fn roundtrip(a: &RoundtripArgs, report: &mut RunReport) -> Result<bool, CliError> {
    let r = load_reduction(&a.input, report)?;
    let g = &r.graph;
    let sat = brute_force_sat(&r.formula)?;
    let mut sat_report = VerdictReport::plain("sat", sat.is_sat());
    if let SatResult::Satisfiable(assignment) = &sat {
        let bits: String = assignment.values().iter().map(|&b| if b { '1' } else { '0' }).collect();
        sat_report.algorithm = Some(format!("brute-force, assignment {bits}"));
    }
    report.verdicts.push(sat_report);
    let rc = rainbow_path_between(g, r.source, r.sink)?;
    let check = format!("rc({}, {})", r.source_name(), r.sink_name());
    report.verdicts.push(VerdictReport { expected: Some(sat.is_sat()), ..VerdictReport::from_verdict(check, g, &rc) });
    if a.strong {
        let src = src_verify_enumerate(g, CapPolicy::Unlimited)?;
        let expected = predicted_strong(r.construction, sat.is_sat());
        report.verdicts.push(VerdictReport { expected: Some(expected), ..VerdictReport::from_verdict("src", g, &src) });
    }
    Ok(report.verdicts.iter().all(|v| v.expected.is_none_or(|e| e == v.holds)))
}
