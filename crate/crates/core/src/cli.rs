//! The `outerspace` command line.
//!
//! Graph arguments are JSON files. A relative path that does not exist is
//! looked up under `$OUTERSPACE_DATA`. Exit codes: 0 ok, 1 ran with warnings,
//! 2 failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constants::{
    nondegeneracy_threshold, progress_constant, thickness_chain, transient_shortness_bound, ConstantRow,
};
use crate::error::{Error, Result};
use crate::graphs::{
    graph_from_json, rose, systole_loop, uniform_rose, GraphFile, MarkedMetricGraph, ViolationKind,
};
use crate::metric::{candidates, diam_pair, lip_distance, sym_distance, SamplerConfig};
use crate::num::{parse_rational, to_f64};
use crate::paths::{
    certify_geodesic, contraction_test, orbit_path, orbit_qi_test, progress_test, shrink_loop_path,
    stretch_loop_path, to_csv, PairMode, SampledPath,
};
use crate::plgraph::{pl_projection, PLConfig};
use crate::words::{Automorphism, CyclicWord};

/// Environment variable naming the test-data directory.
pub const DATA_ENV: &str = "OUTERSPACE_DATA";

#[derive(Parser, Debug)]
#[command(name = "outerspace", version, about = "Lipschitz geometry of Outer space at desk scale")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lipschitz distances between two graphs.
    Dist { a: PathBuf, b: PathBuf },
    /// Candidate loops of a graph as CSV.
    Candidates { graph: PathBuf },
    /// Shortest loop of a graph.
    Systole {
        graph: PathBuf,
        /// Report whether the graph is eps-thick.
        #[arg(long)]
        eps: Option<String>,
    },
    /// Primitive classes of length at most 2.
    ProjectPl {
        graph: PathBuf,
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
    },
    /// Distances along the orbit of an automorphism.
    Axis {
        #[arg(long, default_value = "b,c,ab")]
        phi: String,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
    },
    /// A certified stretch (or shrink) geodesic and its certificate.
    Geodesic {
        #[command(flatten)]
        path: StretchArgs,
        #[arg(long)]
        shrink: bool,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Strong-contraction experiment.
    ContractTest {
        #[command(flatten)]
        path: PathArgs,
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.05)]
        eps: f64,
        #[arg(long, default_value_t = 8)]
        twist: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Progress of the projection to the primitive loop complex.
    ProgressTest {
        #[command(flatten)]
        path: PathArgs,
        #[arg(long, value_enum, default_value_t = Mode::FromStart)]
        mode: Mode,
        #[arg(long, default_value_t = 2)]
        word_cap: usize,
        #[arg(long, default_value_t = 6)]
        radius_cap: usize,
        #[arg(long, default_value_t = 260.0)]
        lipschitz: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Word length against orbit distances for a group ball.
    OrbitTest {
        /// Generator images, e.g. `b,c,ab`; repeat for several generators.
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 500)]
        max_elements: usize,
        #[arg(long, default_value_t = 2)]
        word_cap: usize,
        #[arg(long, default_value_t = 4)]
        radius_cap: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate the explicit constants.
    Constants(ConstantsArgs),
    /// Validate graph files.
    Validate {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct StretchArgs {
    /// Graph file; defaults to a rose with petal lengths 1/10, 9/20, 9/20.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long, default_value = "a")]
    pub alpha: String,
    #[arg(long, default_value_t = 2.0)]
    pub length: f64,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathKind {
    Orbit,
    Stretch,
}

#[derive(Args, Debug, Clone)]
pub struct PathArgs {
    #[arg(long, value_enum, default_value_t = PathKind::Orbit)]
    pub kind: PathKind,
    #[arg(long, default_value = "b,c,ab")]
    pub phi: String,
    #[arg(long, default_value_t = 12)]
    pub k_max: usize,
    #[command(flatten)]
    pub stretch: StretchArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    /// CSV destination; stdout when absent, with the summary on stderr.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    FromStart,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct ConstantsArgs {
    #[arg(long, default_value_t = 1.0)]
    pub d: f64,
    #[arg(long, default_value_t = 260.0)]
    pub l: f64,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub s_eps: Option<f64>,
    #[arg(long)]
    pub s_eps_prime: Option<f64>,
    /// Transient-shortness bound; computed from eps and the s-values when absent.
    #[arg(long)]
    pub d_eps: Option<f64>,
}

/// Outcome of a successful command.
#[derive(Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Warnings,
}

pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(DATA_ENV) {
        Some(dir) => Path::new(&dir).join(path),
        None => path.to_path_buf(),
    }
}

fn load(path: &Path) -> Result<MarkedMetricGraph> {
    let p = resolve(path);
    let text = fs::read_to_string(&p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    graph_from_json(&text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

fn load_or(path: &Option<PathBuf>, default: impl FnOnce() -> Result<MarkedMetricGraph>) -> Result<MarkedMetricGraph> {
    match path {
        Some(p) => load(p),
        None => default(),
    }
}

fn default_stretch_graph() -> Result<MarkedMetricGraph> {
    rose(vec![crate::num::rat(1, 10), crate::num::rat(9, 20), crate::num::rat(9, 20)])
}

fn build_stretch(args: &StretchArgs, shrink: bool) -> Result<SampledPath> {
    let g = load_or(&args.graph, default_stretch_graph)?;
    let alpha = CyclicWord::parse(&args.alpha)?;
    if shrink {
        shrink_loop_path(&g, &alpha, args.length, args.samples)
    } else {
        stretch_loop_path(&g, &alpha, args.length, args.samples)
    }
}

fn build_path(args: &PathArgs) -> Result<SampledPath> {
    match args.kind {
        PathKind::Orbit => {
            let phi = Automorphism::parse(&args.phi)?;
            let g = load_or(&args.stretch.graph, || uniform_rose(phi.rank()))?;
            orbit_path(&phi, &g, args.k_max)
        }
        PathKind::Stretch => build_stretch(&args.stretch, false),
    }
}

fn emit<S: Serialize>(csv: &str, summary: &S, out: &OutArgs, stdout: &mut dyn Write) -> Result<()> {
    let summary = serde_json::to_string_pretty(summary).map_err(|e| Error::Io(e.to_string()))?;
    match &out.out {
        Some(p) => {
            fs::write(p, csv)?;
            writeln!(stdout, "{summary}")?;
        }
        None => {
            write!(stdout, "{csv}")?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn table(rows: &[ConstantRow], stdout: &mut dyn Write) -> Result<()> {
    for r in rows {
        writeln!(stdout, "{:<16} {:>24.12e}  {:<40} {}", r.name, r.value, r.formula, r.role)?;
    }
    Ok(())
}

fn constants(args: &ConstantsArgs, stdout: &mut dyn Write) -> Result<Status> {
    let thick = thickness_chain(args.d, args.l)?;
    writeln!(stdout, "# thickness chain (D = {}, L = {})", args.d, args.l)?;
    table(&thick.rows(), stdout)?;
    let eps = args.eps.unwrap_or(thick.eps);
    let need = |v: Option<f64>, what: &str| {
        v.ok_or_else(|| Error::Domain(format!("{what} requires the thick-part symmetrization constant; pass it explicitly")))
    };
    let s_prime = need(args.s_eps_prime, "the length A (--s-eps-prime)")?;
    let thr = nondegeneracy_threshold(args.d, args.l, eps, s_prime)?;
    writeln!(stdout, "# thresholds (eps = {eps})")?;
    table(&thr.rows(), stdout)?;
    let d_eps = match args.d_eps {
        Some(v) => v,
        None => {
            let s = need(args.s_eps, "the transient-shortness bound D_eps (--s-eps)")?;
            let t = transient_shortness_bound(eps, args.d, s, s_prime)?;
            writeln!(stdout, "# transient shortness")?;
            table(&t.rows(), stdout)?;
            t.value
        }
    };
    let p = progress_constant(args.d, d_eps)?;
    writeln!(stdout, "# progress (D_eps = {d_eps}; conditional on the supplied s-values)")?;
    table(&p.rows(), stdout)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct AxisRow {
    k: usize,
    t: f64,
    d_forward: f64,
    d_backward: f64,
    ratio: f64,
}

/// Run one parsed command, writing primary output to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Dist { a, b } => {
            let (g, h) = (load(a)?, load(b)?);
            writeln!(stdout, "d(A,B)\t{}", lip_distance(&g, &h)?)?;
            writeln!(stdout, "d(B,A)\t{}", lip_distance(&h, &g)?)?;
            writeln!(stdout, "sym\t{}", sym_distance(&g, &h)?)?;
            writeln!(stdout, "diam\t{}", diam_pair(&g, &h)?)?;
            Ok(Status::Ok)
        }
        Command::Candidates { graph } => {
            let g = load(graph)?;
            writeln!(stdout, "shape,class,length,path")?;
            for c in candidates(&g).iter() {
                writeln!(stdout, "{},{},{},{}", c.shape, c.class, c.length, c.graph_loop.describe(&g))?;
            }
            Ok(Status::Ok)
        }
        Command::Systole { graph, eps } => {
            let g = load(graph)?;
            let (len, lp) = systole_loop(&g);
            writeln!(stdout, "systole\t{len}\t{}", to_f64(&len))?;
            writeln!(stdout, "class\t{}", lp.class(&g))?;
            writeln!(stdout, "path\t{}", lp.describe(&g))?;
            if let Some(e) = eps {
                let e = parse_rational(e)?;
                writeln!(stdout, "thick\t{}", len >= e)?;
            }
            Ok(Status::Ok)
        }
        Command::ProjectPl { graph, cap } => {
            let g = load(graph)?;
            let p = pl_projection(&g, *cap);
            for c in &p.classes {
                writeln!(stdout, "{c}")?;
            }
            if p.truncated {
                eprintln!("warning: enumeration truncated after {} paths", p.paths_explored);
                return Ok(Status::Warnings);
            }
            Ok(Status::Ok)
        }
        Command::Axis { phi, graph, k_max } => {
            let phi = Automorphism::parse(phi)?;
            let g = load_or(graph, || uniform_rose(phi.rank()))?;
            let path = orbit_path(&phi, &g, *k_max)?;
            let rows: Vec<AxisRow> = (0..path.len())
                .map(|k| {
                    let f = path.dist(0, k)?;
                    Ok(AxisRow {
                        k,
                        t: path.time(k),
                        d_forward: f,
                        d_backward: path.dist(k, 0)?,
                        ratio: if k == 0 { 0.0 } else { f / k as f64 },
                    })
                })
                .collect::<Result<_>>()?;
            write!(stdout, "{}", to_csv(&rows)?)?;
            Ok(Status::Ok)
        }
        Command::Geodesic { path, shrink, tol } => {
            let p = build_stretch(path, *shrink)?;
            let cert = certify_geodesic(&p, *tol)?;
            writeln!(stdout, "t,lengths")?;
            for i in 0..p.len() {
                let lengths: Vec<String> = p.graph(i).lengths().iter().map(|x| x.to_string()).collect();
                writeln!(stdout, "{},{}", p.time(i), lengths.join(";"))?;
            }
            eprintln!("{}", serde_json::to_string_pretty(&cert).map_err(|e| Error::Io(e.to_string()))?);
            Ok(if cert.pass { Status::Ok } else { Status::Warnings })
        }
        Command::ContractTest { path, pairs, seed, eps, twist, out } => {
            let p = build_path(path)?;
            let sampler = SamplerConfig::new(p.rank(), *eps).with_twist(*twist);
            let report = contraction_test(&p, &sampler, *pairs, *seed)?;
            emit(&report.to_csv()?, &report, out, stdout)?;
            Ok(Status::Ok)
        }
        Command::ProgressTest { path, mode, word_cap, radius_cap, lipschitz, out } => {
            let p = build_path(path)?;
            let cfg = PLConfig { lipschitz: *lipschitz, word_cap: *word_cap, radius_cap: *radius_cap, ..PLConfig::default() };
            let mode = match mode {
                Mode::FromStart => PairMode::FromStart,
                Mode::All => PairMode::All,
            };
            let report = progress_test(&p, &cfg, mode)?;
            emit(&report.to_csv()?, &report, out, stdout)?;
            Ok(if report.missing > 0 || report.upper_violations > 0 { Status::Warnings } else { Status::Ok })
        }
        Command::OrbitTest { generators, radius, graph, max_elements, word_cap, radius_cap, out } => {
            let gens = generators.iter().map(|s| Automorphism::parse(s)).collect::<Result<Vec<_>>>()?;
            let g = load_or(graph, || uniform_rose(gens[0].rank()))?;
            let cfg = PLConfig { word_cap: *word_cap, radius_cap: *radius_cap, ..PLConfig::default() };
            let report = orbit_qi_test(&gens, *radius, &g, *max_elements, &cfg)?;
            emit(&report.to_csv()?, &report, out, stdout)?;
            Ok(if report.truncated || report.missing > 0 { Status::Warnings } else { Status::Ok })
        }
        Command::Constants(args) => constants(args, stdout),
        Command::Validate { graphs } => {
            let mut bad = false;
            for path in graphs {
                let p = resolve(path);
                let text = fs::read_to_string(&p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                let violations = match GraphFile::from_json(&text) {
                    Ok(file) => file.validate(),
                    Err(e) => vec![crate::graphs::Violation { kind: ViolationKind::Format, message: e.to_string() }],
                };
                if violations.is_empty() {
                    writeln!(stdout, "{}: ok", path.display())?;
                } else {
                    bad = true;
                    for v in violations {
                        writeln!(stdout, "{}: {:?}: {}", path.display(), v.kind, v.message)?;
                    }
                }
            }
            if bad {
                return Err(Error::InvalidGraph("validation failed".into()));
            }
            Ok(Status::Ok)
        }
    }
}

/// Parse arguments, run, and map the outcome to an exit code.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Warnings) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
