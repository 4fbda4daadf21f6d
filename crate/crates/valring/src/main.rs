//! Command-line front end.
//!
//! Exit codes: 0 all checks passed, 1 at least one failed inequality,
//! 2 configuration or usage error.

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;
use valring::error::{Error, Result};
use valring::graph::{build_graph_capped, spectrum, Solver, DEFAULT_PART_CAP};
use valring::harness::{self, Experiment, ExperimentConfig, OutputFormat, RunSummary, TrialRecord};
use valring::ring::{RingFamily, RingSpec};

#[derive(Parser)]
#[command(
    name = "valring",
    version,
    about = "Projective graph spectra, incidence counts, and sum-product growth over finite valuation rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ring inspection
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Bipartite projective graph operations
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Point-plane incidence experiments
    Incidence {
        #[command(subcommand)]
        cmd: IncidenceCmd,
    },
    /// Sum-product experiments
    Sumprod {
        #[command(subcommand)]
        cmd: SumprodCmd,
    },
    /// Execute experiments described by a config file
    Run(RunArgs),
}

#[derive(Subcommand)]
enum RingCmd {
    /// Print structural facts about a ring
    Info {
        /// Ring spec, e.g. "Z/2^3" or "GF(4)[t]/t^2"
        #[arg(long)]
        ring: String,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Singular values and the spectral bound, as a JSON report
    Spectrum {
        #[arg(long)]
        ring: String,
        /// Vector dimension of the projective classes
        #[arg(long, default_value_t = 4)]
        d: usize,
        /// Force the built-in Jacobi eigensolver
        #[arg(long)]
        jacobi: bool,
        /// Largest allowed vertex part
        #[arg(long, default_value_t = DEFAULT_PART_CAP)]
        part_cap: u64,
    },
    /// Expander mixing spot checks on random vertex subsets
    Mix {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 4)]
        d: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Subcommand)]
enum IncidenceCmd {
    /// Brute-force incidence counts against graph edges and the bound
    Check {
        #[arg(long)]
        ring: String,
        /// Points sampled per trial
        #[arg(long, default_value_t = 30)]
        points: usize,
        /// Planes sampled per trial
        #[arg(long, default_value_t = 30)]
        planes: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Subcommand)]
enum SumprodCmd {
    /// Collision energy identities for product-indexed line families
    Energy {
        #[arg(long)]
        ring: String,
        /// Upper bound on sampled slope/offset/evaluation set sizes
        #[arg(long, default_value_t = 4)]
        size: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Growth of |BA + C| against the minimum bound
    Thm1 {
        #[arg(long)]
        ring: String,
        /// Set sizes |A|,|B|,|C|
        #[arg(long, default_value = "3,3,3", value_parser = parse_sizes)]
        sizes: (usize, usize, usize),
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Square-sumset energy chain
    Thm2 {
        #[arg(long)]
        ring: String,
        /// Upper bound on sampled |A|
        #[arg(long, default_value_t = 4)]
        size: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Iterated sumset growth witnesses
    Plunnecke {
        #[arg(long)]
        ring: String,
        /// Density threshold as a fraction, e.g. 1/2
        #[arg(long, default_value = "1/2", value_parser = parse_delta)]
        delta: (u64, u64),
        /// Sumset iteration count
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Trials per ring
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Master seed for the per-trial substreams
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write records to this file instead of stdout
    #[arg(long)]
    output: Option<String>,
    /// Record format: csv or json
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct RunArgs {
    /// Path to a key=value config file
    #[arg(long)]
    config: std::path::PathBuf,
    /// Override the configured trial count
    #[arg(long)]
    trials: Option<u64>,
    /// Override the configured master seed
    #[arg(long)]
    seed: Option<u64>,
    /// Override the configured experiment selection
    #[arg(long)]
    experiment: Option<String>,
    /// Override the configured output path
    #[arg(long)]
    output: Option<String>,
    /// Override the configured record format
    #[arg(long)]
    format: Option<String>,
}

fn parse_sizes(s: &str) -> std::result::Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated sizes, got {s:?}"));
    }
    let mut v = [0usize; 3];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("bad size {part:?}"))?;
    }
    Ok((v[0], v[1], v[2]))
}

fn parse_delta(s: &str) -> std::result::Result<(u64, u64), String> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| format!("expected a fraction like 1/2, got {s:?}"))?;
    let num: u64 = num.trim().parse().map_err(|_| format!("bad numerator {num:?}"))?;
    let den: u64 = den.trim().parse().map_err(|_| format!("bad denominator {den:?}"))?;
    Ok((num, den))
}

impl CommonArgs {
    fn fill(&self, cfg: &mut ExperimentConfig) -> Result<()> {
        cfg.trials = self.trials;
        cfg.master_seed = self.seed;
        cfg.output = self.output.clone();
        cfg.format = self.format.parse()?;
        Ok(())
    }
}

fn ring_info(spec: &str) -> Result<bool> {
    let ring = RingSpec::parse(spec)?;
    let family = match ring.family() {
        RingFamily::ZPowerR => "Z/p^r",
        RingFamily::TruncatedPoly => "GF(q)[t]/t^r",
    };
    println!("spec      = {}", ring.format_spec());
    println!("family    = {family}");
    println!("p         = {}", ring.p());
    println!("m         = {}", ring.m());
    println!("q         = {}", ring.q());
    println!("r         = {}", ring.r());
    println!("order     = {}", ring.order());
    println!("units     = {}", ring.unit_count());
    println!("nonunits  = {}", ring.nonunit_count());
    println!(
        "uniformizer = {}",
        ring.format_elem(ring.uniformizer())
    );
    Ok(true)
}

fn graph_spectrum(spec: &str, d: usize, jacobi: bool, part_cap: u64) -> Result<bool> {
    let ring = RingSpec::parse(spec)?;
    let g = build_graph_capped(&ring, d, part_cap)?;
    let solver = if jacobi { Solver::Jacobi } else { Solver::default() };
    let report = spectrum(&g, solver)?;
    let body = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::Config(format!("serialize: {e}")))?;
    println!("{body}");
    Ok(report.pass)
}

/// Run one experiment through the harness and emit its records.
fn run_and_emit(cfg: &ExperimentConfig) -> Result<bool> {
    let (records, summary) = harness::run(cfg)?;
    emit(&records, &summary, cfg)
}

fn emit(records: &[TrialRecord], summary: &RunSummary, cfg: &ExperimentConfig) -> Result<bool> {
    let body = match cfg.format {
        OutputFormat::Csv => harness::render_csv(records),
        OutputFormat::Json => harness::render_json(records, summary),
    };
    match &cfg.output {
        Some(path) => {
            std::fs::write(path, body)?;
            print!("{}", summary.render_text());
        }
        None => {
            print!("{body}");
            eprint!("{}", summary.render_text());
        }
    }
    Ok(summary.failures == 0)
}

fn run_from_file(args: &RunArgs) -> Result<bool> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| Error::Config(format!("{}: {e}", args.config.display())))?;
    let mut cfg = ExperimentConfig::parse(&text)?;
    if let Some(t) = args.trials {
        cfg.trials = t;
    }
    if let Some(s) = args.seed {
        cfg.master_seed = s;
    }
    if let Some(e) = &args.experiment {
        cfg.experiment = e.parse()?;
    }
    if let Some(o) = &args.output {
        cfg.output = Some(o.clone());
    }
    if let Some(f) = &args.format {
        cfg.format = f.parse()?;
    }
    cfg.validate()?;
    run_and_emit(&cfg)
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Cmd::Ring { cmd: RingCmd::Info { ring } } => ring_info(&ring),
        Cmd::Graph { cmd } => match cmd {
            GraphCmd::Spectrum { ring, d, jacobi, part_cap } => {
                graph_spectrum(&ring, d, jacobi, part_cap)
            }
            GraphCmd::Mix { ring, d, common } => {
                let mut cfg = ExperimentConfig {
                    rings: vec![ring],
                    experiment: Experiment::Mixing,
                    d: Some(d),
                    ..ExperimentConfig::default()
                };
                common.fill(&mut cfg)?;
                run_and_emit(&cfg)
            }
        },
        Cmd::Incidence { cmd: IncidenceCmd::Check { ring, points, planes, common } } => {
            let mut cfg = ExperimentConfig {
                rings: vec![ring],
                experiment: Experiment::Incidence,
                points,
                planes,
                ..ExperimentConfig::default()
            };
            common.fill(&mut cfg)?;
            run_and_emit(&cfg)
        }
        Cmd::Sumprod { cmd } => {
            let mut cfg = ExperimentConfig::default();
            let common = match cmd {
                SumprodCmd::Energy { ring, size, common } => {
                    cfg.rings = vec![ring];
                    cfg.experiment = Experiment::Energy;
                    cfg.size = size;
                    common
                }
                SumprodCmd::Thm1 { ring, sizes, common } => {
                    cfg.rings = vec![ring];
                    cfg.experiment = Experiment::Thm1;
                    cfg.sizes = sizes;
                    common
                }
                SumprodCmd::Thm2 { ring, size, common } => {
                    cfg.rings = vec![ring];
                    cfg.experiment = Experiment::Thm2;
                    cfg.size = size;
                    common
                }
                SumprodCmd::Plunnecke { ring, delta, k, common } => {
                    cfg.rings = vec![ring];
                    cfg.experiment = Experiment::Plunnecke;
                    cfg.delta = delta;
                    cfg.k = k;
                    common
                }
            };
            common.fill(&mut cfg)?;
            cfg.validate()?;
            run_and_emit(&cfg)
        }
        Cmd::Run(args) => run_from_file(&args),
    }
}

fn init_thread_pool() {
    if let Ok(val) = std::env::var("VALRING_THREADS") {
        if let Ok(n) = val.parse::<usize>() {
            if n >= 1 {
                // Ignore failure: the global pool can only be set once.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
