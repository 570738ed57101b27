use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cavity_entropy::basis::{enumerate_states, INITIAL_SUPPORT, REFERENCE_BASIS};
use cavity_entropy::config::{load_params, parse_value};
use cavity_entropy::harness::{
    check_invariants, envelope_period, peak_entropy, simulate, sweep2d, write_sweep_csv,
    write_trace_csv, ParamAxis, QUIET_ZONE_EPS,
};
use cavity_entropy::{
    bond_rules, preset_partitions, Bipartition, Error, ModelParams, Param, Preset, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "cavity-entropy",
    version,
    about = "Entropy dynamics of the two-atom cavity bond model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve the initial state and write the entropy trace as CSV.
    Simulate(SimulateArgs),
    /// Peak entropy over a two-parameter grid, as long-form CSV.
    Sweep(SweepArgs),
    /// Print the reachable basis and compare it with the reference table.
    ValidateBasis,
    /// Run the invariant checks for one parameter set.
    CheckInvariants(InvariantArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// Flat `key = value` parameter file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Parameter override, e.g. `--set zeta=2g`; wins over the file.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

impl ParamArgs {
    fn load(&self) -> Result<ModelParams, Error> {
        load_params(self.config.as_deref(), &self.overrides)
    }
}

#[derive(Args)]
struct TimeArgs {
    /// Time step in seconds.
    #[arg(long, default_value_t = 1e-9)]
    dt: f64,
    /// Number of steps; overrides --horizon.
    #[arg(long)]
    steps: Option<usize>,
    /// Total evolution time in seconds.
    #[arg(long, default_value_t = 1e-5)]
    horizon: f64,
    /// Record every n-th step.
    #[arg(long, default_value_t = 1)]
    sample_every: usize,
}

impl TimeArgs {
    fn run_config(&self) -> Result<RunConfig, Error> {
        if self.horizon.is_nan() || self.horizon <= 0.0 {
            return Err(Error::Config(format!(
                "horizon must be positive, got {}",
                self.horizon
            )));
        }
        let mut cfg = RunConfig::for_horizon(self.horizon, self.dt);
        if let Some(n) = self.steps {
            cfg.n_steps = n;
        }
        cfg.sample_every = self.sample_every;
        cfg.validate().map_err(|e| Error::Config(e.to_string()))?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    time: TimeArgs,
    /// Extra subsystem given as comma-separated qubit indices (0..6).
    #[arg(long, value_name = "QUBITS")]
    keep: Vec<String>,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Report the peak and envelope period of every column on stderr.
    #[arg(long)]
    envelope: bool,
    /// Quiet-zone threshold in bits for the envelope period.
    #[arg(long, default_value_t = QUIET_ZONE_EPS)]
    eps: f64,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Parameter on the x axis.
    #[arg(long, default_value = "g_photon")]
    x: String,
    /// `start:stop:n` for the x axis; values accept the `g` suffix.
    #[arg(long, default_value = "0.5g:4g:21")]
    x_range: String,
    #[arg(long, default_value = "zeta")]
    y: String,
    #[arg(long, default_value = "0.5g:4g:21")]
    y_range: String,
    /// Entropy column whose peak is recorded.
    #[arg(long, default_value = "S_Omega")]
    preset: String,
    #[arg(long, default_value_t = 2e-5)]
    horizon: f64,
    #[arg(long, default_value_t = 1e-9)]
    dt: f64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InvariantArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    time: TimeArgs,
}

enum Failure {
    Config(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NormDrift { .. }
            | Error::NotHermitian { .. }
            | Error::NegativeEigenvalue(_)
            | Error::NoConvergence { .. }
            | Error::StateOutsideSpace(_)
            | Error::OccupationCap { .. } => Failure::Invariant(e.to_string()),
            _ => Failure::Config(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Config(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn axis(name: &str, range: &str) -> Result<ParamAxis, Failure> {
    let param: Param = name.parse()?;
    let parts: Vec<&str> = range.split(':').collect();
    let [start, stop, n] = parts.as_slice() else {
        return Err(Failure::Config(format!(
            "range {range:?} is not start:stop:n"
        )));
    };
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Failure::Config(format!("bad point count in {range:?}")))?;
    ParamAxis::linspace(param, parse_value(start)?, parse_value(stop)?, n)
        .map_err(|e| Failure::Config(e.to_string()))
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), Failure> {
    let params = args.params.load()?;
    let config = args.time.run_config()?;
    let mut partitions = preset_partitions();
    for k in &args.keep {
        partitions.push(Bipartition::parse(k).map_err(|e| Failure::Config(e.to_string()))?);
    }
    let trace = simulate(&params, &cavity_entropy::bond_space(), &config, &partitions)?;
    let mut out = output(&args.out)?;
    write_trace_csv(&trace, &mut out)?;
    out.flush()?;
    if args.envelope {
        for label in trace.labels() {
            let peak = peak_entropy(&trace, &label)?;
            match envelope_period(&trace, &label, args.eps) {
                Ok(p) => eprintln!("{label}: peak {peak:.6}, envelope period {p:.6e} s"),
                Err(e) => eprintln!("{label}: peak {peak:.6}, envelope period unavailable ({e})"),
            }
        }
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let fixed = args.params.load()?;
    let x = axis(&args.x, &args.x_range)?;
    let y = axis(&args.y, &args.y_range)?;
    let preset = Preset::from_column(&args.preset)?;
    if !(args.horizon > 0.0 && args.dt > 0.0) {
        return Err(Failure::Config("horizon and dt must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| Failure::Config(e.to_string()))?;
    let grid =
        pool.install(|| sweep2d(&x, &y, &fixed, &preset.partition(), args.horizon, args.dt))?;
    let mut out = output(&args.out)?;
    write_sweep_csv(&grid, &mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_validate_basis() -> Result<(), Failure> {
    let space = enumerate_states(&INITIAL_SUPPORT, &bond_rules())?;
    let mut out = io::stdout().lock();
    writeln!(out, "index p1 p2 m l1 l2 L k")?;
    for (i, s) in space.states().iter().enumerate() {
        let o = s.occupations();
        writeln!(
            out,
            "{i} {} {} {} {} {} {} {}",
            o[0], o[1], o[2], o[3], o[4], o[5], o[6]
        )?;
    }
    if space.as_set() != REFERENCE_BASIS.iter().copied().collect() {
        return Err(Failure::Invariant(
            "reachable basis differs from the reference table".into(),
        ));
    }
    Ok(())
}

fn cmd_check_invariants(args: &InvariantArgs) -> Result<(), Failure> {
    let params = args.params.load()?;
    let config = args.time.run_config()?;
    let checks = check_invariants(&params, &config)?;
    let mut out = io::stdout().lock();
    for c in &checks {
        writeln!(
            out,
            "{:<4} {:<13} {}",
            if c.ok { "ok" } else { "FAIL" },
            c.name,
            c.detail
        )?;
    }
    let failed = checks.iter().filter(|c| !c.ok).count();
    if failed > 0 {
        return Err(Failure::Invariant(format!(
            "{failed} invariant(s) violated"
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Simulate(a) => cmd_simulate(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::ValidateBasis => cmd_validate_basis(),
        Command::CheckInvariants(a) => cmd_check_invariants(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
