//! Thin command-line wrapper around the library operations.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use potconst::cli::{run, Command, OutputFormat, RunConfig};
use potconst::{Error, SetSpec, WeightSpec};

#[derive(Parser)]
#[command(
    name = "potconst",
    about = "Sharp constants for products of polynomial norms and sums of potentials on planar compact sets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Path to a set spec JSON file ({"kind": "disk"|"segment"|"polygon"|"arc"|"points"|"curve", ...}).
    #[arg(long, global = true)]
    set: Option<PathBuf>,

    /// Path to a weight spec JSON file ({"kind": "unit"|"lorentz"|"radial_exp"|"tabulated", ...}).
    #[arg(long, global = true)]
    weight: Option<PathBuf>,

    /// Tuple size for the m-point constants.
    #[arg(long, global = true)]
    m: Option<usize>,

    /// Quadrature / configuration size.
    #[arg(long, global = true, default_value_t = 256)]
    n: usize,

    /// Optimizer restarts (0 = default of 8 + m).
    #[arg(long, global = true, default_value_t = 0)]
    restarts: usize,

    /// Seed for randomized experiments.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the result to this file (also printed to stdout).
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Comma-separated radii for riesz-check, e.g. "10,100,1000".
    #[arg(long, global = true)]
    radii: Option<String>,

    /// Comma-separated growth sequence for demo-countable, e.g. "1,2,3,4".
    #[arg(long = "A", global = true)]
    sequence: Option<String>,

    /// Experiment manifest (JSON) for verify.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Logarithmic capacity (analytic or Fekete estimates).
    Capacity,
    /// The set constant C_E and M_E = exp(C_E).
    Constant,
    /// The m-tuple constant C_E(m).
    ConstantM,
    /// Weighted constants C_E^w (and C_E^w(m) when --m is given).
    WeightedConstant,
    /// Minimal dominant set diagnostics.
    DominantSet,
    /// Batch of random factorization experiments from a manifest.
    Verify,
    /// Fekete/Leja extremal configuration export.
    Fekete,
    /// Circle-average mass estimates for log of a weighted distance function.
    RieszCheck,
    /// Growing-constant demo on a countable set.
    DemoCountable,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn parse_list(text: &str) -> Result<Vec<f64>, Error> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::BadConfig(format!("bad number {s:?} in list: {e}")))
        })
        .collect()
}

fn load_json<T: serde::de::DeserializeOwned>(path: &PathBuf, what: &str) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadConfig(format!("cannot read {what} file {path:?}: {e}")))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::BadConfig(format!("bad {what} file {path:?}: {e}")))
}

fn build_config(cli: &Cli) -> Result<RunConfig, Error> {
    let command = match cli.command {
        Cmd::Capacity => Command::Capacity,
        Cmd::Constant => Command::Constant,
        Cmd::ConstantM => Command::ConstantM,
        Cmd::WeightedConstant => Command::WeightedConstant,
        Cmd::DominantSet => Command::DominantSet,
        Cmd::Verify => Command::Verify,
        Cmd::Fekete => Command::Fekete,
        Cmd::RieszCheck => Command::RieszCheck,
        Cmd::DemoCountable => Command::DemoCountable,
    };
    let mut config = RunConfig::new(command);
    if let Some(path) = &cli.set {
        let set: SetSpec = load_json(path, "set spec")?;
        config.set = Some(set);
    }
    if let Some(path) = &cli.weight {
        let weight: WeightSpec = load_json(path, "weight spec")?;
        config.weight = Some(weight);
    }
    config.m = cli.m;
    config.n = cli.n;
    config.restarts = cli.restarts;
    config.seed = cli.seed;
    config.output = cli.output.clone();
    config.format = match cli.format {
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Json => OutputFormat::Json,
    };
    if let Some(radii) = &cli.radii {
        config.radii = parse_list(radii)?;
    }
    if let Some(seq) = &cli.sequence {
        config.sequence = parse_list(seq)?;
        if config.m.is_none() {
            config.m = Some(config.sequence.len());
        }
    }
    config.manifest = cli.manifest.clone();
    Ok(config)
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("POTCONST_THREADS") {
        if let Ok(k) = threads.trim().parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    let config = match build_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&config) {
        Ok(rendered) => {
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
