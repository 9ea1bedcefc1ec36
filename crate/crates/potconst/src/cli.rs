//! Command-line front end: parse set/weight spec files, dispatch the
//! computations and render JSON or tidy CSV.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::constants::{constant_ce, constant_cem, ConstantReport, DominantSetReport};
use crate::equilibrium::{self, CapacityEstimate};
use crate::error::{Error, Result};
use crate::fekete::{self, FeketeEnsemble};
use crate::geometry::SetSpec;
use crate::verify::{
    countable_set_demo, countable_set_demo_exact, FactorizationExperiment, Verifier,
};
use crate::weighted::{constant_cew, constant_cewm, riesz_mass_check, WeightSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Capacity,
    Constant,
    ConstantM,
    WeightedConstant,
    DominantSet,
    Verify,
    Fekete,
    RieszCheck,
    DemoCountable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One resolved invocation of the front end.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub set: Option<SetSpec>,
    pub weight: Option<WeightSpec>,
    pub m: Option<usize>,
    pub n: usize,
    /// 0 selects the per-operation default.
    pub restarts: usize,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    /// Radii for `riesz-check`.
    pub radii: Vec<f64>,
    /// Growth sequence for `demo-countable`.
    pub sequence: Vec<f64>,
    /// Experiment manifest for `verify`.
    pub manifest: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            set: None,
            weight: None,
            m: None,
            n: 256,
            restarts: 0,
            seed: 0,
            output: None,
            format: OutputFormat::Json,
            radii: Vec::new(),
            sequence: Vec::new(),
            manifest: None,
        }
    }

    fn require_set(&self) -> Result<&SetSpec> {
        self.set
            .as_ref()
            .ok_or_else(|| Error::BadConfig("this command needs --set".into()))
    }

    fn require_m(&self) -> Result<usize> {
        self.m
            .ok_or_else(|| Error::BadConfig("this command needs --m".into()))
    }
}

#[derive(Serialize)]
struct Labeled<T: Serialize> {
    set_id: String,
    #[serde(flatten)]
    report: T,
}

/// Manifest format for `verify`: a batch per entry, each reproducible from
/// its seed.
#[derive(Debug, Deserialize)]
pub struct VerifyManifest {
    pub experiments: Vec<VerifyEntry>,
}

#[derive(Debug, Deserialize)]
pub struct VerifyEntry {
    pub set: SetSpec,
    #[serde(default)]
    pub weight: Option<WeightSpec>,
    pub m: usize,
    pub n: usize,
    /// Falls back to the run's `--seed` when omitted.
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default = "default_count")]
    pub count: usize,
}

fn default_count() -> usize {
    10
}

fn ensure_sane(value: f64) -> Result<f64> {
    if value.is_nan() {
        return Err(Error::NumericFailure("result is NaN".into()));
    }
    if value < -1e-9 {
        return Err(Error::NumericFailure(format!(
            "constant {value} is negative beyond tolerance"
        )));
    }
    Ok(value)
}

fn render_constant(set: &SetSpec, report: &ConstantReport, format: OutputFormat) -> Result<String> {
    ensure_sane(report.value)?;
    match format {
        OutputFormat::Json => {
            let labeled = Labeled {
                set_id: set.descriptor(),
                report: report.clone(),
            };
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&labeled).map_err(to_bad_config)?
            ))
        }
        OutputFormat::Csv => Ok(format!(
            "set_id,m,value,exp_value,method,n_quadrature,error_hint\n{}",
            report.csv_row(&set.descriptor())
        )),
    }
}

fn to_bad_config<E: std::fmt::Display>(e: E) -> Error {
    Error::BadConfig(e.to_string())
}

/// Execute the configured command and return the rendered output. The output
/// is also written to `config.output` when set. Identical configurations
/// (and seeds) produce byte-identical output.
pub fn run(config: &RunConfig) -> Result<String> {
    // The floor applies to quadrature/configuration sizes; demo-countable
    // reuses --n as the factor count and riesz-check sizes itself.
    let n_is_quadrature =
        !matches!(config.command, Command::DemoCountable | Command::RieszCheck);
    if n_is_quadrature && config.n < 8 {
        return Err(Error::BadConfig("--n must be at least 8".into()));
    }
    let rendered = match config.command {
        Command::Capacity => {
            let set = config.require_set()?;
            let estimate: CapacityEstimate = equilibrium::capacity(set, config.n)?;
            match config.format {
                OutputFormat::Json => {
                    let labeled = Labeled {
                        set_id: set.descriptor(),
                        report: estimate,
                    };
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&labeled).map_err(to_bad_config)?
                    )
                }
                OutputFormat::Csv => format!(
                    "set_id,value,method,n_used,error_hint\n{},{},{:?},{},{}\n",
                    set.descriptor(),
                    estimate.value,
                    estimate.method,
                    estimate.n_used,
                    estimate.error_hint
                ),
            }
        }
        Command::Constant => {
            let set = config.require_set()?;
            let report = constant_ce(set, config.n)?;
            render_constant(set, &report, config.format)?
        }
        Command::ConstantM => {
            let set = config.require_set()?;
            let report = constant_cem(set, config.require_m()?, config.n, config.restarts)?;
            render_constant(set, &report, config.format)?
        }
        Command::WeightedConstant => {
            let set = config.require_set()?;
            let weight = config
                .weight
                .clone()
                .ok_or_else(|| Error::BadConfig("weighted-constant needs --weight".into()))?;
            let report = match config.m {
                Some(m) => constant_cewm(set, &weight, m, config.n, config.restarts)?,
                None => constant_cew(set, &weight, config.n)?,
            };
            render_constant(set, &report, config.format)?
        }
        Command::DominantSet => {
            let set = config.require_set()?;
            let mu = equilibrium::equilibrium_measure(set, config.n)?;
            let report: DominantSetReport = crate::constants::dominant_set(set, &mu)?;
            match config.format {
                OutputFormat::Json => {
                    let labeled = Labeled {
                        set_id: set.descriptor(),
                        report,
                    };
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&labeled).map_err(to_bad_config)?
                    )
                }
                OutputFormat::Csv => {
                    let mut out = String::from("re,im\n");
                    for p in &report.set_points {
                        out.push_str(&format!("{},{}\n", p.re, p.im));
                    }
                    out
                }
            }
        }
        Command::Verify => {
            let path = config
                .manifest
                .as_ref()
                .ok_or_else(|| Error::BadConfig("verify needs --manifest".into()))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::BadConfig(format!("cannot read manifest: {e}")))?;
            let manifest: VerifyManifest = serde_json::from_str(&text)
                .map_err(|e| Error::BadConfig(format!("bad manifest: {e}")))?;
            let mut experiments: Vec<FactorizationExperiment> = Vec::new();
            for entry in &manifest.experiments {
                let weight = entry.weight.clone().unwrap_or(WeightSpec::Unit);
                let verifier = Verifier::new(entry.set.clone(), weight, config.n, config.restarts)?;
                let seed = entry.seed.unwrap_or(config.seed);
                experiments.extend(verifier.random_factorizations(
                    entry.m,
                    entry.n,
                    seed,
                    entry.count,
                )?);
            }
            match config.format {
                OutputFormat::Json => {
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&experiments).map_err(to_bad_config)?
                    )
                }
                OutputFormat::Csv => {
                    let mut out = String::from(FactorizationExperiment::CSV_HEADER);
                    for e in &experiments {
                        out.push_str(&e.csv_row());
                    }
                    out
                }
            }
        }
        Command::Fekete => {
            let set = config.require_set()?;
            let ensemble: FeketeEnsemble =
                fekete::fekete_points(set, config.n, config.weight.as_ref())?;
            match config.format {
                OutputFormat::Json => {
                    let labeled = Labeled {
                        set_id: set.descriptor(),
                        report: ensemble,
                    };
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&labeled).map_err(to_bad_config)?
                    )
                }
                OutputFormat::Csv => ensemble.to_csv(),
            }
        }
        Command::RieszCheck => {
            let set = config.require_set()?;
            let points = match &set.kind {
                crate::geometry::SetKind::FinitePoints { points } => points.clone(),
                _ => {
                    return Err(Error::BadConfig(
                        "riesz-check expects a finite point set (kind \"points\")".into(),
                    ))
                }
            };
            let weights = match &config.weight {
                Some(WeightSpec::Tabulated { values }) => values.clone(),
                Some(WeightSpec::Unit) | None => vec![1.0; points.len()],
                Some(other) => {
                    return Err(Error::BadConfig(format!(
                        "riesz-check takes unit or tabulated weights, not {}",
                        other.kind_name()
                    )))
                }
            };
            if config.radii.is_empty() {
                return Err(Error::BadConfig("riesz-check needs --radii".into()));
            }
            let rows = riesz_mass_check(&points, &weights, &config.radii)?;
            match config.format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Row {
                        radius: f64,
                        mass_estimate: f64,
                    }
                    let rows: Vec<Row> = rows
                        .into_iter()
                        .map(|(radius, mass_estimate)| Row {
                            radius,
                            mass_estimate,
                        })
                        .collect();
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&rows).map_err(to_bad_config)?
                    )
                }
                OutputFormat::Csv => {
                    let mut out = String::from("radius,mass_estimate\n");
                    for (r, m) in rows {
                        out.push_str(&format!("{r},{m}\n"));
                    }
                    out
                }
            }
        }
        Command::DemoCountable => {
            if config.sequence.is_empty() {
                return Err(Error::BadConfig("demo-countable needs --A".into()));
            }
            // --n names the factor count here; --m overrides if given.
            let n = config.m.unwrap_or(config.n).min(config.sequence.len());
            let ratio = countable_set_demo(&config.sequence, n)?;
            let exact = countable_set_demo_exact(&config.sequence, n)?;
            let bound = config.sequence[n - 1];
            let exact_ok = exact >= num_rational::Ratio::from_float(bound).unwrap();
            match config.format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Demo {
                        n: usize,
                        ratio: f64,
                        bound: f64,
                        exact_bound_holds: bool,
                    }
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&Demo {
                            n,
                            ratio,
                            bound,
                            exact_bound_holds: exact_ok
                        })
                        .map_err(to_bad_config)?
                    )
                }
                OutputFormat::Csv => {
                    format!("n,ratio,bound,exact_bound_holds\n{n},{ratio},{bound},{exact_ok}\n")
                }
            }
        }
    };

    if let Some(path) = &config.output {
        std::fs::write(path, &rendered)
            .map_err(|e| Error::BadConfig(format!("cannot write output: {e}")))?;
    }
    Ok(rendered)
}
