//! Flag parsing, `key = value` config files and the resolved [`RunConfig`].

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Boost,
    Grid,
    Marginal,
    Overlap,
    Verify,
    PartonScan,
    EntropyScan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisArg {
    Z,
    T,
    U,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationArg {
    Spacetime,
    Momentum,
}

/// Raw command line. Every value is optional so that file entries and
/// defaults can fill the gaps.
#[derive(Debug, Parser)]
#[command(
    name = "covosc",
    version,
    about = "Covariant harmonic oscillator: boosts, wave-function grids, verification and scans",
    allow_negative_numbers = true,
    args_override_self = true
)]
pub struct Cli {
    /// Subcommand to run.
    #[arg(value_enum)]
    pub command: Command,
    /// `key = value` file with defaults for any flag below.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Rapidity of the (first) state.
    #[arg(long, conflicts_with_all = ["beta", "etas"])]
    pub eta: Option<f64>,
    /// Velocity, converted to rapidity.
    #[arg(long, conflicts_with = "etas")]
    pub beta: Option<f64>,
    /// Comma-separated rapidities for scans.
    #[arg(long, value_delimiter = ',')]
    pub etas: Option<Vec<f64>>,
    #[arg(long = "n-z")]
    pub n_z: Option<u32>,
    #[arg(long = "n-x")]
    pub n_x: Option<u32>,
    #[arg(long = "n-y")]
    pub n_y: Option<u32>,
    #[arg(long)]
    pub min: Option<f64>,
    #[arg(long)]
    pub max: Option<f64>,
    #[arg(long)]
    pub step: Option<f64>,
    /// Gauss–Hermite order.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long = "fd-step")]
    pub fd_step: Option<f64>,
    #[arg(long, value_enum)]
    pub axis: Option<AxisArg>,
    #[arg(long, value_enum)]
    pub representation: Option<RepresentationArg>,
    /// Longitudinal coordinate for `boost`.
    #[arg(long)]
    pub z: Option<f64>,
    /// Time coordinate for `boost`.
    #[arg(long)]
    pub t: Option<f64>,
    /// Longitudinal excitation of the second state for `overlap`.
    #[arg(long = "other-n-z")]
    pub other_n_z: Option<u32>,
    /// Rapidity of the second state for `overlap`.
    #[arg(long = "other-eta")]
    pub other_eta: Option<f64>,
    /// Grid points for `entropy-scan`.
    #[arg(long)]
    pub points: Option<usize>,
    /// Grid half-span in units of σ_z for `entropy-scan`.
    #[arg(long = "span-sigmas")]
    pub span_sigmas: Option<f64>,
    /// Leading eigenvalues reported by `entropy-scan`.
    #[arg(long = "spectrum-count")]
    pub spectrum_count: Option<usize>,
}

/// Flags a config file may set.
const FILE_KEYS: &[&str] = &[
    "output",
    "format",
    "eta",
    "beta",
    "etas",
    "n-z",
    "n-x",
    "n-y",
    "min",
    "max",
    "step",
    "order",
    "fd-step",
    "axis",
    "representation",
    "z",
    "t",
    "other-n-z",
    "other-eta",
    "points",
    "span-sigmas",
    "spectrum-count",
];

/// Flags that exclude each other; setting one on the command line drops the
/// others from the file.
const RAPIDITY_GROUP: &[&str] = &["eta", "beta", "etas"];

pub const DEFAULT_ORDER: usize = 64;
pub const DEFAULT_FD_STEP: f64 = 0.01;
pub const DEFAULT_GRID_SIGMAS: f64 = 4.0;
pub const DEFAULT_GRID_INTERVALS: usize = 120;
pub const DEFAULT_POINTS: usize = 400;
pub const DEFAULT_SPAN_SIGMAS: f64 = 6.0;
pub const DEFAULT_SPECTRUM_COUNT: usize = 4;

/// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
pub fn parse_config_file(text: &str, origin: &Path) -> Result<Vec<(String, String)>, CliError> {
    let mut entries = Vec::new();
    let mut seen = BTreeSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "{}:{}: expected `key = value`",
                origin.display(),
                lineno + 1
            ))
        })?;
        let key = key.trim().replace('_', "-");
        let value = value.trim().trim_matches('"').to_string();
        if !FILE_KEYS.contains(&key.as_str()) {
            return Err(CliError::Usage(format!(
                "{}:{}: unknown key '{key}'",
                origin.display(),
                lineno + 1
            )));
        }
        if !seen.insert(key.clone()) {
            return Err(CliError::Usage(format!(
                "{}:{}: duplicate key '{key}'",
                origin.display(),
                lineno + 1
            )));
        }
        entries.push((key, value));
    }
    Ok(entries)
}

fn flag_names(args: &[OsString]) -> BTreeSet<String> {
    args.iter()
        .filter_map(|a| a.to_str())
        .filter_map(|a| a.strip_prefix("--"))
        .map(|a| a.split('=').next().unwrap_or(a).to_string())
        .collect()
}

fn find_config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut iter = args.iter();
    while let Some(a) = iter.next() {
        let s = a.to_str()?;
        if s == "--config" {
            return iter.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Parses the command line, splicing in config-file entries ahead of the
/// real flags so that flags win.
pub fn parse_cli(args: Vec<OsString>) -> Result<Cli, CliError> {
    let (program, rest) = match args.split_first() {
        Some((p, r)) => (p.clone(), r.to_vec()),
        None => (OsString::from("covosc"), Vec::new()),
    };
    let mut argv = vec![program];
    if let Some(path) = find_config_path(&rest) {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let given = flag_names(&rest);
        let group_given = RAPIDITY_GROUP.iter().any(|k| given.contains(*k));
        for (key, value) in parse_config_file(&text, &path)? {
            if given.contains(&key) || (group_given && RAPIDITY_GROUP.contains(&key.as_str())) {
                continue;
            }
            argv.push(OsString::from(format!("--{key}={value}")));
        }
    }
    argv.extend(rest);
    Cli::try_parse_from(argv).map_err(CliError::from)
}

/// Fully resolved settings of one run, embedded verbatim in every output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    /// Not embedded: the same run written to two places must be byte-identical.
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub eta: f64,
    pub etas: Vec<f64>,
    pub n_z: u32,
    pub n_x: u32,
    pub n_y: u32,
    pub grid_min: Option<f64>,
    pub grid_max: Option<f64>,
    pub grid_step: Option<f64>,
    pub order: usize,
    pub fd_step: f64,
    pub axis: AxisArg,
    pub representation: RepresentationArg,
    pub z: f64,
    pub t: f64,
    pub other_n_z: u32,
    pub other_eta: f64,
    pub points: usize,
    pub span_sigmas: f64,
    pub spectrum_count: usize,
}

impl RunConfig {
    /// Applies defaults. Grid bounds stay `None` here and are filled in by
    /// the command once the state is known.
    pub fn resolve(cli: Cli) -> Result<Self, CliError> {
        let eta = match (cli.eta, cli.beta) {
            (Some(e), _) => e,
            (None, Some(b)) => {
                let beta = covosc_core::Beta::new(b)?;
                covosc_core::kinematics::rapidity_from_beta(beta)?.value()
            }
            (None, None) => 0.0,
        };
        let format = cli.format.unwrap_or(match cli.command {
            Command::Verify | Command::Overlap => Format::Json,
            _ => Format::Csv,
        });
        let etas = match cli.etas {
            Some(list) if list.is_empty() => {
                return Err(CliError::Usage("--etas needs at least one value".into()))
            }
            Some(list) => list,
            None => vec![eta],
        };
        Ok(RunConfig {
            command: cli.command,
            format,
            output: cli.output,
            eta,
            etas,
            n_z: cli.n_z.unwrap_or(0),
            n_x: cli.n_x.unwrap_or(0),
            n_y: cli.n_y.unwrap_or(0),
            grid_min: cli.min,
            grid_max: cli.max,
            grid_step: cli.step,
            order: cli.order.unwrap_or(DEFAULT_ORDER),
            fd_step: cli.fd_step.unwrap_or(DEFAULT_FD_STEP),
            axis: cli.axis.unwrap_or(AxisArg::Z),
            representation: cli.representation.unwrap_or(RepresentationArg::Spacetime),
            z: cli.z.unwrap_or(0.0),
            t: cli.t.unwrap_or(0.0),
            other_n_z: cli.other_n_z.unwrap_or(0),
            other_eta: cli.other_eta.unwrap_or(0.0),
            points: cli.points.unwrap_or(DEFAULT_POINTS),
            span_sigmas: cli.span_sigmas.unwrap_or(DEFAULT_SPAN_SIGMAS),
            spectrum_count: cli.spectrum_count.unwrap_or(DEFAULT_SPECTRUM_COUNT),
        })
    }

    /// Fills missing grid bounds symmetric around zero with `half_width`,
    /// and a missing step with a fixed number of intervals.
    pub fn settle_grid(&mut self, half_width: f64) {
        let min = *self.grid_min.get_or_insert(-half_width);
        let max = *self.grid_max.get_or_insert(half_width);
        self.grid_step
            .get_or_insert((max - min) / DEFAULT_GRID_INTERVALS as f64);
    }
}
