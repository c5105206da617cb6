//! One function per subcommand, each producing a [`Table`].

use covosc_core::analysis::{self, Axis, AxisSpec, GridSpec, Representation};
use covosc_core::hermite::{gauss_hermite, hermite_function};
use covosc_core::kinematics::{boost_point, squeeze_lightcone, to_lightcone};
use covosc_core::rest_of_universe::{self, default_grid, reduce};
use covosc_core::{OscillatorState, Rapidity, SpacetimePoint};

use crate::config::{
    AxisArg, Command, RepresentationArg, RunConfig, DEFAULT_GRID_INTERVALS, DEFAULT_GRID_SIGMAS,
};
use crate::error::CliError;
use crate::output::{Cell, Table};

type State = OscillatorState<f64>;

pub struct Outcome {
    pub table: Table,
    pub warnings: Vec<String>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Outcome {
            table,
            warnings: Vec::new(),
        }
    }
}

/// Runs the configured command. Missing grid bounds are written back into
/// `cfg` for single-rapidity runs so the embedded config is fully resolved.
pub fn execute(cfg: &mut RunConfig) -> Result<Outcome, CliError> {
    let etas = rapidities(cfg)?;
    match cfg.command {
        Command::Boost => Ok(boost(cfg, &etas).into()),
        Command::Grid => grid(cfg, single(&etas, "grid")?).map(Into::into),
        Command::Marginal => marginal(cfg, single(&etas, "marginal")?).map(Into::into),
        Command::Overlap => overlap(cfg, &etas).map(Into::into),
        Command::Verify => verify(cfg, &etas).map(Into::into),
        Command::PartonScan => parton_scan(&etas).map(Into::into),
        Command::EntropyScan => entropy_scan(cfg, &etas),
    }
}

fn rapidities(cfg: &RunConfig) -> Result<Vec<Rapidity<f64>>, CliError> {
    cfg.etas
        .iter()
        .map(|&e| Rapidity::new(e).map_err(CliError::from))
        .collect()
}

fn single(etas: &[Rapidity<f64>], command: &str) -> Result<Rapidity<f64>, CliError> {
    match etas {
        [eta] => Ok(*eta),
        _ => Err(CliError::Usage(format!(
            "{command} takes a single rapidity, got {}",
            etas.len()
        ))),
    }
}

/// Axis from explicit bounds where given, `±half_width` and a fixed number
/// of intervals otherwise.
fn axis(cfg: &RunConfig, half_width: f64) -> Result<AxisSpec<f64>, CliError> {
    let min = cfg.grid_min.unwrap_or(-half_width);
    let max = cfg.grid_max.unwrap_or(half_width);
    let step = cfg
        .grid_step
        .unwrap_or((max - min) / DEFAULT_GRID_INTERVALS as f64);
    Ok(AxisSpec::new(min, max, step)?)
}

fn state(n_z: u32, cfg: &RunConfig, eta: Rapidity<f64>) -> Result<State, CliError> {
    Ok(OscillatorState::new(n_z, cfg.n_x, cfg.n_y, eta)?)
}

fn boost(cfg: &RunConfig, etas: &[Rapidity<f64>]) -> Table {
    let mut table = Table::new([
        "z",
        "t",
        "eta",
        "beta",
        "z_boosted",
        "t_boosted",
        "u",
        "v",
        "u_boosted",
        "v_boosted",
        "interval",
        "interval_boosted",
    ]);
    let p = SpacetimePoint::new(cfg.z, cfg.t);
    for &eta in etas {
        let b = boost_point(p, eta);
        let lc = to_lightcone(p);
        let lcb = squeeze_lightcone(lc, eta);
        table.push(
            [
                p.z,
                p.t,
                eta.value(),
                eta.to_beta().value(),
                b.z,
                b.t,
                lc.u,
                lc.v,
                lcb.u,
                lcb.v,
                p.interval(),
                b.interval(),
            ]
            .map(Cell::from)
            .to_vec(),
        );
    }
    table
}

fn field_table(field: &analysis::FieldGrid<f64>) -> Table {
    let mut table = Table::new(
        field
            .axes()
            .iter()
            .map(|a| a.label.clone())
            .chain(std::iter::once(field.value_label().to_string())),
    );
    for (coords, value) in field.samples() {
        table.push(
            coords
                .into_iter()
                .chain(std::iter::once(value))
                .map(Cell::from)
                .collect(),
        );
    }
    table
}

fn grid(cfg: &mut RunConfig, eta: Rapidity<f64>) -> Result<Table, CliError> {
    let s = state(cfg.n_z, cfg, eta)?;
    cfg.settle_grid(DEFAULT_GRID_SIGMAS * analysis::spatial_sigma(&s));
    let spec = GridSpec::square(axis(cfg, 0.0)?);
    let repr = match cfg.representation {
        RepresentationArg::Spacetime => Representation::Spacetime,
        RepresentationArg::Momentum => Representation::Momentum,
    };
    Ok(field_table(&analysis::render_grid(&s, &spec, repr)?))
}

fn marginal(cfg: &mut RunConfig, eta: Rapidity<f64>) -> Result<Table, CliError> {
    let s = state(cfg.n_z, cfg, eta)?;
    let (axis_kind, sigma) = match cfg.axis {
        AxisArg::Z => (Axis::Z, analysis::spatial_sigma(&s)),
        AxisArg::T => (Axis::T, analysis::spatial_sigma(&s)),
        // light-cone widths are e^{±η} √(n_z + ½); size for the wider one
        AxisArg::U | AxisArg::V => {
            let w = eta.value().abs().exp() * (f64::from(cfg.n_z) + 0.5).sqrt();
            (
                if cfg.axis == AxisArg::U {
                    Axis::U
                } else {
                    Axis::V
                },
                w,
            )
        }
    };
    cfg.settle_grid(DEFAULT_GRID_SIGMAS * sigma);
    let spec = axis(cfg, 0.0)?;
    Ok(field_table(&analysis::marginal(&s, axis_kind, &spec)?))
}

fn quadrature_order(cfg: &RunConfig, degree: u32) -> usize {
    cfg.order.max(degree as usize + 1)
}

fn overlap(cfg: &RunConfig, etas: &[Rapidity<f64>]) -> Result<Table, CliError> {
    let other_eta = Rapidity::new(cfg.other_eta)?;
    let mut table = Table::new(["n_z", "eta", "other_n_z", "other_eta", "overlap"]);
    for &eta in etas {
        let a = state(cfg.n_z, cfg, eta)?;
        let b = state(cfg.other_n_z, cfg, other_eta)?;
        let order = quadrature_order(cfg, cfg.n_z.max(cfg.other_n_z));
        let value = analysis::overlap(&a, &b, order)?;
        table.push(vec![
            cfg.n_z.into(),
            eta.value().into(),
            cfg.other_n_z.into(),
            other_eta.value().into(),
            value.into(),
        ]);
    }
    Ok(table)
}

/// `∫ h_n(x)² dx` by Gauss–Hermite quadrature.
fn transverse_norm(n: u32, order: usize) -> Result<f64, CliError> {
    let rule = gauss_hermite::<f64>(order)?;
    let mut total = 0.0;
    for (&x, &w) in rule.nodes().iter().zip(rule.plain_weights()) {
        let h = hermite_function(n, x)?;
        total += w * h * h;
    }
    Ok(total)
}

fn verify(cfg: &mut RunConfig, etas: &[Rapidity<f64>]) -> Result<Table, CliError> {
    let mut table = Table::new([
        "n_z",
        "n_x",
        "n_y",
        "eta",
        "lambda",
        "eigenvalue",
        "max_residual",
        "norm",
        "points",
    ]);
    for &eta in etas {
        let full = state(cfg.n_z, cfg, eta)?;
        let long = OscillatorState::longitudinal(cfg.n_z, eta)?;
        let half = DEFAULT_GRID_SIGMAS * analysis::spatial_sigma(&long);
        if etas.len() == 1 {
            cfg.settle_grid(half);
        }
        let spec = GridSpec::square(axis(cfg, half)?);
        let res = analysis::pde_residual(&long, &spec, cfg.fd_step)?;
        let norm = analysis::norm(&long, quadrature_order(cfg, cfg.n_z))?
            * transverse_norm(full.n_x(), quadrature_order(cfg, full.n_x()))?
            * transverse_norm(full.n_y(), quadrature_order(cfg, full.n_y()))?;
        table.push(vec![
            cfg.n_z.into(),
            cfg.n_x.into(),
            cfg.n_y.into(),
            eta.value().into(),
            res.lambda.into(),
            res.eigenvalue.into(),
            res.max_rel_residual.into(),
            norm.into(),
            Cell::Int(res.points as i64),
        ]);
    }
    Ok(table)
}

fn parton_scan(etas: &[Rapidity<f64>]) -> Result<Table, CliError> {
    let mut table = Table::new([
        "eta",
        "sigma_u",
        "sigma_v",
        "sigma_z",
        "sigma_qz",
        "aspect",
        "time_dilation",
    ]);
    for r in analysis::parton_scan(etas)? {
        table.push(
            [
                r.eta,
                r.sigma_u,
                r.sigma_v,
                r.sigma_z,
                r.sigma_qz,
                r.aspect,
                r.time_dilation,
            ]
            .map(Cell::from)
            .to_vec(),
        );
    }
    Ok(table)
}

fn entropy_scan(cfg: &RunConfig, etas: &[Rapidity<f64>]) -> Result<Outcome, CliError> {
    let k = cfg.spectrum_count;
    if k > cfg.points {
        return Err(CliError::Usage(format!(
            "spectrum-count {k} exceeds the {} grid points",
            cfg.points
        )));
    }
    let mut table = Table::new(
        ["eta", "entropy", "purity", "trace"]
            .map(String::from)
            .into_iter()
            .chain((0..k).map(|i| format!("lambda_{i}"))),
    );
    let mut warnings = Vec::new();
    for &eta in etas {
        let spec = default_grid(eta, cfg.span_sigmas, cfg.points)?;
        let rho = reduce(eta, &spec, cfg.order)?;
        warnings.extend(
            rho.warnings()
                .iter()
                .map(|w| format!("eta {}: {w}", eta.value())),
        );
        let mut row: Vec<Cell> = vec![
            eta.value().into(),
            rest_of_universe::entropy(&rho)?.into(),
            rest_of_universe::purity(&rho).into(),
            rho.trace().into(),
        ];
        row.extend(rho.spectrum()[..k].iter().map(|&l| Cell::Num(l)));
        table.push(row);
    }
    Ok(Outcome { table, warnings })
}
