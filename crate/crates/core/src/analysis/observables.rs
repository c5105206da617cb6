//! Physics observables of boosted states: marginal densities, light-cone and
//! longitudinal widths, momentum spread, parton-scan tables and sampled grids.

use rayon::prelude::*;

use crate::analysis::grid::{AxisSpec, FieldGrid, GridAxis, GridSpec};
use crate::analysis::verify::{lightcone_integral, product_scales};
use crate::error::{Error, Result};
use crate::hermite::gauss_hermite;
use crate::kinematics::{LightconePoint, Rapidity};
use crate::oscillator::{phi_lightcone, phi_momentum, psi_boosted, psi_lightcone, OscillatorState};
use crate::scalar::Real;

/// Quadrature order used by the observables unless a state needs more.
pub const DEFAULT_ORDER: usize = 64;

fn order_for(state: &OscillatorState<impl Real>) -> usize {
    DEFAULT_ORDER.max(state.n_z() as usize + 1)
}

/// Coordinate of the longitudinal plane a marginal or moment refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Z,
    T,
    U,
    V,
}

impl Axis {
    pub fn label(self) -> &'static str {
        match self {
            Axis::Z => "z",
            Axis::T => "t",
            Axis::U => "u",
            Axis::V => "v",
        }
    }

    fn of<T: Real>(self, u: T, v: T) -> T {
        let r = T::FRAC_1_SQRT_2();
        match self {
            Axis::Z => (u + v) * r,
            Axis::T => (u - v) * r,
            Axis::U => u,
            Axis::V => v,
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" => Ok(Axis::Z),
            "t" => Ok(Axis::T),
            "u" => Ok(Axis::U),
            "v" => Ok(Axis::V),
            other => Err(Error::Config(format!(
                "unknown axis '{other}' (expected z, t, u or v)"
            ))),
        }
    }
}

/// Closed-form standard deviation of `z` for a longitudinal state:
/// `σ_z² = ((2n_z + 1) cosh²η + sinh²η) / 2`. Used to size grids.
pub fn spatial_sigma<T: Real>(state: &OscillatorState<T>) -> T {
    let n = T::from_u32(2 * state.n_z() + 1).unwrap();
    let (c, s) = (state.eta().cosh(), state.eta().sinh());
    ((n * c * c + s * s) * T::half()).sqrt()
}

/// Square `(z, t)` grid spanning `±sigmas·σ_z` with `points` per axis.
pub fn adaptive_grid<T: Real>(
    state: &OscillatorState<T>,
    sigmas: T,
    points: usize,
) -> Result<GridSpec<T>> {
    Ok(GridSpec::square(AxisSpec::symmetric(
        sigmas * spatial_sigma(state),
        points,
    )?))
}

/// Probability density of one longitudinal coordinate, integrating `|ψ|²`
/// over its partner (`t` for `z`, `v` for `u`, and vice versa).
pub fn marginal<T: Real>(
    state: &OscillatorState<T>,
    axis: Axis,
    grid: &AxisSpec<T>,
) -> Result<FieldGrid<T>> {
    let rule = gauss_hermite(order_for(state))?;
    let eta2 = T::two() * state.eta().value();
    let (cosh2, tanh2) = (eta2.cosh(), eta2.tanh());
    let stretch = state.eta().stretch();
    let coords: Vec<T> = grid.coords().collect();
    let values: Vec<T> = coords
        .par_iter()
        .map(|&c| match axis {
            // |ψ|² ∝ exp(−cosh2η (t − z tanh2η)²) at fixed z, and symmetrically in z
            Axis::Z => rule.integrate_shifted(c * tanh2, cosh2.sqrt().recip(), |t| {
                psi_boosted(state, c, t).sq()
            }),
            Axis::T => rule.integrate_shifted(c * tanh2, cosh2.sqrt().recip(), |z| {
                psi_boosted(state, z, c).sq()
            }),
            Axis::U => rule.integrate_shifted(T::zero(), stretch.recip(), |v| {
                psi_lightcone(state, LightconePoint::new(c, v)).sq()
            }),
            Axis::V => rule.integrate_shifted(T::zero(), stretch, |u| {
                psi_lightcone(state, LightconePoint::new(u, c)).sq()
            }),
        })
        .collect();
    FieldGrid::new(
        vec![GridAxis {
            label: axis.label().to_string(),
            spec: *grid,
        }],
        "density",
        values,
    )
}

/// Mean and variance of a longitudinal coordinate under `|ψ|²`, by 2-D
/// quadrature on squeeze-adapted light-cone nodes.
pub fn position_moments<T: Real>(state: &OscillatorState<T>, axis: Axis) -> Result<(T, T)> {
    let rule = gauss_hermite(order_for(state))?;
    let (s_u, s_v) = product_scales(state, state);
    let density = |u: T, v: T| psi_lightcone(state, LightconePoint::new(u, v)).sq();
    let mass = lightcone_integral(&rule, s_u, s_v, density);
    let first = lightcone_integral(&rule, s_u, s_v, |u, v| axis.of(u, v) * density(u, v)) / mass;
    let second =
        lightcone_integral(&rule, s_u, s_v, |u, v| axis.of(u, v).sq() * density(u, v)) / mass;
    let var = second - first * first;
    if !(var.is_finite() && var > T::zero()) {
        return Err(Error::NumericIntegrity(format!(
            "bad {} variance {var}",
            axis.label()
        )));
    }
    Ok((first, var))
}

/// Variance of the longitudinal momentum `q_z` under the ground-state `|φ_η|²`.
///
/// Computed by quadrature and cross-checked against `cosh(2η)/2`; a mismatch
/// beyond `1e−8` relative is reported as a numeric-integrity error.
pub fn momentum_variance<T: Real>(eta: Rapidity<T>) -> Result<T> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let e = eta.stretch();
    let density = |qu: T, qv: T| phi_lightcone(eta, qu, qv).sq();
    // q_z = (q_u − q_v)/√2
    let qz = |qu: T, qv: T| (qu - qv) * T::FRAC_1_SQRT_2();
    let mass = lightcone_integral(&rule, e, e.recip(), density);
    let mean = lightcone_integral(&rule, e, e.recip(), |a, b| qz(a, b) * density(a, b)) / mass;
    let second =
        lightcone_integral(&rule, e, e.recip(), |a, b| qz(a, b).sq() * density(a, b)) / mass;
    let var = second - mean * mean;
    let closed = (T::two() * eta.value()).cosh() * T::half();
    if !var.is_finite() || (var - closed).abs() > T::lit(1e-8) * closed {
        return Err(Error::NumericIntegrity(format!(
            "momentum variance {var} disagrees with closed form {closed}"
        )));
    }
    Ok(var)
}

/// Widths of the ground state at one rapidity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartonScanRow<T> {
    pub eta: T,
    pub sigma_u: T,
    pub sigma_v: T,
    pub sigma_z: T,
    pub sigma_qz: T,
    /// `σ_u / σ_v`; `e^{2η}` for the ground state.
    pub aspect: T,
    /// `σ_u(η) / σ_u(0)`; `e^{η}`.
    pub time_dilation: T,
}

impl<T: Real> PartonScanRow<T> {
    /// `σ_z σ_qz`, `½` at rest and `cosh(2η)/2` in general.
    pub fn uncertainty_product(&self) -> T {
        self.sigma_z * self.sigma_qz
    }
}

/// One row of ground-state widths per rapidity, all from quadrature.
///
/// Along the boost the space-time and the momentum-energy distributions
/// stretch along the same light-cone axis, so `σ_z` and `σ_qz` grow together.
pub fn parton_scan<T: Real>(etas: &[Rapidity<T>]) -> Result<Vec<PartonScanRow<T>>> {
    if etas.is_empty() {
        return Err(Error::Config(
            "parton scan needs at least one rapidity".into(),
        ));
    }
    let rest = OscillatorState::<T>::ground(Rapidity::zero());
    let sigma_u_rest = position_moments(&rest, Axis::U)?.1.sqrt();
    etas.iter()
        .map(|&eta| {
            let state = OscillatorState::ground(eta);
            let sigma_u = position_moments(&state, Axis::U)?.1.sqrt();
            let sigma_v = position_moments(&state, Axis::V)?.1.sqrt();
            let sigma_z = position_moments(&state, Axis::Z)?.1.sqrt();
            let sigma_qz = momentum_variance(eta)?.sqrt();
            Ok(PartonScanRow {
                eta: eta.value(),
                sigma_u,
                sigma_v,
                sigma_z,
                sigma_qz,
                aspect: sigma_u / sigma_v,
                time_dilation: sigma_u / sigma_u_rest,
            })
        })
        .collect()
}

/// Which wave function [`render_grid`] samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// `ψ(z, t)`.
    Spacetime,
    /// `φ(q_z, q_0)`, ground state only.
    Momentum,
}

impl std::str::FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spacetime" => Ok(Representation::Spacetime),
            "momentum" => Ok(Representation::Momentum),
            other => Err(Error::Config(format!(
                "unknown representation '{other}' (expected spacetime or momentum)"
            ))),
        }
    }
}

/// Samples the longitudinal wave function on a two-axis grid.
pub fn render_grid<T: Real>(
    state: &OscillatorState<T>,
    grid: &GridSpec<T>,
    representation: Representation,
) -> Result<FieldGrid<T>> {
    if representation == Representation::Momentum {
        phi_momentum(state, T::zero(), T::zero())?;
    }
    let (n1, n2) = grid.shape();
    let values: Vec<T> = (0..n1)
        .into_par_iter()
        .flat_map_iter(|i| {
            let a = grid.first.coord(i);
            (0..n2).map(move |j| {
                let b = grid.second.coord(j);
                match representation {
                    Representation::Spacetime => psi_boosted(state, a, b),
                    Representation::Momentum => {
                        phi_momentum(state, a, b).expect("n_z checked above")
                    }
                }
            })
        })
        .collect();
    let (l1, l2, lv) = match representation {
        Representation::Spacetime => ("z", "t", "psi"),
        Representation::Momentum => ("q_z", "q_0", "phi"),
    };
    FieldGrid::new(
        vec![
            GridAxis {
                label: l1.into(),
                spec: grid.first,
            },
            GridAxis {
                label: l2.into(),
                spec: grid.second,
            },
        ],
        lv,
        values,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const INV_SQRT_PI: f64 = 0.564_189_583_547_756_3;

    fn rap(x: f64) -> Rapidity<f64> {
        Rapidity::new(x).unwrap()
    }

    fn trapezoid_variance(f: &FieldGrid<f64>) -> (f64, f64) {
        let spec = f.axes()[0].spec;
        let w = spec.trapezoid_weights();
        let (mut m0, mut m1, mut m2) = (0.0, 0.0, 0.0);
        for (i, x) in spec.coords().enumerate() {
            let p = w[i] * f.values()[i];
            m0 += p;
            m1 += p * x;
            m2 += p * x * x;
        }
        (m0, m2 / m0 - (m1 / m0).powi(2))
    }

    #[test]
    fn marginal_examples() {
        let g = OscillatorState::ground(rap(0.0));
        let axis = AxisSpec::symmetric(6.0, 241).unwrap();
        let m = marginal(&g, Axis::Z, &axis).unwrap();
        assert!((m.values()[120] - INV_SQRT_PI).abs() < 1e-6);
        for (x, d) in axis.coords().zip(m.values()) {
            assert!((d - INV_SQRT_PI * (-x * x).exp()).abs() < 1e-12);
        }
        assert!((m.integrate() - 1.0).abs() < 1e-6);

        for eta in [0.0, 0.8, 2.0] {
            let g = OscillatorState::ground(rap(eta));
            let axis = AxisSpec::symmetric(8.0 * eta.exp(), 801).unwrap();
            let m = marginal(&g, Axis::U, &axis).unwrap();
            let (mass, var) = trapezoid_variance(&m);
            assert!((mass - 1.0).abs() < 1e-6);
            assert!((var.sqrt() - eta.exp() / 2f64.sqrt()).abs() < 1e-6);
        }

        let g = OscillatorState::ground(rap(2.0));
        let axis = AxisSpec::symmetric(6.0 * 3.7, 1201).unwrap();
        let m = marginal(&g, Axis::Z, &axis).unwrap();
        let (mass, var) = trapezoid_variance(&m);
        assert!((mass - 1.0).abs() < 1e-6);
        assert!((var - 4f64.cosh() / 2.0).abs() < 1e-6, "{var}");
        assert!((var - 13.654116).abs() < 1e-5);
    }

    #[test]
    fn excited_marginals_normalize() {
        for axis_kind in [Axis::Z, Axis::T, Axis::U, Axis::V] {
            let s = OscillatorState::longitudinal(3, rap(0.7)).unwrap();
            let half = 8.0 * spatial_sigma(&s);
            let m = marginal(&s, axis_kind, &AxisSpec::symmetric(half, 1601).unwrap()).unwrap();
            assert!((m.integrate() - 1.0).abs() < 1e-6, "{axis_kind:?}");
            assert!(m.values().iter().all(|&d| d >= 0.0));
        }
    }

    #[test]
    fn moments_match_closed_forms() {
        for n in 0..4 {
            for eta in [0.0, 0.5, 1.5] {
                let s = OscillatorState::longitudinal(n, rap(eta)).unwrap();
                let (mean, var) = position_moments(&s, Axis::Z).unwrap();
                assert!(mean.abs() < 1e-12);
                assert!((var.sqrt() - spatial_sigma(&s)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn momentum_variance_examples() {
        assert!((momentum_variance(rap(0.0)).unwrap() - 0.5).abs() < 1e-12);
        assert!((momentum_variance(rap(std::f64::consts::LN_2)).unwrap() - 1.0625).abs() < 1e-12);
        assert!(momentum_variance(rap(3.0)).unwrap() > momentum_variance(rap(2.0)).unwrap());
    }

    #[test]
    fn width_duality() {
        for eta in [0.0, 0.3, 1.0, 2.0, 4.0] {
            let g = OscillatorState::ground(rap(eta));
            let z_var = position_moments(&g, Axis::Z).unwrap().1;
            let q_var = momentum_variance(rap(eta)).unwrap();
            assert!((z_var - q_var).abs() <= 1e-8 * q_var);
        }
    }

    #[test]
    fn parton_scan_examples() {
        let rows = parton_scan(&[rap(0.0), rap(std::f64::consts::LN_2), rap(5.0)]).unwrap();
        let r0 = rows[0];
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((r0.sigma_u - s).abs() < 1e-12 && (r0.sigma_v - s).abs() < 1e-12);
        assert!((r0.aspect - 1.0).abs() < 1e-12 && (r0.time_dilation - 1.0).abs() < 1e-12);
        assert!((r0.uncertainty_product() - 0.5).abs() < 1e-12);

        let r1 = rows[1];
        assert!((r1.sigma_u - 2f64.sqrt()).abs() < 1e-12);
        assert!((r1.sigma_v - 0.353_553_390_593_273_8).abs() < 1e-12);
        assert!((r1.aspect - 4.0).abs() < 1e-9);
        assert!(r1.uncertainty_product() > 0.5);

        // parton limit
        assert!(rows[2].sigma_v / rows[2].sigma_u < 1e-4);
        assert!(parton_scan::<f64>(&[]).is_err());
    }

    #[test]
    fn render_examples() {
        let g = OscillatorState::ground(rap(0.0));
        let grid = GridSpec::square(AxisSpec::new(-3.0, 3.0, 0.1).unwrap());
        let f = render_grid(&g, &grid, Representation::Spacetime).unwrap();
        assert_eq!(f.shape(), vec![61, 61]);
        let (idx, peak) = f.argmax_abs();
        assert!(f.coords_at(idx).iter().all(|c| c.abs() < 1e-12));
        assert!((peak - INV_SQRT_PI).abs() < 1e-15);

        let e2 = OscillatorState::longitudinal(2, rap(0.9)).unwrap();
        let f = render_grid(&e2, &grid, Representation::Spacetime).unwrap();
        for i in 0..61 {
            for j in 0..61 {
                let a = f.get(&[i, j]);
                let b = f.get(&[60 - i, 60 - j]);
                assert!((a - b).abs() < 1e-14);
            }
        }

        let e1 = OscillatorState::longitudinal(1, rap(0.0)).unwrap();
        assert!(matches!(
            render_grid(&e1, &grid, Representation::Momentum),
            Err(Error::Capability(_))
        ));
        let m = render_grid(&g, &grid, Representation::Momentum).unwrap();
        assert_eq!(m.axes()[0].label, "q_z");
    }

    #[test]
    fn boosted_peak_follows_positive_light_cone() {
        let g = OscillatorState::ground(rap(1.0));
        let best = (0..3600)
            .map(|k| {
                let th = k as f64 * std::f64::consts::TAU / 3600.0;
                (th, psi_boosted(&g, 2.0 * th.cos(), 2.0 * th.sin()))
            })
            .fold((0.0, 0.0), |b, x| if x.1 > b.1 { x } else { b });
        let (z, t) = (best.0.cos(), best.0.sin());
        assert!((z - t).abs() < 2e-3, "argmax at angle {}", best.0);
    }
}
