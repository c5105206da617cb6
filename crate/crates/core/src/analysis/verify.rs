//! Independent checks of oscillator states: finite-difference residual of
//! the Lorentz-invariant oscillator equation, quadrature norms and overlaps.

use rayon::prelude::*;

use crate::analysis::grid::GridSpec;
use crate::error::{Error, Result};
use crate::hermite::{gauss_hermite, QuadratureRule};
use crate::kinematics::{to_lightcone, LightconePoint, SpacetimePoint};
use crate::oscillator::{psi_boosted, psi_lightcone, OscillatorState};
use crate::scalar::Real;

pub const MIN_FD_STEP: f64 = 1e-4;
pub const MAX_FD_STEP: f64 = 1e-1;
pub const DEFAULT_FD_STEP: f64 = 0.01;
/// Points with `|ψ|` below this fraction of the peak are excluded from residuals.
pub const RESIDUAL_MASK: f64 = 1e-6;

/// Finite-difference discretization of
/// `D = ½[(z² − ∂²_z) − (t² − ∂²_t)] = uv − ∂_u ∂_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stencil {
    /// Five-point central differences along `z` and `t`. Its error grows like
    /// `e^{2|η|}` for boosted states.
    Cartesian,
    /// Central mixed difference along the light-cone axes with steps
    /// `h e^{η}` (along `u`) and `h e^{−η}` (along `v`), matched to the
    /// squeezed support. Error is `O(h²)` uniformly in `η`.
    #[default]
    SqueezeAdapted,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeResidual<T> {
    /// Least-squares eigenvalue `Σ ψ Dψ / Σ ψ²` over unmasked points.
    pub lambda: T,
    /// Expected eigenvalue `n_z` under the sign convention with ground state at 0.
    pub eigenvalue: T,
    /// `max |Dψ − n_z ψ| / max|ψ|` over unmasked points.
    pub max_rel_residual: T,
    /// Number of grid points that survived the mask.
    pub points: usize,
}

pub fn pde_residual<T: Real>(
    state: &OscillatorState<T>,
    grid: &GridSpec<T>,
    fd_step: T,
) -> Result<PdeResidual<T>> {
    pde_residual_with(state, grid, fd_step, Stencil::default())
}

pub fn pde_residual_with<T: Real>(
    state: &OscillatorState<T>,
    grid: &GridSpec<T>,
    fd_step: T,
    stencil: Stencil,
) -> Result<PdeResidual<T>> {
    if !(fd_step >= T::lit(MIN_FD_STEP) && fd_step <= T::lit(MAX_FD_STEP)) {
        return Err(Error::Config(format!(
            "fd_step {fd_step} outside [{MIN_FD_STEP}, {MAX_FD_STEP}]"
        )));
    }
    if !state.is_longitudinal() {
        return Err(Error::Contract(
            "pde_residual covers the (z, t) sector only; n_x and n_y must be 0".into(),
        ));
    }
    let (nz, nt) = grid.shape();
    let h = fd_step;
    let eigenvalue = T::from_u32(state.n_z()).unwrap();

    // (ψ, Dψ) per point, row-parallel
    let samples: Vec<(T, T)> = (0..nz)
        .into_par_iter()
        .flat_map_iter(|i| {
            let z = grid.first.coord(i);
            (0..nt).map(move |j| {
                let t = grid.second.coord(j);
                apply_operator(state, z, t, h, stencil)
            })
        })
        .collect();

    let peak = samples.iter().fold(T::zero(), |m, &(p, _)| m.max(p.abs()));
    if !(peak > T::zero() && peak.is_finite()) {
        return Err(Error::NumericIntegrity(
            "wave function vanishes or is non-finite on the grid".into(),
        ));
    }
    let floor = T::lit(RESIDUAL_MASK) * peak;
    let mut worst = T::zero();
    let (mut num, mut den) = (T::zero(), T::zero());
    let mut points = 0;
    for &(p, dp) in &samples {
        if p.abs() <= floor {
            continue;
        }
        points += 1;
        worst = worst.max((dp - eigenvalue * p).abs());
        num += p * dp;
        den += p * p;
    }
    let result = PdeResidual {
        lambda: num / den,
        eigenvalue,
        max_rel_residual: worst / peak,
        points,
    };
    if !(result.lambda.is_finite() && result.max_rel_residual.is_finite()) {
        return Err(Error::NumericIntegrity("non-finite residual".into()));
    }
    Ok(result)
}

fn apply_operator<T: Real>(
    state: &OscillatorState<T>,
    z: T,
    t: T,
    h: T,
    stencil: Stencil,
) -> (T, T) {
    let psi = psi_boosted(state, z, t);
    match stencil {
        Stencil::Cartesian => {
            let h2 = h * h;
            let d_zz =
                (psi_boosted(state, z + h, t) + psi_boosted(state, z - h, t) - T::two() * psi) / h2;
            let d_tt =
                (psi_boosted(state, z, t + h) + psi_boosted(state, z, t - h) - T::two() * psi) / h2;
            let d = T::half() * ((z * z - t * t) * psi - d_zz + d_tt);
            (psi, d)
        }
        Stencil::SqueezeAdapted => {
            let lc = to_lightcone(SpacetimePoint::new(z, t));
            let e = state.eta().stretch();
            let (hu, hv) = (h * e, h / e);
            let at = |du: T, dv: T| psi_lightcone(state, LightconePoint::new(lc.u + du, lc.v + dv));
            let d_uv =
                (at(hu, hv) - at(hu, -hv) - at(-hu, hv) + at(-hu, -hv)) / (T::lit(4.0) * hu * hv);
            (psi, lc.u * lc.v * psi - d_uv)
        }
    }
}

/// `∫∫ f(u, v) du dv` with Gauss–Hermite nodes scaled by `(s_u, s_v)` in the
/// light-cone plane. The squeeze has unit Jacobian, so this equals the
/// `(z, t)` integral.
pub(crate) fn lightcone_integral<T: Real>(
    rule: &QuadratureRule<T>,
    s_u: T,
    s_v: T,
    f: impl Fn(T, T) -> T,
) -> T {
    let nodes = rule.nodes();
    let w = rule.plain_weights();
    let mut total = T::zero();
    for (i, &xu) in nodes.iter().enumerate() {
        let u = s_u * xu;
        let mut row = T::zero();
        for (j, &xv) in nodes.iter().enumerate() {
            row += w[j] * f(u, s_v * xv);
        }
        total += w[i] * row;
    }
    total * s_u * s_v
}

/// Light-cone Gaussian scales `(s_u, s_v)` of `ψ_a ψ_b`: each factor carries
/// `exp(−½(e^{−2η}u² + e^{2η}v²))`.
pub(crate) fn product_scales<T: Real>(a: &OscillatorState<T>, b: &OscillatorState<T>) -> (T, T) {
    let ea = (T::two() * a.eta().value()).exp();
    let eb = (T::two() * b.eta().value()).exp();
    let s_u = (T::two() / (T::one() / ea + T::one() / eb)).sqrt();
    let s_v = (T::two() / (ea + eb)).sqrt();
    (s_u, s_v)
}

/// `∫∫ |ψ(z, t)|² dz dt`; the transverse factors are normalized separately.
pub fn norm<T: Real>(state: &OscillatorState<T>, order: usize) -> Result<T> {
    overlap_unchecked(state, state, order)
}

/// `∫∫ ψ_a ψ_b dz dt` for states with equal transverse quantum numbers.
pub fn overlap<T: Real>(a: &OscillatorState<T>, b: &OscillatorState<T>, order: usize) -> Result<T> {
    if a.n_x() != b.n_x() || a.n_y() != b.n_y() {
        return Err(Error::Contract(format!(
            "overlap needs equal transverse quantum numbers, got ({}, {}) vs ({}, {})",
            a.n_x(),
            a.n_y(),
            b.n_x(),
            b.n_y()
        )));
    }
    overlap_unchecked(a, b, order)
}

fn overlap_unchecked<T: Real>(
    a: &OscillatorState<T>,
    b: &OscillatorState<T>,
    order: usize,
) -> Result<T> {
    let rule = gauss_hermite(order)?;
    let (s_u, s_v) = product_scales(a, b);
    let value = lightcone_integral(&rule, s_u, s_v, |u, v| {
        let lc = LightconePoint::new(u, v);
        psi_lightcone(a, lc) * psi_lightcone(b, lc)
    });
    if !value.is_finite() {
        return Err(Error::NumericIntegrity("non-finite overlap".into()));
    }
    Ok(value)
}
