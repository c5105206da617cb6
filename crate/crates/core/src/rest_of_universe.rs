//! Reduced density matrix of the boosted ground state after integrating out
//! the unobserved time-separation variable.
//!
//! `ρ(z, z′) = ∫ ψ_η(z, t) ψ_η(z′, t) dt` is sampled on a uniform `z` grid and
//! stored as `W^{1/2} ρ W^{1/2}` with trapezoid weights `W`, so that the
//! matrix spectrum approximates the continuum spectrum and its trace the
//! continuum trace.

use rayon::prelude::*;

use crate::analysis::grid::AxisSpec;
use crate::error::{Error, Result};
use crate::hermite::gauss_hermite;
use crate::kinematics::Rapidity;
use crate::linalg::SymmetricMatrix;
use crate::oscillator::{psi_boosted, OscillatorState};
use crate::scalar::Real;

/// Eigenvalues below this are left out of the entropy sum.
pub const EIGEN_FLOOR: f64 = 1e-12;
/// Most negative eigenvalue tolerated as discretization noise.
pub const PSD_TOLERANCE: f64 = 1e-8;
/// Required grid half-span in units of `σ_z`.
pub const MIN_SPAN_SIGMAS: f64 = 4.0;
/// Half-span used by [`default_grid`] callers; the Gaussian tail mass left outside is about `2e−9`.
pub const DEFAULT_SPAN_SIGMAS: f64 = 6.0;
pub const DEFAULT_POINTS: usize = 400;

#[derive(Debug, Clone)]
pub struct ReducedDensity<T> {
    eta: Rapidity<T>,
    grid: AxisSpec<T>,
    weights: Vec<T>,
    matrix: SymmetricMatrix<T>,
    spectrum: Vec<T>,
    warnings: Vec<String>,
}

impl<T: Real> ReducedDensity<T> {
    pub fn eta(&self) -> Rapidity<T> {
        self.eta
    }

    pub fn grid(&self) -> &AxisSpec<T> {
        &self.grid
    }

    /// Weighted matrix `W^{1/2} ρ W^{1/2}`.
    pub fn matrix(&self) -> &SymmetricMatrix<T> {
        &self.matrix
    }

    /// `ρ(z_i, z_j)` without the quadrature weights.
    pub fn kernel(&self, i: usize, j: usize) -> T {
        self.matrix.get(i, j) / (self.weights[i] * self.weights[j]).sqrt()
    }

    /// Diagonal `ρ(z_i, z_i)`, the `z` probability density.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.weights.len()).map(|i| self.kernel(i, i)).collect()
    }

    /// Eigenvalues in descending order.
    pub fn spectrum(&self) -> &[T] {
        &self.spectrum
    }

    pub fn trace(&self) -> T {
        self.matrix.trace()
    }

    pub fn min_eigenvalue(&self) -> T {
        *self.spectrum.last().expect("non-empty spectrum")
    }

    /// Conditions noticed while building the matrix, e.g. a grid that is too narrow.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Builds `ρ(z, z′)` for the ground state at rapidity `eta`.
///
/// At fixed `(z, z′)` the integrand is a Gaussian in `t` centred at
/// `(z + z′) tanh(2η)/2` with scale `1/√cosh 2η`; the `t` rule is placed there.
pub fn reduce<T: Real>(
    eta: Rapidity<T>,
    grid: &AxisSpec<T>,
    t_order: usize,
) -> Result<ReducedDensity<T>> {
    let rule = gauss_hermite(t_order)?;
    let state = OscillatorState::ground(eta);
    let eta2 = T::two() * eta.value();
    let (cosh2, tanh2) = (eta2.cosh(), eta2.tanh());
    let scale = cosh2.sqrt().recip();
    let sigma_z = (cosh2 * T::half()).sqrt();

    let mut warnings = Vec::new();
    let need = T::lit(MIN_SPAN_SIGMAS) * sigma_z;
    if grid.min() > -need || grid.max() < need {
        warnings.push(format!(
            "grid [{}, {}] does not span ±{MIN_SPAN_SIGMAS} sigma_z = ±{need}",
            grid.min(),
            grid.max()
        ));
    }

    let z: Vec<T> = grid.coords().collect();
    let weights = grid.trapezoid_weights();
    let n = z.len();
    let root_w: Vec<T> = weights.iter().map(|w| w.sqrt()).collect();
    let upper: Vec<Vec<T>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i..n)
                .map(|j| {
                    let center = (z[i] + z[j]) * tanh2 * T::half();
                    let rho = rule.integrate_shifted(center, scale, |t| {
                        psi_boosted(&state, z[i], t) * psi_boosted(&state, z[j], t)
                    });
                    root_w[i] * rho * root_w[j]
                })
                .collect()
        })
        .collect();
    let matrix = SymmetricMatrix::from_upper(n, |i, j| upper[i][j - i]);
    if matrix.trace().is_nan() {
        return Err(Error::NumericIntegrity("non-finite reduced density".into()));
    }
    let spectrum = matrix.eigenvalues()?;
    Ok(ReducedDensity {
        eta,
        grid: *grid,
        weights,
        matrix,
        spectrum,
        warnings,
    })
}

/// Grid of `points` samples spanning `±sigmas · σ_z(η)`.
pub fn default_grid<T: Real>(eta: Rapidity<T>, sigmas: T, points: usize) -> Result<AxisSpec<T>> {
    let sigma_z = ((T::two() * eta.value()).cosh() * T::half()).sqrt();
    AxisSpec::symmetric(sigmas * sigma_z, points)
}

/// von Neumann entropy `−Σ λ ln λ` over eigenvalues above [`EIGEN_FLOOR`].
pub fn entropy<T: Real>(rho: &ReducedDensity<T>) -> Result<T> {
    let min = rho.min_eigenvalue();
    if min < -T::lit(PSD_TOLERANCE) {
        return Err(Error::NumericIntegrity(format!(
            "reduced density not positive semidefinite: eigenvalue {min}"
        )));
    }
    let floor = T::lit(EIGEN_FLOOR);
    Ok(rho
        .spectrum
        .iter()
        .filter(|&&l| l > floor)
        .fold(T::zero(), |s, &l| s - l * l.ln()))
}

/// `Tr ρ²` from the weighted matrix entries.
pub fn purity<T: Real>(rho: &ReducedDensity<T>) -> T {
    rho.matrix.frobenius_sq()
}
