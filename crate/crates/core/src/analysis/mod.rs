//! Verification of oscillator states and the observables derived from them.

pub mod grid;
pub mod observables;
pub mod verify;

pub use grid::{AxisSpec, FieldGrid, GridAxis, GridSpec};
pub use observables::{
    adaptive_grid, marginal, momentum_variance, parton_scan, position_moments, render_grid,
    spatial_sigma, Axis, PartonScanRow, Representation, DEFAULT_ORDER,
};
pub use verify::{
    norm, overlap, pde_residual, pde_residual_with, PdeResidual, Stencil, DEFAULT_FD_STEP,
};
