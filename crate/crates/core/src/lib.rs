//! Lorentz-covariant harmonic-oscillator model of two-body bound states.
//!
//! The crate covers longitudinal boost kinematics in light-cone form,
//! normalized Hermite–Gaussian wave functions at rest and boosted, their
//! momentum-energy counterpart, and a verification layer (finite-difference
//! residual of the oscillator equation, quadrature norms and overlaps,
//! widths, and the reduced density matrix obtained by integrating out the
//! time-separation variable).
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the `f64`
//! aliases below are what most callers want.
//!
//! ```
//! use covosc_core::{analysis, Rapidity64, State64};
//!
//! let eta = Rapidity64::new(std::f64::consts::LN_2).unwrap();
//! let moving = State64::ground(eta);
//! let rest = State64::ground(Rapidity64::zero());
//! let overlap = analysis::overlap(&moving, &rest, 64).unwrap();
//! assert!((overlap - 0.8).abs() < 1e-12);
//! ```

pub mod analysis;
pub mod error;
pub mod hermite;
pub mod kinematics;
pub mod linalg;
pub mod oscillator;
pub mod rest_of_universe;
pub mod scalar;

pub use error::{Error, Result};
pub use kinematics::{Beta, LightconePoint, Rapidity, SpacetimePoint};
pub use oscillator::{FourVector, OscillatorState};
pub use scalar::Real;

pub type Rapidity64 = kinematics::Rapidity<f64>;
pub type Beta64 = kinematics::Beta<f64>;
pub type SpacetimePoint64 = kinematics::SpacetimePoint<f64>;
pub type LightconePoint64 = kinematics::LightconePoint<f64>;
pub type FourVector64 = oscillator::FourVector<f64>;
pub type State64 = oscillator::OscillatorState<f64>;
pub type QuadratureRule64 = hermite::QuadratureRule<f64>;
pub type AxisSpec64 = analysis::AxisSpec<f64>;
pub type GridSpec64 = analysis::GridSpec<f64>;
pub type FieldGrid64 = analysis::FieldGrid<f64>;
pub type PartonScanRow64 = analysis::PartonScanRow<f64>;
pub type ReducedDensity64 = rest_of_universe::ReducedDensity<f64>;

pub type State32 = oscillator::OscillatorState<f32>;
pub type Rapidity32 = kinematics::Rapidity<f32>;
