//! Covariant harmonic-oscillator wave functions of the quark separation
//! variable, at rest and boosted, in space-time and momentum-energy form.
//!
//! All wave functions carry their normalization constants and are real.
//! A boosted state is the rest-frame state evaluated at the inversely
//! squeezed light-cone arguments `u → e^{−η}u`, `v → e^{η}v`.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::hermite::{hermite_function_unchecked, MAX_DEGREE};
use crate::kinematics::{from_lightcone, to_lightcone, LightconePoint, Rapidity, SpacetimePoint};
use crate::scalar::Real;

/// Four-vector with time component first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector<T> {
    pub t: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> FourVector<T> {
    pub fn new(t: T, x: T, y: T, z: T) -> Self {
        FourVector { t, x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn scale(self, k: T) -> Self {
        Self::new(self.t * k, self.x * k, self.y * k, self.z * k)
    }

    /// Longitudinal `(z, t)` projection.
    pub fn longitudinal(self) -> SpacetimePoint<T> {
        SpacetimePoint::new(self.z, self.t)
    }
}

impl<T: Real> Add for FourVector<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for FourVector<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Mul<T> for FourVector<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        self.scale(k)
    }
}

/// Quantum numbers and boost of a two-quark oscillator state.
///
/// There is deliberately no time-like quantum number: the time-separation
/// factor is always the ground-state Hermite function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorState<T> {
    n_z: u32,
    n_x: u32,
    n_y: u32,
    eta: Rapidity<T>,
}

impl<T: Real> OscillatorState<T> {
    pub fn new(n_z: u32, n_x: u32, n_y: u32, eta: Rapidity<T>) -> Result<Self> {
        for (name, n) in [("n_z", n_z), ("n_x", n_x), ("n_y", n_y)] {
            if n > MAX_DEGREE {
                return Err(Error::Capability(format!(
                    "{name} = {n} exceeds cap {MAX_DEGREE}"
                )));
            }
        }
        Ok(OscillatorState { n_z, n_x, n_y, eta })
    }

    pub fn ground(eta: Rapidity<T>) -> Self {
        OscillatorState {
            n_z: 0,
            n_x: 0,
            n_y: 0,
            eta,
        }
    }

    /// State with only a longitudinal excitation.
    pub fn longitudinal(n_z: u32, eta: Rapidity<T>) -> Result<Self> {
        Self::new(n_z, 0, 0, eta)
    }

    pub fn n_z(&self) -> u32 {
        self.n_z
    }

    pub fn n_x(&self) -> u32 {
        self.n_x
    }

    pub fn n_y(&self) -> u32 {
        self.n_y
    }

    pub fn eta(&self) -> Rapidity<T> {
        self.eta
    }

    pub fn with_eta(self, eta: Rapidity<T>) -> Self {
        OscillatorState { eta, ..self }
    }

    /// Whether the state lives in the longitudinal `(z, t)` sector only.
    pub fn is_longitudinal(&self) -> bool {
        self.n_x == 0 && self.n_y == 0
    }
}

/// Hadron center and quark separation built from constituent coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationCoords<T> {
    pub center: FourVector<T>,
    pub separation: FourVector<T>,
}

/// `X = (x_a + x_b)/2`, `x = (x_a − x_b)/(2√2)`.
pub fn separation_from_constituents<T: Real>(
    x_a: FourVector<T>,
    x_b: FourVector<T>,
) -> SeparationCoords<T> {
    let k = T::one() / (T::two() * T::SQRT_2());
    SeparationCoords {
        center: (x_a + x_b) * T::half(),
        separation: (x_a - x_b) * k,
    }
}

/// Total momentum, separation momentum and its light-cone components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumCoords<T> {
    pub total: FourVector<T>,
    pub separation: FourVector<T>,
    pub q_u: T,
    pub q_v: T,
}

/// Light-cone components of a momentum pair: `q_u = (q_0 + q_z)/√2`,
/// `q_v = (q_0 − q_z)/√2`.
pub fn momentum_lightcone<T: Real>(q_z: T, q_0: T) -> (T, T) {
    let r = T::FRAC_1_SQRT_2();
    ((q_0 + q_z) * r, (q_0 - q_z) * r)
}

/// `P = p_a + p_b`, `q = √2(p_a − p_b)`.
pub fn momentum_from_constituents<T: Real>(
    p_a: FourVector<T>,
    p_b: FourVector<T>,
) -> MomentumCoords<T> {
    let q = (p_a - p_b) * T::SQRT_2();
    let (q_u, q_v) = momentum_lightcone(q.z, q.t);
    MomentumCoords {
        total: p_a + p_b,
        separation: q,
        q_u,
        q_v,
    }
}

#[inline]
fn rest_value<T: Real>(n_z: u32, z: T, t: T) -> T {
    hermite_function_unchecked(n_z, z) * hermite_function_unchecked(0, t)
}

/// Rest-frame wave function `h_{n_z}(z) h_0(t)`.
pub fn psi_rest<T: Real>(state: &OscillatorState<T>, z: T, t: T) -> Result<T> {
    if state.eta.value() != T::zero() {
        return Err(Error::Contract(format!(
            "psi_rest requires eta = 0, got {}; use psi_boosted",
            state.eta.value()
        )));
    }
    Ok(rest_value(state.n_z, z, t))
}

/// Boosted longitudinal wave function.
pub fn psi_boosted<T: Real>(state: &OscillatorState<T>, z: T, t: T) -> T {
    let lc = to_lightcone(SpacetimePoint::new(z, t));
    psi_lightcone(state, lc)
}

/// Boosted longitudinal wave function as a function of `(u, v)`.
pub fn psi_lightcone<T: Real>(state: &OscillatorState<T>, lc: LightconePoint<T>) -> T {
    let e = state.eta.stretch();
    let rest = from_lightcone(LightconePoint::new(lc.u / e, lc.v * e));
    rest_value(state.n_z, rest.z, rest.t)
}

/// Transverse factor `h_{n_x}(x) h_{n_y}(y)`; independent of the boost.
pub fn transverse_factor<T: Real>(state: &OscillatorState<T>, x: T, y: T) -> T {
    hermite_function_unchecked(state.n_x, x) * hermite_function_unchecked(state.n_y, y)
}

/// Full four-dimensional wave function.
pub fn psi_full<T: Real>(state: &OscillatorState<T>, x: T, y: T, z: T, t: T) -> T {
    psi_boosted(state, z, t) * transverse_factor(state, x, y)
}

/// Ground-state momentum-energy wave function
/// `φ_η = π^{−1/2} exp[−½(e^{−2η} q_u² + e^{2η} q_v²)]`.
pub fn phi_momentum<T: Real>(state: &OscillatorState<T>, q_z: T, q_0: T) -> Result<T> {
    if state.n_z != 0 {
        return Err(Error::Capability(format!(
            "momentum wave function only available for n_z = 0, got {}",
            state.n_z
        )));
    }
    let (q_u, q_v) = momentum_lightcone(q_z, q_0);
    Ok(phi_lightcone(state.eta, q_u, q_v))
}

pub(crate) fn phi_lightcone<T: Real>(eta: Rapidity<T>, q_u: T, q_v: T) -> T {
    let e2 = (T::two() * eta.value()).exp();
    let exponent = -T::half() * (q_u * q_u / e2 + e2 * q_v * q_v);
    T::frac_1_sqrt_pi() * exponent.exp()
}
