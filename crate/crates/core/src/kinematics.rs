//! Longitudinal boosts, light-cone coordinates and the squeeze form of a boost.
//!
//! Natural units (`c = 1`). A boost along `z` with rapidity `η` acts on the
//! `(z, t)` plane as
//!
//! ```text
//! z' = z cosh η + t sinh η
//! t' = z sinh η + t cosh η
//! ```
//!
//! and on the light-cone pair `u = (z + t)/√2`, `v = (z − t)/√2` as the
//! squeeze `u' = e^η u`, `v' = e^{−η} v`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest accepted rapidity magnitude.
pub const ETA_MAX: f64 = 50.0;

/// Boost parameter, additive under composition of collinear boosts.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rapidity<T>(T);

impl<T: Real> Rapidity<T> {
    pub fn new(eta: T) -> Result<Self> {
        if !eta.is_finite() {
            return Err(Error::Domain(format!("rapidity must be finite, got {eta}")));
        }
        if eta.abs() > T::lit(ETA_MAX) {
            return Err(Error::Domain(format!(
                "rapidity {eta} exceeds cap |eta| <= {ETA_MAX}"
            )));
        }
        Ok(Rapidity(eta))
    }

    pub fn zero() -> Self {
        Rapidity(T::zero())
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }

    /// Rapidity of the composition of two collinear boosts.
    pub fn compose(self, other: Self) -> Result<Self> {
        Rapidity::new(self.0 + other.0)
    }

    pub fn inverse(self) -> Self {
        Rapidity(-self.0)
    }

    #[inline]
    pub fn cosh(self) -> T {
        self.0.cosh()
    }

    #[inline]
    pub fn sinh(self) -> T {
        self.0.sinh()
    }

    /// `e^η`, the stretch factor along `u`.
    #[inline]
    pub fn stretch(self) -> T {
        self.0.exp()
    }

    pub fn to_beta(self) -> Beta<T> {
        beta_from_rapidity(self)
    }
}

/// Velocity in units of `c`, strictly inside `(−1, 1)`.
///
/// Alongside the value the type keeps `1 − |β|` computed directly, so
/// velocities whose distance to the light speed is below the scalar's
/// resolution remain strictly subluminal and invert back to their rapidity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beta<T> {
    value: T,
    gap: T,
}

impl<T: Real> Beta<T> {
    pub fn new(beta: T) -> Result<Self> {
        if !beta.is_finite() {
            return Err(Error::Domain(format!(
                "velocity must be finite, got {beta}"
            )));
        }
        let gap = T::one() - beta.abs();
        if gap <= T::zero() {
            return Err(Error::Domain(format!(
                "superluminal velocity: |beta| = {} >= 1",
                beta.abs()
            )));
        }
        Ok(Beta { value: beta, gap })
    }

    #[inline]
    pub fn value(self) -> T {
        self.value
    }

    /// `1 − |β|`, always strictly positive.
    #[inline]
    pub fn gap(self) -> T {
        self.gap
    }
}

/// `η = ½ ln((1 + β)/(1 − β))`, evaluated from the stored gap `1 − |β|` so
/// that velocities near `±1` keep full relative precision.
pub fn rapidity_from_beta<T: Real>(beta: Beta<T>) -> Result<Rapidity<T>> {
    let gap = beta.gap;
    // (1 + |β|)/(1 − |β|) = 1 + 2|β|/gap
    let magnitude = T::half() * (T::two() * (T::one() - gap) / gap).ln_1p();
    let eta = if beta.value < T::zero() {
        -magnitude
    } else {
        magnitude
    };
    Rapidity::new(eta)
}

/// `β = tanh η`.
pub fn beta_from_rapidity<T: Real>(eta: Rapidity<T>) -> Beta<T> {
    let a = eta.value().abs();
    // 1 − tanh|η| = 2 e^{−2|η|} / (1 + e^{−2|η|})
    let decay = (-T::two() * a).exp();
    let gap = T::two() * decay / (T::one() + decay);
    let value = eta.value().tanh();
    Beta { value, gap }
}

/// Point of the longitudinal `(z, t)` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint<T> {
    pub z: T,
    pub t: T,
}

impl<T: Real> SpacetimePoint<T> {
    pub fn new(z: T, t: T) -> Self {
        SpacetimePoint { z, t }
    }

    /// `z² − t²`, invariant under longitudinal boosts.
    pub fn interval(self) -> T {
        self.z * self.z - self.t * self.t
    }
}

/// Light-cone coordinates `u = (z + t)/√2`, `v = (z − t)/√2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightconePoint<T> {
    pub u: T,
    pub v: T,
}

impl<T: Real> LightconePoint<T> {
    pub fn new(u: T, v: T) -> Self {
        LightconePoint { u, v }
    }
}

impl<T: Real> From<SpacetimePoint<T>> for LightconePoint<T> {
    fn from(p: SpacetimePoint<T>) -> Self {
        to_lightcone(p)
    }
}

impl<T: Real> From<LightconePoint<T>> for SpacetimePoint<T> {
    fn from(p: LightconePoint<T>) -> Self {
        from_lightcone(p)
    }
}

pub fn to_lightcone<T: Real>(p: SpacetimePoint<T>) -> LightconePoint<T> {
    let r = T::FRAC_1_SQRT_2();
    LightconePoint {
        u: (p.z + p.t) * r,
        v: (p.z - p.t) * r,
    }
}

pub fn from_lightcone<T: Real>(p: LightconePoint<T>) -> SpacetimePoint<T> {
    let r = T::FRAC_1_SQRT_2();
    SpacetimePoint {
        z: (p.u + p.v) * r,
        t: (p.u - p.v) * r,
    }
}

pub fn boost_point<T: Real>(p: SpacetimePoint<T>, eta: Rapidity<T>) -> SpacetimePoint<T> {
    let (s, c) = (eta.sinh(), eta.cosh());
    SpacetimePoint {
        z: p.z * c + p.t * s,
        t: p.z * s + p.t * c,
    }
}

pub fn squeeze_lightcone<T: Real>(p: LightconePoint<T>, eta: Rapidity<T>) -> LightconePoint<T> {
    let e = eta.stretch();
    LightconePoint {
        u: p.u * e,
        v: p.v / e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rap(x: f64) -> Rapidity<f64> {
        Rapidity::new(x).unwrap()
    }

    // atanh(b) = Σ b^{2k+1}/(2k+1)
    fn atanh_series(b: f64) -> f64 {
        let mut sum = 0.0;
        let mut term = b;
        let b2 = b * b;
        for k in 0..20_000 {
            let next = term / (2 * k + 1) as f64;
            sum += next;
            if next.abs() < 1e-18 {
                break;
            }
            term *= b2;
        }
        sum
    }

    #[test]
    fn rapidity_examples() {
        assert_eq!(
            rapidity_from_beta(Beta::new(0.0).unwrap()).unwrap().value(),
            0.0
        );
        let ln2 = rapidity_from_beta(Beta::new(0.6).unwrap()).unwrap().value();
        assert!((ln2 - std::f64::consts::LN_2).abs() < 1e-15);
        assert!((ln2 - atanh_series(0.6)).abs() < 1e-14);
        let fast = rapidity_from_beta(Beta::new(0.995).unwrap())
            .unwrap()
            .value();
        assert!((fast - atanh_series(0.995)).abs() < 1e-12);
        assert!((fast - 2.99448).abs() < 1e-5);
    }

    #[test]
    fn superluminal_is_rejected() {
        assert!(matches!(Beta::new(1.0), Err(Error::Domain(_))));
        assert!(matches!(Beta::new(-1.5), Err(Error::Domain(_))));
        assert!(Beta::new(f64::NAN).is_err());
    }

    #[test]
    fn rapidity_cap() {
        assert!(Rapidity::new(50.0).is_ok());
        assert!(Rapidity::new(-50.0).is_ok());
        assert!(Rapidity::new(50.5).is_err());
        assert!(Rapidity::new(f64::INFINITY).is_err());
        assert!(rap(30.0).compose(rap(30.0)).is_err());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_from_rapidity(rap(0.0)).value(), 0.0);
        assert!((beta_from_rapidity(rap(std::f64::consts::LN_2)).value() - 0.6).abs() < 1e-15);
        let edge = beta_from_rapidity(rap(50.0));
        assert!(edge.gap() > 0.0 && edge.gap() < 1e-21);
        // the gap round-trips where the value alone cannot
        let back = rapidity_from_beta(edge).unwrap().value();
        assert!((back - 50.0).abs() < 1e-12);
    }

    #[test]
    fn lightcone_examples() {
        let s2 = std::f64::consts::SQRT_2;
        let lc = to_lightcone(SpacetimePoint::new(1.0, 1.0));
        assert!((lc.u - s2).abs() < 1e-15 && lc.v == 0.0);
        let lc = to_lightcone(SpacetimePoint::new(1.0, 0.0));
        assert!((lc.u - 1.0 / s2).abs() < 1e-15 && (lc.v - 1.0 / s2).abs() < 1e-15);
        assert_eq!(
            to_lightcone(SpacetimePoint::new(0.0, 0.0)),
            LightconePoint::new(0.0, 0.0)
        );

        let p = from_lightcone(LightconePoint::new(s2, 0.0));
        assert!((p.z - 1.0).abs() < 1e-15 && (p.t - 1.0).abs() < 1e-15);
        let p = from_lightcone(LightconePoint::new(1.0 / s2, 1.0 / s2));
        assert!((p.z - 1.0).abs() < 1e-15 && p.t.abs() < 1e-15);
    }

    #[test]
    fn boost_examples() {
        let o = boost_point(SpacetimePoint::new(0.0, 0.0), rap(3.3));
        assert_eq!(o, SpacetimePoint::new(0.0, 0.0));
        let p = boost_point(SpacetimePoint::new(1.0, 0.0), rap(std::f64::consts::LN_2));
        assert!((p.z - 1.25).abs() < 1e-15 && (p.t - 0.75).abs() < 1e-15);
        let eta = 0.7;
        let p = boost_point(SpacetimePoint::new(1.0, 1.0), rap(eta));
        assert!((p.z - eta.exp()).abs() < 1e-14 && (p.t - eta.exp()).abs() < 1e-14);
    }

    #[test]
    fn squeeze_examples() {
        let p = squeeze_lightcone(LightconePoint::new(1.0, 1.0), rap(0.0));
        assert_eq!(p, LightconePoint::new(1.0, 1.0));
        let p = squeeze_lightcone(LightconePoint::new(1.0, 1.0), rap(std::f64::consts::LN_2));
        assert!((p.u - 2.0).abs() < 1e-15 && (p.v - 0.5).abs() < 1e-15);
        let p = squeeze_lightcone(LightconePoint::new(0.0, 3.0), rap(1.0));
        assert_eq!(p.u, 0.0);
        assert!((p.v - 1.103638).abs() < 1e-6);
    }

    #[test]
    fn single_precision_smoke() {
        let eta = Rapidity::new(0.5f32).unwrap();
        let p = boost_point(SpacetimePoint::new(1.0f32, 0.25), eta);
        assert!((p.interval() - (1.0 - 0.0625)).abs() < 1e-5);
    }
}
