use crate::error::{Error, Result};
use crate::scalar::Real;

/// Most intervals allowed along one axis.
pub const MAX_INTERVALS: f64 = 1e4;

/// Uniform sampling `min, min + step, …` up to `max` along one axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec<T> {
    min: T,
    max: T,
    step: T,
}

impl<T: Real> AxisSpec<T> {
    pub fn new(min: T, max: T, step: T) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && step.is_finite()) {
            return Err(Error::Config("grid bounds and step must be finite".into()));
        }
        if min >= max {
            return Err(Error::Config(format!(
                "degenerate grid: min {min} >= max {max}"
            )));
        }
        if step <= T::zero() {
            return Err(Error::Config(format!(
                "grid step must be positive, got {step}"
            )));
        }
        if (max - min) / step > T::lit(MAX_INTERVALS) {
            return Err(Error::Config(format!(
                "grid [{min}, {max}] with step {step} exceeds {MAX_INTERVALS} intervals"
            )));
        }
        Ok(AxisSpec { min, max, step })
    }

    /// Symmetric axis `[−half_width, half_width]` with `points` samples.
    pub fn symmetric(half_width: T, points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::Config(format!(
                "need at least 2 grid points, got {points}"
            )));
        }
        let step = T::two() * half_width / T::from_usize_lossy(points - 1);
        Self::new(-half_width, half_width, step)
    }

    pub fn min(&self) -> T {
        self.min
    }

    pub fn max(&self) -> T {
        self.max
    }

    pub fn step(&self) -> T {
        self.step
    }

    pub fn len(&self) -> usize {
        let ratio = (self.max - self.min) / self.step;
        // tolerate representation error in ratios like 6/0.1
        let intervals = (ratio + T::lit(1e-9)).floor();
        intervals.to_usize().unwrap_or(0) + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn coord(&self, i: usize) -> T {
        self.min + T::from_usize_lossy(i) * self.step
    }

    pub fn coords(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.len()).map(move |i| self.coord(i))
    }

    /// Composite trapezoid weights for the axis samples.
    pub fn trapezoid_weights(&self) -> Vec<T> {
        let n = self.len();
        let mut w = vec![self.step; n];
        w[0] = self.step * T::half();
        w[n - 1] = self.step * T::half();
        w
    }
}

/// Two-axis grid; the first axis varies slowest in row-major storage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<T> {
    pub first: AxisSpec<T>,
    pub second: AxisSpec<T>,
}

impl<T: Real> GridSpec<T> {
    pub fn new(first: AxisSpec<T>, second: AxisSpec<T>) -> Self {
        GridSpec { first, second }
    }

    /// Same axis on both sides.
    pub fn square(axis: AxisSpec<T>) -> Self {
        GridSpec {
            first: axis,
            second: axis,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.first.len(), self.second.len())
    }
}

/// Labelled axis of a [`FieldGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridAxis<T> {
    pub label: String,
    pub spec: AxisSpec<T>,
}

/// Sampled field over one or two axes, values stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid<T> {
    axes: Vec<GridAxis<T>>,
    value_label: String,
    values: Vec<T>,
}

impl<T: Real> FieldGrid<T> {
    /// Fails with a numeric-integrity error if any value is not finite.
    pub fn new(
        axes: Vec<GridAxis<T>>,
        value_label: impl Into<String>,
        values: Vec<T>,
    ) -> Result<Self> {
        let expected: usize = axes.iter().map(|a| a.spec.len()).product();
        if axes.is_empty() || axes.len() > 2 || expected != values.len() {
            return Err(Error::Config(format!(
                "field of {} values does not match {} axes of {} points",
                values.len(),
                axes.len(),
                expected
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NumericIntegrity(format!(
                "non-finite field value at flat index {i}"
            )));
        }
        Ok(FieldGrid {
            axes,
            value_label: value_label.into(),
            values,
        })
    }

    pub fn axes(&self) -> &[GridAxis<T>] {
        &self.axes
    }

    pub fn value_label(&self) -> &str {
        &self.value_label
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.spec.len()).collect()
    }

    pub fn get(&self, index: &[usize]) -> T {
        let mut flat = 0;
        for (axis, &i) in self.axes.iter().zip(index) {
            flat = flat * axis.spec.len() + i;
        }
        self.values[flat]
    }

    /// Coordinates of the sample at a flat index.
    pub fn coords_at(&self, flat: usize) -> Vec<T> {
        let mut rem = flat;
        let mut out = vec![T::zero(); self.axes.len()];
        for (k, axis) in self.axes.iter().enumerate().rev() {
            let n = axis.spec.len();
            out[k] = axis.spec.coord(rem % n);
            rem /= n;
        }
        out
    }

    /// `(coordinates, value)` for every sample in storage order.
    pub fn samples(&self) -> impl Iterator<Item = (Vec<T>, T)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (self.coords_at(i), v))
    }

    /// Flat index and value of the largest `|value|`.
    pub fn argmax_abs(&self) -> (usize, T) {
        self.values
            .iter()
            .enumerate()
            .fold((0, T::zero()), |best, (i, &v)| {
                if v.abs() > best.1.abs() {
                    (i, v)
                } else {
                    best
                }
            })
    }

    /// Trapezoid integral over all axes.
    pub fn integrate(&self) -> T {
        let weights: Vec<Vec<T>> = self
            .axes
            .iter()
            .map(|a| a.spec.trapezoid_weights())
            .collect();
        self.values
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (flat, &v)| {
                let mut rem = flat;
                let mut w = T::one();
                for (k, axis) in self.axes.iter().enumerate().rev() {
                    let n = axis.spec.len();
                    w *= weights[k][rem % n];
                    rem /= n;
                }
                acc + w * v
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_counts() {
        let a = AxisSpec::new(-3.0f64, 3.0, 0.1).unwrap();
        assert_eq!(a.len(), 61);
        assert!((a.coord(60) - 3.0).abs() < 1e-12);
        let b = AxisSpec::new(0.0, 1.0, 0.3).unwrap();
        assert_eq!(b.len(), 4);
        let s = AxisSpec::symmetric(5.0f64, 400).unwrap();
        assert_eq!(s.len(), 400);
        assert!((s.coord(399) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_axes() {
        assert!(matches!(
            AxisSpec::new(1.0, 1.0, 0.1),
            Err(Error::Config(_))
        ));
        assert!(AxisSpec::new(2.0, 1.0, 0.1).is_err());
        assert!(AxisSpec::new(0.0, 1.0, 0.0).is_err());
        assert!(AxisSpec::new(0.0, 1.0, -0.1).is_err());
        assert!(AxisSpec::new(0.0, 2.0, 1e-4).is_err());
        assert!(AxisSpec::new(0.0, f64::NAN, 0.1).is_err());
        assert!(AxisSpec::symmetric(1.0, 1).is_err());
    }

    #[test]
    fn field_rejects_non_finite() {
        let ax = GridAxis {
            label: "z".into(),
            spec: AxisSpec::new(0.0, 1.0, 0.5).unwrap(),
        };
        let err = FieldGrid::new(vec![ax.clone()], "f", vec![0.0, f64::NAN, 1.0]).unwrap_err();
        assert!(err.is_numeric_integrity());
        assert!(FieldGrid::new(vec![ax], "f", vec![0.0; 2]).is_err());
    }

    #[test]
    fn field_indexing_and_integral() {
        let za = AxisSpec::new(0.0f64, 1.0, 0.5).unwrap();
        let ta = AxisSpec::new(0.0, 2.0, 1.0).unwrap();
        let axes = vec![
            GridAxis {
                label: "z".into(),
                spec: za,
            },
            GridAxis {
                label: "t".into(),
                spec: ta,
            },
        ];
        let mut values = Vec::new();
        for z in za.coords() {
            for t in ta.coords() {
                values.push(z + 10.0 * t);
            }
        }
        let f = FieldGrid::new(axes, "f", values).unwrap();
        assert_eq!(f.shape(), vec![3, 3]);
        assert_eq!(f.get(&[1, 2]), 0.5 + 20.0);
        assert_eq!(f.coords_at(5), vec![0.5, 2.0]);
        // linear integrand, trapezoid exact: ∫∫ z + 10 t = 1·(½·2) + 10·(1·2)
        assert!((f.integrate() - 21.0).abs() < 1e-12);
        assert_eq!(f.argmax_abs(), (8, 21.0));
    }
}
