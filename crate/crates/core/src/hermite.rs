//! Physicists' Hermite polynomials, orthonormal Hermite functions and
//! Gauss–Hermite quadrature for the weight `e^{−x²}`.

use crate::error::{Error, Result};
use crate::linalg::tridiagonal_eigenvalues;
use crate::scalar::Real;

/// Largest polynomial degree accepted by the public evaluators.
pub const MAX_DEGREE: u32 = 64;
/// Largest quadrature order accepted by [`gauss_hermite`].
pub const MAX_ORDER: usize = 256;

const NEWTON_TOL: f64 = 1e-14;
const NEWTON_STEPS: usize = 8;

fn check_degree(n: u32) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::Capability(format!(
            "Hermite degree {n} exceeds cap {MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// `H_n(x)` by the three-term recurrence `H_{k+1} = 2x H_k − 2k H_{k−1}`.
pub fn hermite<T: Real>(n: u32, x: T) -> Result<T> {
    check_degree(n)?;
    let two = T::two();
    let (mut prev, mut cur) = (T::one(), two * x);
    if n == 0 {
        return Ok(prev);
    }
    for k in 1..n {
        let next = two * x * cur - two * T::from_u32(k).unwrap() * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Normalized Hermite function `h_n(x) = H_n(x) e^{−x²/2} / √(2ⁿ n! √π)`.
pub fn hermite_function<T: Real>(n: u32, x: T) -> Result<T> {
    check_degree(n)?;
    Ok(hermite_function_unchecked(n, x))
}

/// Stabilized recurrence on `h_n` itself, so no `2ⁿ n!` factor is ever formed:
/// `h_{k+1} = √(2/(k+1)) x h_k − √(k/(k+1)) h_{k−1}`.
pub(crate) fn hermite_function_unchecked<T: Real>(n: u32, x: T) -> T {
    hermite_function_pair(n, x).1
}

/// `(h_{n−1}(x), h_n(x))`, with `h_{−1} ≡ 0`.
pub(crate) fn hermite_function_pair<T: Real>(n: u32, x: T) -> (T, T) {
    let h0 = T::PI().powf(T::lit(-0.25)) * (-T::half() * x * x).exp();
    let mut prev = T::zero();
    let mut cur = h0;
    for k in 0..n {
        let kf = T::from_u32(k).unwrap();
        let k1 = kf + T::one();
        let next = (T::two() / k1).sqrt() * x * cur - (kf / k1).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// Gauss–Hermite rule for `∫ f(x) e^{−x²} dx`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
    /// `w_i e^{x_i²}`, used when the integrand's Gaussian factor is not split off.
    plain_weights: Vec<T>,
}

impl<T: Real> QuadratureRule<T> {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Weights for `∫ g(x) dx ≈ Σ W_i g(x_i)` with `W_i = w_i e^{x_i²}`.
    pub fn plain_weights(&self) -> &[T] {
        &self.plain_weights
    }

    /// `Σ w_i f(x_i)` approximating `∫ f(x) e^{−x²} dx`.
    pub fn integrate_weighted(&self, mut f: impl FnMut(T) -> T) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * f(x))
    }

    /// `∫ g(y) dy` with nodes placed at `y = center + scale·x`.
    ///
    /// Exact when `g` is a polynomial of degree `< 2n` times
    /// `exp(−(y − center)²/scale²)`.
    pub fn integrate_shifted(&self, center: T, scale: T, mut g: impl FnMut(T) -> T) -> T {
        let sum = self
            .nodes
            .iter()
            .zip(&self.plain_weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * g(center + scale * x));
        sum * scale
    }
}

/// Nodes are the eigenvalues of the Jacobi matrix (off-diagonal `√(k/2)`),
/// polished by Newton steps on `h_n`; weights come from
/// `w_i e^{x_i²} = 1 / (n h_{n−1}(x_i)²)`.
pub fn gauss_hermite<T: Real>(order: usize) -> Result<QuadratureRule<T>> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::Capability(format!(
            "quadrature order {order} outside 1..={MAX_ORDER}"
        )));
    }
    let n = order;
    let mut diag = vec![T::zero(); n];
    let mut off: Vec<T> = (0..n)
        .map(|k| (T::from_usize_lossy(k) * T::half()).sqrt())
        .collect();
    tridiagonal_eigenvalues(&mut diag, &mut off)?;
    diag.sort_by(|a, b| a.partial_cmp(b).expect("finite nodes"));

    let deg = n as u32;
    let sqrt_2n = (T::two() * T::from_usize_lossy(n)).sqrt();
    let tol = T::lit(NEWTON_TOL);
    for x in diag.iter_mut() {
        for _ in 0..NEWTON_STEPS {
            let (hm1, h) = hermite_function_pair(deg, *x);
            let dh = sqrt_2n * hm1 - *x * h;
            if dh == T::zero() {
                break;
            }
            let step = h / dh;
            *x -= step;
            if step.abs() <= tol * (T::one() + x.abs()) {
                break;
            }
        }
    }
    // enforce exact mirror symmetry
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let a = T::half() * (diag[j] - diag[i]);
        diag[i] = -a;
        diag[j] = a;
    }
    if n % 2 == 1 {
        diag[n / 2] = T::zero();
    }

    let nf = T::from_usize_lossy(n);
    let mut plain_weights: Vec<T> = diag
        .iter()
        .map(|&x| {
            let hm1 = hermite_function_pair(deg, x).0;
            T::one() / (nf * hm1 * hm1)
        })
        .collect();
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let w = T::half() * (plain_weights[i] + plain_weights[j]);
        plain_weights[i] = w;
        plain_weights[j] = w;
    }
    let weights: Vec<T> = diag
        .iter()
        .zip(&plain_weights)
        .map(|(&x, &w)| w * (-x * x).exp())
        .collect();
    if weights.iter().chain(&plain_weights).any(|w| !w.is_finite()) {
        return Err(Error::NumericIntegrity(format!(
            "non-finite Gauss-Hermite weight at order {order}"
        )));
    }
    Ok(QuadratureRule {
        nodes: diag,
        weights,
        plain_weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SQRT_PI: f64 = 1.772_453_850_905_516;

    // explicit H_0..H_4
    fn explicit(n: u32, x: f64) -> f64 {
        match n {
            0 => 1.0,
            1 => 2.0 * x,
            2 => 4.0 * x * x - 2.0,
            3 => 8.0 * x.powi(3) - 12.0 * x,
            4 => 16.0 * x.powi(4) - 48.0 * x * x + 12.0,
            _ => unreachable!(),
        }
    }

    // ∫ x^k e^{−x²} = Γ((k+1)/2) for even k, 0 for odd k
    fn moment(k: u32) -> f64 {
        if k % 2 == 1 {
            return 0.0;
        }
        // Γ(m + ½) = (2m−1)!! √π / 2^m
        let m = k / 2;
        let mut v = SQRT_PI;
        for j in 1..=m {
            v *= (2 * j - 1) as f64 / 2.0;
        }
        v
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(hermite(0, 3.7).unwrap(), 1.0);
        assert_eq!(hermite(1, 0.5).unwrap(), 1.0);
        assert_eq!(hermite(2, 1.0).unwrap(), 2.0);
        assert!(matches!(hermite(65, 0.0f64), Err(Error::Capability(_))));
        assert!(hermite_function(65, 0.0f64).is_err());
    }

    #[test]
    fn function_examples() {
        let h00: f64 = hermite_function(0, 0.0).unwrap();
        assert!((h00 - 0.751_125_544_464_942_5).abs() < 1e-15);
        assert_eq!(hermite_function(1, 0.0f64).unwrap(), 0.0);
        assert!(hermite_function(0, 20.0f64).unwrap() < 1e-80);
        assert!(hermite_function(0, -20.0f64).unwrap() < 1e-80);
    }

    #[test]
    fn function_matches_scaled_polynomial() {
        let mut fact = 1.0;
        for n in 0..=12u32 {
            if n > 0 {
                fact *= n as f64;
            }
            let norm = (2f64.powi(n as i32) * fact * SQRT_PI).sqrt();
            for &x in &[-2.5f64, -0.3, 0.0, 0.8, 3.1] {
                let a = hermite_function(n, x).unwrap();
                let b = hermite(n, x).unwrap() * (-x * x / 2.0).exp() / norm;
                assert!((a - b).abs() < 1e-13 * (1.0 + b.abs()), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn high_degree_stays_finite() {
        for &x in &[0.0f64, 5.0, 11.0, 30.0] {
            assert!(hermite_function(64, x).unwrap().is_finite());
        }
    }

    #[test]
    fn low_order_rules() {
        let r1 = gauss_hermite::<f64>(1).unwrap();
        assert_eq!(r1.nodes(), &[0.0]);
        assert!((r1.weights()[0] - SQRT_PI).abs() < 1e-15);
        let r2 = gauss_hermite::<f64>(2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((r2.nodes()[0] + s).abs() < 1e-15 && (r2.nodes()[1] - s).abs() < 1e-15);
        for w in r2.weights() {
            assert!((w - SQRT_PI / 2.0).abs() < 1e-15);
        }
    }

    #[test]
    fn order_eight_moments() {
        let r = gauss_hermite::<f64>(8).unwrap();
        let x6 = r.integrate_weighted(|x| x.powi(6));
        assert!((x6 - 15.0 / 8.0 * SQRT_PI).abs() < 1e-12);
        for k in 0..=15 {
            let q = r.integrate_weighted(|x| x.powi(k as i32));
            assert!((q - moment(k)).abs() < 1e-11 * (1.0 + moment(k)), "k={k}");
        }
    }

    #[test]
    fn rule_invariants_across_orders() {
        for order in [1, 2, 3, 7, 8, 16, 32, 63, 64, 100, 128, 200, 256] {
            let r = gauss_hermite::<f64>(order).unwrap();
            assert_eq!(r.order(), order);
            let sum: f64 = r.weights().iter().sum();
            assert!(
                (sum - SQRT_PI).abs() < 1e-12 * SQRT_PI,
                "order {order}: {sum}"
            );
            assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
            assert!(r.weights().iter().all(|&w| w > 0.0));
            for i in 0..order {
                assert_eq!(r.nodes()[i], -r.nodes()[order - 1 - i]);
                assert_eq!(r.weights()[i], r.weights()[order - 1 - i]);
            }
        }
    }

    #[test]
    fn order_bounds() {
        assert!(matches!(gauss_hermite::<f64>(0), Err(Error::Capability(_))));
        assert!(gauss_hermite::<f64>(257).is_err());
    }

    #[test]
    fn orthonormality() {
        let r = gauss_hermite::<f64>(32).unwrap();
        for n in 0..=10 {
            for m in 0..=10 {
                let ip = r.integrate_shifted(0.0, 1.0, |x| {
                    hermite_function(n, x).unwrap() * hermite_function(m, x).unwrap()
                });
                let want = if n == m { 1.0 } else { 0.0 };
                assert!((ip - want).abs() < 1e-10, "<{n}|{m}> = {ip}");
            }
        }
    }

    #[test]
    fn shifted_gaussian_is_exact() {
        let r = gauss_hermite::<f64>(6).unwrap();
        // ∫ exp(−(y−1.3)²/0.49) dy = 0.7 √π
        let v = r.integrate_shifted(1.3, 0.7, |y| (-(y - 1.3f64).powi(2) / 0.49).exp());
        assert!((v - 0.7 * SQRT_PI).abs() < 1e-14);
    }

    #[test]
    fn single_precision_rule() {
        let r = gauss_hermite::<f32>(16).unwrap();
        let s: f32 = r.weights().iter().sum();
        assert!((s - SQRT_PI as f32).abs() < 1e-5);
    }

    proptest! {
        #[test]
        fn recurrence_matches_explicit(x in -5.0f64..5.0, n in 0u32..=4) {
            let a = hermite(n, x).unwrap();
            let b = explicit(n, x);
            prop_assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
        }
    }
}
