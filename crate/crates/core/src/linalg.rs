//! Dense symmetric eigenvalues: Householder reduction to tridiagonal form
//! followed by implicit QL iteration with Wilkinson shifts.

use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 60;

/// Square symmetric matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> SymmetricMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    /// Builds the matrix from its upper triangle; `entry(i, j)` is called for `i <= j`.
    pub fn from_upper(n: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = entry(i, j);
                m.data[i * n + j] = x;
                m.data[j * n + i] = x;
            }
        }
        m
    }

    /// Takes ownership of row-major data. Fails when the data is not square.
    pub fn from_row_major(n: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Config(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        Ok(SymmetricMatrix { n, data })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Frobenius norm squared; equals `Tr(A²)` for symmetric `A`.
    pub fn frobenius_sq(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    /// Largest `|A_ij − A_ji|`.
    pub fn asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    /// All eigenvalues, sorted in descending order.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        let (mut diag, mut off) = self.tridiagonalize();
        tridiagonal_eigenvalues(&mut diag, &mut off)?;
        diag.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Ok(diag)
    }

    /// Householder reduction, eigenvalues-only variant. Returns the diagonal
    /// and the subdiagonal (`off[0]` unused, `off[i]` couples `i − 1` and `i`).
    fn tridiagonalize(&self) -> (Vec<T>, Vec<T>) {
        let n = self.n;
        let mut a = self.data.clone();
        let mut d = vec![T::zero(); n];
        let mut e = vec![T::zero(); n];
        let at = |i: usize, j: usize| i * n + j;
        for i in (1..n).rev() {
            let l = i - 1;
            let mut h = T::zero();
            if l > 0 {
                let scale = (0..=l).fold(T::zero(), |s, k| s + a[at(i, k)].abs());
                if scale == T::zero() {
                    e[i] = a[at(i, l)];
                } else {
                    for k in 0..=l {
                        a[at(i, k)] /= scale;
                        h += a[at(i, k)] * a[at(i, k)];
                    }
                    let f = a[at(i, l)];
                    let g = if f >= T::zero() { -h.sqrt() } else { h.sqrt() };
                    e[i] = scale * g;
                    h -= f * g;
                    a[at(i, l)] = f - g;
                    let mut f = T::zero();
                    for j in 0..=l {
                        let mut g = T::zero();
                        for k in 0..=j {
                            g += a[at(j, k)] * a[at(i, k)];
                        }
                        for k in (j + 1)..=l {
                            g += a[at(k, j)] * a[at(i, k)];
                        }
                        e[j] = g / h;
                        f += e[j] * a[at(i, j)];
                    }
                    let hh = f / (h + h);
                    for j in 0..=l {
                        let f = a[at(i, j)];
                        let g = e[j] - hh * f;
                        e[j] = g;
                        for k in 0..=j {
                            let aik = a[at(i, k)];
                            a[at(j, k)] -= f * e[k] + g * aik;
                        }
                    }
                }
            } else {
                e[i] = a[at(i, l)];
            }
            d[i] = h;
        }
        for (i, di) in d.iter_mut().enumerate() {
            *di = a[at(i, i)];
        }
        (d, e)
    }
}

/// Implicit QL on a symmetric tridiagonal matrix, in place.
///
/// `diag` holds the diagonal; `off[i]` (for `i >= 1`) the entry coupling
/// rows `i − 1` and `i`. On return `diag` holds the (unsorted) eigenvalues.
pub fn tridiagonal_eigenvalues<T: Real>(diag: &mut [T], off: &mut [T]) -> Result<()> {
    let n = diag.len();
    if off.len() != n {
        return Err(Error::Config(format!(
            "subdiagonal length {} does not match dimension {n}",
            off.len()
        )));
    }
    if n == 0 {
        return Ok(());
    }
    let d = diag;
    let e = off;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = T::zero();
    let eps = T::epsilon();
    // deflate couplings at roundoff level of the whole matrix as well as
    // relative to their neighbours; backward stable either way
    let scale = (0..n).fold(T::zero(), |m, i| m.max(d[i].abs() + e[i].abs()));
    let absolute = eps * scale;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd || e[m].abs() <= absolute {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NumericIntegrity(
                    "tridiagonal QL iteration did not converge".into(),
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (T::two() * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + r.abs().copysign(g));
            let (mut s, mut c, mut p) = (T::one(), T::one(), T::zero());
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    d[i + 1] -= p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T::two() * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    if d.iter().any(|x| !x.is_finite()) {
        return Err(Error::NumericIntegrity("non-finite eigenvalue".into()));
    }
    Ok(())
}
