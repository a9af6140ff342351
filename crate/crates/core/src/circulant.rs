//! 3×3 circulant matrices.
//!
//! A circulant is stored as its first row `(a₁, a₂, a₃)`; the dense matrix is
//!
//! ```text
//! | a₁ a₂ a₃ |
//! | a₃ a₁ a₂ |
//! | a₂ a₃ a₁ |
//! ```
//!
//! Products, inverses and transposes of circulants are circulant, so every
//! operation here stays in the three-number representation.

use std::ops::{Add, Mul, Sub};

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};

/// Relative bound on `|a₁a₂ + a₂a₃ + a₃a₁| / h²` accepted by [`Circulant3::decompose`].
pub const CROSS_SUM_TOLERANCE: f64 = 1e-9;

/// Relative bound on `|det| / max(1, ‖c‖∞³)` below which a circulant is singular.
pub const SINGULAR_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circulant3<T = f64> {
    row: [T; 3],
}

impl<T> Circulant3<T> {
    pub const fn new(row: [T; 3]) -> Self {
        Self { row }
    }

    pub fn first_row(&self) -> &[T; 3] {
        &self.row
    }

    /// Entry `(i, j)`, zero based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.row[(j + 3 - i % 3) % 3]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Circulant3<U> {
        Circulant3 {
            row: self.row.each_ref().map(f),
        }
    }

    pub fn try_map<U, E>(&self, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<Circulant3<U>, E> {
        let [a, b, c] = &self.row;
        Ok(Circulant3 {
            row: [f(a)?, f(b)?, f(c)?],
        })
    }
}

/// Maximum absolute row sum.
pub fn matrix_norm_inf(m: &Matrix3<f64>) -> f64 {
    m.row_iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

impl Circulant3 {
    pub const IDENTITY: Circulant3 = Circulant3::new([1.0, 0.0, 0.0]);

    pub fn from_components(a1: f64, a2: f64, a3: f64) -> Self {
        Self::new([a1, a2, a3])
    }

    pub fn to_dense(&self) -> Matrix3<f64> {
        Matrix3::from_fn(|i, j| *self.get(i, j))
    }

    /// `a₁³ + a₂³ + a₃³ − 3a₁a₂a₃`.
    pub fn det(&self) -> f64 {
        let [a, b, c] = self.row;
        a * a * a + b * b * b + c * c * c - 3.0 * a * b * c
    }

    pub fn row_sum(&self) -> f64 {
        self.row.iter().sum()
    }

    /// `a₁a₂ + a₂a₃ + a₃a₁`, the dot product of any two distinct rows.
    pub fn cross_sum(&self) -> f64 {
        let [a, b, c] = self.row;
        a * b + b * c + c * a
    }

    /// Squared norm of the first row, equal to the squared norm of every row.
    pub fn row_norm_sq(&self) -> f64 {
        self.row.iter().map(|x| x * x).sum()
    }

    /// Induced ∞-norm, `|a₁| + |a₂| + |a₃|` for a circulant.
    pub fn norm_inf(&self) -> f64 {
        self.row.iter().map(|x| x.abs()).sum()
    }

    pub fn transpose(&self) -> Self {
        let [a, b, c] = self.row;
        Self::new([a, c, b])
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|x| x * s)
    }

    pub fn is_singular(&self) -> bool {
        self.det().abs() <= SINGULAR_TOLERANCE * self.norm_inf().powi(3).max(1.0)
    }

    /// Inverse via the adjugate, which is itself circulant with first row
    /// `(a₁² − a₂a₃, a₃² − a₁a₂, a₂² − a₁a₃) / det`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if self.is_singular() {
            return Err(Error::Singular { det });
        }
        let [a, b, c] = self.row;
        Ok(Self::new([a * a - b * c, c * c - a * b, b * b - a * c]).scale(1.0 / det))
    }

    /// Solves `self · x = rhs`.
    pub fn solve(&self, rhs: &Vector3<f64>) -> Result<Vector3<f64>> {
        Ok(self.inverse()? * *rhs)
    }

    /// Splits `c = h·A` with `h = ‖(a₁, a₂, a₃)‖` and `A` orthogonal.
    ///
    /// The rows of `c` all have squared norm `h²` and pairwise dot product
    /// [`cross_sum`](Self::cross_sum), so `A` is orthogonal exactly when the
    /// cross sum vanishes.
    pub fn decompose(&self) -> Result<Decomposition> {
        let h = self.row_norm_sq().sqrt();
        if h == 0.0 {
            return Err(Error::Origin { norm: h });
        }
        let cross_sum = self.cross_sum();
        let tolerance = CROSS_SUM_TOLERANCE * h * h;
        if cross_sum.abs() > tolerance {
            return Err(Error::NotAdmissible {
                cross_sum,
                tolerance,
            });
        }
        Ok(Decomposition {
            h,
            a: self.scale(1.0 / h),
        })
    }

    /// `‖cᵀc − I‖∞`, computed on the dense matrix.
    pub fn orthogonality_residual(&self) -> f64 {
        let m = self.to_dense();
        matrix_norm_inf(&(m.transpose() * m - Matrix3::identity()))
    }

    /// Orthogonal and fixing `(1, 1, 1)`.
    pub fn is_umbrella(&self, tol: f64) -> bool {
        self.orthogonality_residual() <= tol && (self.row_sum() - 1.0).abs() <= tol
    }
}

/// `B = h·A` with `h > 0` and `A` orthogonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub h: f64,
    pub a: Circulant3,
}

impl Mul for Circulant3 {
    type Output = Circulant3;

    /// Cyclic convolution of the first rows.
    fn mul(self, rhs: Circulant3) -> Circulant3 {
        let (x, y) = (self.row, rhs.row);
        Circulant3::new(std::array::from_fn(|k| {
            (0..3).map(|j| x[j] * y[(k + 3 - j) % 3]).sum()
        }))
    }
}

impl Mul<Vector3<f64>> for Circulant3 {
    type Output = Vector3<f64>;

    fn mul(self, v: Vector3<f64>) -> Vector3<f64> {
        Vector3::from_fn(|i, _| (0..3).map(|j| self.get(i, j) * v[j]).sum())
    }
}

impl Mul<&Vector3<f64>> for Circulant3 {
    type Output = Vector3<f64>;

    fn mul(self, v: &Vector3<f64>) -> Vector3<f64> {
        self * *v
    }
}

impl Add for Circulant3 {
    type Output = Circulant3;

    fn add(self, rhs: Circulant3) -> Circulant3 {
        Circulant3::new(std::array::from_fn(|k| self.row[k] + rhs.row[k]))
    }
}

impl Sub for Circulant3 {
    type Output = Circulant3;

    fn sub(self, rhs: Circulant3) -> Circulant3 {
        Circulant3::new(std::array::from_fn(|k| self.row[k] - rhs.row[k]))
    }
}
