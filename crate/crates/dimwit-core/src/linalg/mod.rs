//! Dense matrix primitives with explicit numerical tolerances.
//!
//! Everything here is sized for "desk scale" problems (matrices up to a few
//! thousand entries per side): storage is a flat row-major `Vec`, products are
//! the textbook triple loop, and the decompositions are Jacobi iterations,
//! which are slow in the asymptotic sense but extremely stable and fully
//! deterministic — the properties that matter for reproducible witness
//! construction.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

pub use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math;

mod eig;
mod svd;

/// Relative threshold under which a singular value counts as zero when
/// deciding rank.
pub const RANK_TOLERANCE: f64 = 1e-8;

/// A dense real matrix in row-major order.
///
/// Constructors reject non-finite entries, so every value of this type holds
/// finite data.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl RealMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Validation(alloc::format!(
                "matrix data has {} entries, expected {}x{} = {}",
                entries.len(),
                rows,
                cols,
                rows * cols
            )));
        }
        if !entries.iter().all(|e| e.is_finite()) {
            return Err(Error::NonFinite {
                context: "real matrix",
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    ///
    /// Intended for closed-form constructions; `f` must return finite values.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert!(v.is_finite(), "from_fn produced a non-finite entry");
                entries.push(v);
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| factor * self.get(i, j))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "matrix addition")?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "matrix subtraction")?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                context: "matrix product",
                expected: (self.cols, other.rows),
                found: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += aik * other.get(k, j);
                }
            }
        }
        out.entries
            .iter()
            .all(|e| e.is_finite())
            .then_some(out)
            .ok_or(Error::NonFinite {
                context: "matrix product",
            })
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, e| acc.max(e.abs()))
    }

    /// Entrywise root-sum-square (equals the Schatten 2-norm).
    pub fn frobenius_norm(&self) -> f64 {
        math::sqrt(self.entries.iter().map(|e| e * e).sum())
    }

    /// Hilbert–Schmidt inner product `tr(A Bᵀ)`, the sum of elementwise
    /// products. Symmetric in its arguments.
    pub fn inner_product(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other, "inner product")?;
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Full singular value decomposition.
    ///
    /// Singular values come back sorted non-increasing, with orthonormal left
    /// and right vectors; the sign of each pair is fixed so the left vector's
    /// first nonzero coordinate is positive, which makes the output
    /// reproducible across runs.
    pub fn svd(&self) -> Result<SpectralSummary> {
        svd::compute(self)
    }

    /// Schatten p-norm `(Σᵢ σᵢᵖ)^{1/p}` over the singular values.
    ///
    /// `p = 1` is the trace norm, `p = 2` the Frobenius norm and
    /// `p = f64::INFINITY` the operator norm. Values of `p` below 1 (or NaN)
    /// are rejected.
    pub fn schatten_norm(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::Domain(alloc::format!(
                "Schatten norm requires p >= 1, got {p}"
            )));
        }
        let sigma = self.svd()?;
        let sv = sigma.singular_values();
        Ok(if p == f64::INFINITY {
            sv.first().copied().unwrap_or(0.0)
        } else if p == 1.0 {
            sv.iter().sum()
        } else if p == 2.0 {
            math::sqrt(sv.iter().map(|s| s * s).sum())
        } else {
            math::pow(sv.iter().map(|s| math::pow(*s, p)).sum(), 1.0 / p)
        })
    }

    /// Trace norm (Schatten 1-norm): the sum of singular values.
    pub fn trace_norm(&self) -> Result<f64> {
        self.schatten_norm(1.0)
    }

    /// Operator norm (Schatten ∞-norm): the largest singular value.
    pub fn operator_norm(&self) -> Result<f64> {
        self.schatten_norm(f64::INFINITY)
    }

    fn check_same_shape(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                context,
                expected: self.shape(),
                found: other.shape(),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = f64;

    fn index(&self, (row, col): (usize, usize)) -> &f64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }
}

/// A dense complex matrix in row-major order; constructors reject non-finite
/// entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Validation(alloc::format!(
                "matrix data has {} entries, expected {}x{} = {}",
                entries.len(),
                rows,
                cols,
                rows * cols
            )));
        }
        if !entries.iter().all(|e| e.re.is_finite() && e.im.is_finite()) {
            return Err(Error::NonFinite {
                context: "complex matrix",
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert!(v.re.is_finite() && v.im.is_finite());
                entries.push(v);
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)
        })
    }

    /// Rank-1 projector `|v⟩⟨v| / ⟨v|v⟩` onto the span of a nonzero vector.
    pub fn projector(v: &[Complex64]) -> Result<Self> {
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr <= 0.0 || !norm_sqr.is_finite() {
            return Err(Error::Domain(alloc::string::String::from(
                "projector requires a nonzero finite vector",
            )));
        }
        Ok(Self::from_fn(v.len(), v.len(), |i, j| {
            v[i] * v[j].conj() / norm_sqr
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| factor * self.get(i, j))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "matrix addition")?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "matrix subtraction")?;
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                context: "matrix product",
                expected: (self.cols, other.rows),
                found: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += aik * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// `tr(A B)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<Complex64> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::ShapeMismatch {
                context: "trace of product",
                expected: (self.cols, self.rows),
                found: (other.rows, other.cols),
            });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += self.get(i, j) * other.get(j, i);
            }
        }
        Ok(acc)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .fold(0.0, |acc, e| acc.max(math::hypot(e.re, e.im)))
    }

    /// Largest deviation `|A_{ij} − conj(A_{ji})|` from Hermitian symmetry.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::MAX;
        }
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = self.get(i, j) - self.get(j, i).conj();
                dev = dev.max(math::hypot(d.re, d.im));
            }
        }
        dev
    }

    /// Eigendecomposition of a Hermitian matrix.
    ///
    /// Eigenvalues come back real and non-increasing with orthonormal
    /// eigenvectors as the columns of [`HermitianEigen::vectors`]. Inputs
    /// further than `1e-10 · max(1, ‖M‖_max)` from Hermitian symmetry are
    /// rejected.
    pub fn hermitian_eig(&self) -> Result<HermitianEigen> {
        eig::compute(self)
    }

    fn check_same_shape(&self, other: &Self, context: &'static str) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch {
                context,
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (row, col): (usize, usize)) -> &Complex64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }
}

/// Result of a full SVD: `M = U Σ Vᵀ` with `k = min(rows, cols)` singular
/// values.
///
/// Invariants: singular values are non-negative and non-increasing,
/// `UᵀU = VᵀV = I_k` within `1e-10`, and `U Σ Vᵀ` reproduces the input within
/// `1e-10 · max(1, ‖M‖₂)`.
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    singular_values: Vec<f64>,
    left: RealMatrix,
    right: RealMatrix,
}

impl SpectralSummary {
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    /// Left singular vectors as the columns of a `rows × k` matrix.
    pub fn left_vectors(&self) -> &RealMatrix {
        &self.left
    }

    /// Right singular vectors as the columns of a `cols × k` matrix.
    pub fn right_vectors(&self) -> &RealMatrix {
        &self.right
    }

    /// Number of singular values above `rel_tolerance · σ_max`.
    pub fn rank(&self, rel_tolerance: f64) -> usize {
        let cutoff = rel_tolerance * self.singular_values.first().copied().unwrap_or(0.0);
        self.singular_values.iter().filter(|s| **s > cutoff).count()
    }

    /// Rebuilds `U Σ Vᵀ`.
    pub fn reconstruct(&self) -> RealMatrix {
        RealMatrix::from_fn(self.left.rows(), self.right.rows(), |i, j| {
            (0..self.singular_values.len())
                .map(|k| self.left.get(i, k) * self.singular_values[k] * self.right.get(j, k))
                .sum()
        })
    }

    /// The partial isometry `U_r V_rᵀ` over the singular values above
    /// `rel_tolerance · σ_max`.
    ///
    /// This is the matrix achieving `⟨M, U_r V_rᵀ⟩ = ‖M‖₁` (up to the
    /// discarded tail); it has operator norm 1. Fails on the zero matrix,
    /// which has no singular direction to follow.
    pub fn partial_isometry(&self, rel_tolerance: f64) -> Result<RealMatrix> {
        let r = self.rank(rel_tolerance);
        if r == 0 {
            return Err(Error::Domain(alloc::string::String::from(
                "partial isometry of the zero matrix is undefined",
            )));
        }
        Ok(RealMatrix::from_fn(
            self.left.rows(),
            self.right.rows(),
            |i, j| {
                (0..r)
                    .map(|k| self.left.get(i, k) * self.right.get(j, k))
                    .sum()
            },
        ))
    }

    pub(crate) fn from_parts(
        singular_values: Vec<f64>,
        left: RealMatrix,
        right: RealMatrix,
    ) -> Self {
        Self {
            singular_values,
            left,
            right,
        }
    }
}

/// Result of a Hermitian eigendecomposition: `M = Q Λ Q*` with real
/// eigenvalues sorted non-increasing and orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    eigenvalues: Vec<f64>,
    vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvectors as matrix columns, ordered like the eigenvalues.
    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    /// The j-th eigenvector.
    pub fn eigenvector(&self, j: usize) -> Vec<Complex64> {
        (0..self.vectors.rows())
            .map(|i| self.vectors.get(i, j))
            .collect()
    }

    /// Rebuilds `Q Λ Q*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.vectors.rows();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| {
                    self.vectors.get(i, k) * self.eigenvalues[k] * self.vectors.get(j, k).conj()
                })
                .sum()
        })
    }

    pub(crate) fn from_parts(eigenvalues: Vec<f64>, vectors: ComplexMatrix) -> Self {
        Self {
            eigenvalues,
            vectors,
        }
    }
}
