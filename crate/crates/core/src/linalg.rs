//! Dense complex-matrix kernel for small operators.
//!
//! Everything in the crate represents operators as row-major [`CMatrix`]
//! values of dimension at most a few dozen, so this module favors clarity
//! over asymptotics. The eigensolver is a cyclic Jacobi iteration applied
//! directly to the complex Hermitian matrix; at these sizes it converges in
//! a handful of sweeps and keeps the eigenvector matrix unitary to machine
//! precision.
//!
//! Index convention for composite systems: the first (A) factor is the
//! major index, i.e. the joint basis state |a⟩|e⟩ has index `a * dim_e + e`.
//! This convention is fixed once here and used everywhere.

use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Absolute tolerance for Hermiticity checks.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Eigenvalues in `[-PSD_TOL, 0)` are clamped to zero when a matrix must be
/// positive semidefinite; anything below the floor is rejected.
pub const PSD_TOL: f64 = 1e-10;

/// Which factor of a bipartite operator survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    /// Keep the first (major-index) factor.
    A,
    /// Keep the second (minor-index) factor.
    E,
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl CMatrix {
    /// Build from row-major entries. Panics if the entry count is wrong;
    /// that is a programming error, not a data error.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count {} does not match {}x{}",
            entries.len(),
            rows,
            cols
        );
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Complex64::new(0.0, 0.0); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    /// Build from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Self {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    /// Diagonal matrix from real values.
    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, Complex64::new(v, 0.0));
        }
        m
    }

    /// Outer product |u⟩⟨v|.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose M†.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn scaled_re(&self, factor: f64) -> Self {
        self.scaled(Complex64::new(factor, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest modulus of the elementwise difference.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// max |M − M†| over entries; 0 for an exactly Hermitian matrix.
    pub fn hermiticity_error(&self) -> f64 {
        assert!(self.is_square(), "Hermiticity is defined for square matrices");
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermiticity_error() <= tol
    }

    /// max |U†U − I| over entries.
    pub fn unitarity_error(&self) -> f64 {
        let gram = &self.adjoint() * self;
        gram.max_abs_diff(&CMatrix::identity(self.cols))
    }

    /// Matrix-vector product M|v⟩.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols, "vector length must match columns");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// (M + M†)/2 — exact Hermitian part, used to scrub rounding noise.
    pub fn hermitian_part(&self) -> Self {
        assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + a * rhs.get(k, j));
                }
            }
        }
        out
    }
}

/// Inner product ⟨u|v⟩.
pub fn vec_inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and the unitary matrix whose columns are the matching eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl EigenDecomposition {
    /// Column `k` as an owned vector.
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        (0..self.vectors.rows()).map(|i| self.vectors.get(i, k)).collect()
    }

    /// V f(Λ) V† for a real function of the eigenvalues.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.values.len();
        let mut out = CMatrix::zeros(n, n);
        for (k, &lambda) in self.values.iter().enumerate() {
            let flam = f(lambda);
            if flam == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = self.vectors.get(i, k) * flam;
                for j in 0..n {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + vi * self.vectors.get(j, k).conj());
                }
            }
        }
        out.hermitian_part()
    }

    /// V Λ V†, for reconstruction checks.
    pub fn reconstruct(&self) -> CMatrix {
        self.apply_fn(|x| x)
    }
}

/// Kronecker product with the A-major index convention: entry
/// `((i*rb + k), (j*cb + l)) = a(i,j) * b(k,l)`.
pub fn tensor_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ra, ca) = (a.rows(), a.cols());
    let (rb, cb) = (b.rows(), b.cols());
    CMatrix::from_fn(ra * rb, ca * cb, |i, j| {
        a.get(i / rb, j / cb) * b.get(i % rb, j % cb)
    })
}

/// Partial trace of an operator on A⊗E. `keep` selects the surviving factor;
/// the trace of the input is preserved.
pub fn partial_trace(m: &CMatrix, dim_a: usize, dim_e: usize, keep: Subsystem) -> Result<CMatrix> {
    let joint = dim_a * dim_e;
    if !m.is_square() || m.rows() != joint {
        return Err(Error::DimensionMismatch(format!(
            "partial trace expects a {joint}x{joint} matrix for dims {dim_a}x{dim_e}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    match keep {
        Subsystem::A => Ok(CMatrix::from_fn(dim_a, dim_a, |a, a2| {
            (0..dim_e).map(|e| m.get(a * dim_e + e, a2 * dim_e + e)).sum()
        })),
        Subsystem::E => Ok(CMatrix::from_fn(dim_e, dim_e, |e, e2| {
            (0..dim_a).map(|a| m.get(a * dim_e + e, a * dim_e + e2)).sum()
        })),
    }
}

const MAX_JACOBI_SWEEPS: usize = 64;

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// Rejects inputs whose Hermiticity error exceeds [`HERMITICITY_TOL`].
pub fn herm_eig(m: &CMatrix) -> Result<EigenDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigendecomposition expects a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let herm = m.hermiticity_error();
    if herm > HERMITICITY_TOL {
        return Err(Error::NotHermitian(herm));
    }

    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = CMatrix::identity(n);
    let scale = a.max_abs().max(1e-300);
    let target = 1e-15 * scale * n as f64;

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a.get(p, q).norm());
            }
        }
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("eigenvalues are finite"));

    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |i, k| v.get(i, order[k]));
    Ok(EigenDecomposition { values, vectors })
}

/// One complex Jacobi rotation zeroing the (p, q) element of `a`, with the
/// same rotation accumulated into the eigenvector matrix `v`.
fn jacobi_rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let abs_apq = apq.norm();
    if abs_apq < 1e-300 {
        return;
    }
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let phase = apq / abs_apq;

    let tau = (aqq - app) / (2.0 * abs_apq);
    let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
    let t = sign / (tau.abs() + (1.0 + tau * tau).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let sigma = t * c;
    let s = phase * sigma;

    let n = a.rows();
    // Rows p and q of J†A, then columns p and q of (J†A)J.
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, apk * c - aqk * s);
        a.set(q, k, apk * s.conj() + aqk * c);
    }
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * c - akq * s.conj());
        a.set(k, q, akp * s + akq * c);
    }
    // The 2x2 block is known in closed form; writing it explicitly keeps the
    // pivot exactly zero and the diagonal exactly real.
    let dpp = c * c * app + sigma * sigma * aqq - 2.0 * c * sigma * abs_apq;
    let dqq = sigma * sigma * app + c * c * aqq + 2.0 * c * sigma * abs_apq;
    a.set(p, p, Complex64::new(dpp, 0.0));
    a.set(q, q, Complex64::new(dqq, 0.0));
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c - vkq * s.conj());
        v.set(k, q, vkp * s + vkq * c);
    }
}

/// Spectral map of a Hermitian matrix: V f(Λ) V†.
pub fn matrix_function(m: &CMatrix, f: impl Fn(f64) -> f64) -> Result<CMatrix> {
    Ok(herm_eig(m)?.apply_fn(f))
}

/// Positive-semidefinite square root. Eigenvalues in `[-PSD_TOL, 0)` are
/// clamped to zero; anything lower is rejected.
pub fn psd_sqrt(m: &CMatrix) -> Result<CMatrix> {
    let eig = herm_eig(m)?;
    let min = eig.values.first().copied().unwrap_or(0.0);
    if min < -PSD_TOL {
        return Err(Error::NotPsd(min));
    }
    Ok(eig.apply_fn(|x| x.max(0.0).sqrt()))
}

/// |M|: same eigenbasis, eigenvalues replaced by their absolute values.
pub fn op_abs(m: &CMatrix) -> Result<CMatrix> {
    matrix_function(m, f64::abs)
}

/// tr|M| = Σ|λᵢ| for Hermitian M.
pub fn trace_norm(m: &CMatrix) -> Result<f64> {
    Ok(herm_eig(m)?.values.iter().map(|x| x.abs()).sum())
}
