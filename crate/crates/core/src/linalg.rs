//! Small dense eigensolvers and the matrix wrappers the rest of the crate is
//! built on.
//!
//! Every matrix in this crate is tiny (3×3 correlation blocks, 4×4 two-qubit
//! density matrices, Dicke-space matrices of dimension N+1), so a cyclic
//! Jacobi iteration is accurate and fast enough. Hermitian matrices are
//! diagonalized through the real embedding
//!
//! ```text
//!     H = R + iM   ↦   [[R, -M],
//!                       [M,  R]]
//! ```
//!
//! whose spectrum is that of `H` with every eigenvalue doubled.

use nalgebra::{Complex, DMatrix, DVector, Matrix3, Scalar, Vector3};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type Vec3 = Vector3<f64>;
pub type Mat3 = Matrix3<f64>;

/// Relative asymmetry below which inputs are silently symmetrized.
pub const SYMMETRY_THRESHOLD: f64 = 1e-12;
/// Jacobi stops once the off-diagonal Frobenius norm falls below this fraction of ‖M‖.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-13;
pub const MAX_SWEEPS: usize = 60;

pub(crate) fn c64(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

fn asymmetry_limit(max_abs: f64) -> f64 {
    SYMMETRY_THRESHOLD * max_abs.max(1.0)
}

/// Real symmetric matrix, symmetric bit-for-bit after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSymMatrix(pub(crate) DMatrix<f64>);

impl RealSymMatrix {
    /// Wraps `m`, averaging it with its transpose when the asymmetry is
    /// below `1e-12·max(1, max|m_ij|)` and rejecting it otherwise.
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension {
                expected: m.nrows(),
                got: m.ncols(),
            });
        }
        let asym = (&m - m.transpose()).amax();
        if asym > asymmetry_limit(m.amax()) {
            return Err(Error::Asymmetric(asym));
        }
        Ok(Self((&m + m.transpose()) * 0.5))
    }

    pub fn from_row_slice(n: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension {
                expected: n * n,
                got: entries.len(),
            });
        }
        Self::new(DMatrix::from_row_slice(n, n, entries))
    }

    pub fn from_mat3(m: &Mat3) -> Result<Self> {
        Self::new(DMatrix::from_iterator(3, 3, m.iter().copied()))
    }

    pub fn diagonal(d: &[f64]) -> Self {
        Self(DMatrix::from_diagonal(&DVector::from_column_slice(d)))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    /// The 3×3 fixed-size view; panics unless `dim() == 3`.
    pub fn to_mat3(&self) -> Mat3 {
        assert_eq!(self.dim(), 3, "to_mat3 on a {}x{} matrix", self.dim(), self.dim());
        Mat3::from_iterator(self.0.iter().copied())
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    /// `Q·M·Qᵀ`, which stays symmetric for any real `Q`.
    pub fn congruence(&self, q: &DMatrix<f64>) -> Result<Self> {
        Self::new(q * &self.0 * q.transpose())
    }

    pub fn eig(&self) -> Result<EigenDecomposition<f64>> {
        eig_real_symmetric(self)
    }
}

/// Complex Hermitian matrix; the diagonal is real after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(pub(crate) DMatrix<C64>);

impl HermitianMatrix {
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension {
                expected: m.nrows(),
                got: m.ncols(),
            });
        }
        let diff = &m - m.adjoint();
        let asym = diff.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let max_abs = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if asym > asymmetry_limit(max_abs) {
            return Err(Error::Asymmetric(asym));
        }
        Ok(Self((&m + m.adjoint()) * c64(0.5, 0.0)))
    }

    /// Builds `Σ_k w_k |v_k⟩⟨v_k|`.
    pub fn from_weighted_projectors(n: usize, terms: &[(f64, DVector<C64>)]) -> Result<Self> {
        let mut m = DMatrix::zeros(n, n);
        for (w, v) in terms {
            m += v * v.adjoint() * c64(*w, 0.0);
        }
        Self::new(m)
    }

    pub fn from_real(m: &RealSymMatrix) -> Self {
        Self(m.0.map(|x| c64(x, 0.0)))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.0[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        self.0.diagonal().iter().map(|z| z.re).sum()
    }

    /// `tr(H·A)`, the expectation of `A` when `H` is a density matrix.
    pub fn expectation(&self, a: &DMatrix<C64>) -> C64 {
        (&self.0 * a).trace()
    }

    /// `Q†·H·Q`; `Q` may be rectangular.
    pub fn conjugate_by(&self, q: &DMatrix<C64>) -> Result<Self> {
        Self::new(q.adjoint() * &self.0 * q)
    }

    /// `Σ_k w_k H_k` for Hermitian `H_k` of equal dimension.
    pub fn combine(terms: &[(f64, &HermitianMatrix)]) -> Result<Self> {
        let n = terms.first().map(|(_, h)| h.dim()).unwrap_or(0);
        let mut m = DMatrix::zeros(n, n);
        for (w, h) in terms {
            if h.dim() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: h.dim(),
                });
            }
            m += &h.0 * c64(*w, 0.0);
        }
        Self::new(m)
    }

    pub fn eig(&self) -> Result<EigenDecomposition<C64>> {
        eig_hermitian(self)
    }
}

/// Eigenvalues in ascending order with the matching eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T: Scalar> {
    pub values: Vec<f64>,
    pub vectors: DMatrix<T>,
}

impl<T: Scalar> EigenDecomposition<T> {
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

impl EigenDecomposition<f64> {
    /// `max_k ‖M·v_k − λ_k·v_k‖`.
    pub fn residual(&self, m: &RealSymMatrix) -> f64 {
        (0..self.values.len())
            .map(|k| {
                let v = self.vectors.column(k);
                (m.matrix() * v - v * self.values[k]).norm()
            })
            .fold(0.0, f64::max)
    }
}

impl EigenDecomposition<C64> {
    pub fn residual(&self, h: &HermitianMatrix) -> f64 {
        (0..self.values.len())
            .map(|k| {
                let v = self.vectors.column(k);
                (h.matrix() * v - v * c64(self.values[k], 0.0)).norm()
            })
            .fold(0.0, f64::max)
    }
}

fn off_diagonal_norm(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

fn rotate(a: &mut DMatrix<f64>, v: &mut DMatrix<f64>, p: usize, q: usize) {
    let n = a.nrows();
    let apq = a[(p, q)];
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    a[(p, p)] -= t * apq;
    a[(q, q)] += t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for r in 0..n {
        if r != p && r != q {
            let arp = a[(r, p)];
            let arq = a[(r, q)];
            a[(r, p)] = c * arp - s * arq;
            a[(p, r)] = a[(r, p)];
            a[(r, q)] = s * arp + c * arq;
            a[(q, r)] = a[(r, q)];
        }
    }
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = c * vrp - s * vrq;
        v[(r, q)] = s * vrp + c * vrq;
    }
}

/// Cyclic Jacobi with threshold sweeps. Returns unsorted eigenpairs.
fn jacobi(mut a: DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    let mut v = DMatrix::identity(n, n);
    let target = OFF_DIAGONAL_TOLERANCE * a.norm();
    let mut off = off_diagonal_norm(&a);
    let mut sweeps = 0;
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        // early sweeps only annihilate the larger elements
        let threshold = if sweeps < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 || apq.abs() <= threshold {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }
    Ok(((0..n).map(|i| a[(i, i)]).collect(), v))
}

fn sorted<T: Scalar>(values: Vec<f64>, vectors: DMatrix<T>) -> EigenDecomposition<T> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let values = order.iter().map(|&i| values[i]).collect();
    let columns: Vec<_> = order.iter().map(|&i| vectors.column(i).into_owned()).collect();
    let vectors = DMatrix::from_columns(&columns);
    EigenDecomposition { values, vectors }
}

pub fn eig_real_symmetric(m: &RealSymMatrix) -> Result<EigenDecomposition<f64>> {
    let (values, vectors) = jacobi(m.0.clone())?;
    Ok(sorted(values, vectors))
}

/// Hermitian eigendecomposition through the 2n-dimensional real embedding.
///
/// The embedding's eigenvectors come in pairs `(x; y)`, `(−y; x)` that map to
/// the same complex eigenvector `x + iy` up to a phase. Taking `n` of the `2n`
/// candidates by pivoted Gram–Schmidt (largest remaining norm first) picks a
/// unitary basis even inside degenerate eigenspaces.
pub fn eig_hermitian(h: &HermitianMatrix) -> Result<EigenDecomposition<C64>> {
    let n = h.dim();
    let mut emb = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = h.0[(i, j)];
            emb[(i, j)] = z.re;
            emb[(i + n, j + n)] = z.re;
            emb[(i, j + n)] = -z.im;
            emb[(i + n, j)] = z.im;
        }
    }
    let (_, vecs) = jacobi(emb)?;

    let mut pool: Vec<DVector<C64>> = (0..2 * n)
        .map(|k| DVector::from_fn(n, |i, _| c64(vecs[(i, k)], vecs[(i + n, k)])))
        .collect();
    let mut chosen: Vec<DVector<C64>> = Vec::with_capacity(n);
    for _ in 0..n {
        let (idx, _) = pool
            .iter()
            .enumerate()
            .map(|(k, z)| (k, z.norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("candidate pool is never exhausted before n picks");
        let z = pool.swap_remove(idx).normalize();
        for r in pool.iter_mut() {
            let overlap = z.dotc(r);
            *r -= &z * overlap;
        }
        chosen.push(z);
    }
    let values = chosen
        .iter()
        .map(|z| z.dotc(&(&h.0 * z)).re)
        .collect();
    Ok(sorted(values, DMatrix::from_columns(&chosen)))
}

/// Anything with a real spectrum.
pub trait Spectral {
    fn eigenvalues(&self) -> Result<Vec<f64>>;
}

impl Spectral for RealSymMatrix {
    fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eig_real_symmetric(self)?.values)
    }
}

impl Spectral for HermitianMatrix {
    fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eig_hermitian(self)?.values)
    }
}

pub fn min_eigenvalue<M: Spectral + ?Sized>(m: &M) -> Result<f64> {
    Ok(m.eigenvalues()?[0])
}

/// Sign of the smallest eigenvalue relative to a zero band `[-tol, tol]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Definiteness {
    Negative,
    NonNegative,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdVerdict {
    pub sign: Definiteness,
    pub min_eigenvalue: f64,
    pub tolerance: f64,
}

impl PsdVerdict {
    pub fn from_value(min_eigenvalue: f64, tolerance: f64) -> Self {
        let sign = if min_eigenvalue < -tolerance {
            Definiteness::Negative
        } else if min_eigenvalue > tolerance {
            Definiteness::NonNegative
        } else {
            Definiteness::Indeterminate
        };
        Self {
            sign,
            min_eigenvalue,
            tolerance,
        }
    }
}

pub fn psd_verdict<M: Spectral + ?Sized>(m: &M, tol: f64) -> Result<PsdVerdict> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(PsdVerdict::from_value(min_eigenvalue(m)?, tol))
}

/// Signature of a spectrum: counts of (negative, zero, positive) eigenvalues
/// with zero meaning `|λ| <= zero_band`.
pub fn signature(values: &[f64], zero_band: f64) -> (usize, usize, usize) {
    values.iter().fold((0, 0, 0), |(neg, zero, pos), &x| {
        if x < -zero_band {
            (neg + 1, zero, pos)
        } else if x > zero_band {
            (neg, zero, pos + 1)
        } else {
            (neg, zero + 1, pos)
        }
    })
}
