//! Two-qubit states: Pauli coordinates, exchange symmetry, canonical
//! constructors, the partial transpose and the angular-momentum basis changes.
//!
//! Conventions, fixed crate-wide:
//!
//! * computational basis ordered `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`, with `|↑⟩` the
//!   `+1` eigenvector of `σ_z` (index = 2·b₁ + b₂, `b = 0` for `↑`);
//! * `σ_y = [[0, −i], [i, 0]]`;
//! * the symmetric subspace is spanned by `|1,1⟩ = |↑↑⟩`,
//!   `|1,0⟩ = (|↑↓⟩ + |↓↑⟩)/√2`, `|1,−1⟩ = |↓↓⟩`, and the singlet is
//!   `|0,0⟩ = (|↑↓⟩ − |↓↑⟩)/√2`.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{DMatrix, DVector, Matrix2};

use crate::error::{Error, Result};
use crate::linalg::{c64, min_eigenvalue, HermitianMatrix, Mat3, RealSymMatrix, Vec3, C64};

pub const AXES: [&str; 3] = ["x", "y", "z"];

/// Trace tolerance for density matrices.
pub const TRACE_TOLERANCE: f64 = 1e-12;
/// Most negative eigenvalue still accepted as roundoff in a density matrix.
pub const POSITIVITY_TOLERANCE: f64 = 1e-10;
/// Default tolerance for [`to_symmetric`].
pub const SYMMETRY_TOLERANCE: f64 = 1e-9;

const BLOCH_SLACK: f64 = 1e-9;

/// Pauli matrix for axis `0 = x`, `1 = y`, `2 = z`.
pub fn pauli(axis: usize) -> Matrix2<C64> {
    let (o, l, i) = (c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 1.0));
    match axis {
        0 => Matrix2::new(o, l, l, o),
        1 => Matrix2::new(o, -i, i, o),
        2 => Matrix2::new(l, o, o, -l),
        _ => panic!("Pauli axis {axis} out of range"),
    }
}

pub(crate) fn kron(a: &Matrix2<C64>, b: &Matrix2<C64>) -> DMatrix<C64> {
    DMatrix::from_fn(4, 4, |r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

fn identity2() -> Matrix2<C64> {
    Matrix2::identity()
}

/// `σ_i ⊗ I`.
pub fn sigma_first(axis: usize) -> DMatrix<C64> {
    kron(&pauli(axis), &identity2())
}

/// `I ⊗ σ_i`.
pub fn sigma_second(axis: usize) -> DMatrix<C64> {
    kron(&identity2(), &pauli(axis))
}

/// Bloch vectors of both qubits and their correlation matrix `t_ij = ⟨σ_i ⊗ σ_j⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochParams {
    s1: Vec3,
    s2: Vec3,
    t: Mat3,
}

impl BlochParams {
    pub fn new(s1: Vec3, s2: Vec3, t: Mat3) -> Result<Self> {
        for (name, s) in [("s1", &s1), ("s2", &s2)] {
            if s.norm() > 1.0 + BLOCH_SLACK {
                return Err(Error::Domain(format!("|{name}| = {} exceeds 1", s.norm())));
            }
        }
        if t.amax() > 1.0 + BLOCH_SLACK {
            return Err(Error::Domain(format!("correlation entry {} exceeds 1", t.amax())));
        }
        Ok(Self { s1, s2, t })
    }

    pub fn zero() -> Self {
        Self {
            s1: Vec3::zeros(),
            s2: Vec3::zeros(),
            t: Mat3::zeros(),
        }
    }

    pub fn s1(&self) -> Vec3 {
        self.s1
    }

    pub fn s2(&self) -> Vec3 {
        self.s2
    }

    pub fn t(&self) -> Mat3 {
        self.t
    }
}

/// Coordinates of an exchange-symmetric state: common Bloch vector `s` and
/// symmetric, unit-trace correlation matrix `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricParams {
    s: Vec3,
    t: Mat3,
}

impl SymmetricParams {
    /// Validates `T = Tᵀ` and `tr T = 1` to `1e-10` and `‖s‖ ≤ 1`; `T` is
    /// replaced by its symmetric part.
    pub fn new(s: Vec3, t: Mat3) -> Result<Self> {
        let asym = (t - t.transpose()).amax();
        if asym > 1e-10 {
            return Err(Error::NotSymmetric {
                constraint: "T = T^T",
                residual: asym,
            });
        }
        let trace_residual = (t.trace() - 1.0).abs();
        if trace_residual > 1e-10 {
            return Err(Error::NotSymmetric {
                constraint: "tr T = 1",
                residual: trace_residual,
            });
        }
        if s.norm() > 1.0 + BLOCH_SLACK {
            return Err(Error::Domain(format!("|s| = {} exceeds 1", s.norm())));
        }
        Ok(Self {
            s,
            t: (t + t.transpose()) * 0.5,
        })
    }

    pub fn s(&self) -> Vec3 {
        self.s
    }

    pub fn t(&self) -> Mat3 {
        self.t
    }

    pub fn to_bloch(&self) -> BlochParams {
        BlochParams {
            s1: self.s,
            s2: self.s,
            t: self.t,
        }
    }

    /// The two-qubit density matrix these parameters describe.
    pub fn density(&self) -> Result<TwoQubitDensity> {
        pauli_compose(&self.to_bloch())
    }
}

/// A 4×4 density matrix in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensity {
    rho: HermitianMatrix,
}

impl TwoQubitDensity {
    pub fn new(rho: HermitianMatrix) -> Result<Self> {
        if rho.dim() != 4 {
            return Err(Error::Dimension {
                expected: 4,
                got: rho.dim(),
            });
        }
        if (rho.trace() - 1.0).abs() > TRACE_TOLERANCE {
            return Err(Error::Trace(rho.trace()));
        }
        let lmin = min_eigenvalue(&rho)?;
        if lmin < -POSITIVITY_TOLERANCE {
            return Err(Error::NotPositive(lmin));
        }
        Ok(Self { rho })
    }

    /// `|ψ⟩⟨ψ|` for a normalized 4-component amplitude vector.
    pub fn pure(psi: &DVector<C64>) -> Result<Self> {
        if psi.len() != 4 {
            return Err(Error::Dimension {
                expected: 4,
                got: psi.len(),
            });
        }
        Self::new(HermitianMatrix::from_weighted_projectors(4, &[(1.0, psi.normalize())])?)
    }

    pub fn rho(&self) -> &HermitianMatrix {
        &self.rho
    }

    /// Convex combination `Σ w_k ρ_k`.
    pub fn mix(terms: &[(f64, &TwoQubitDensity)]) -> Result<Self> {
        let parts: Vec<_> = terms.iter().map(|(w, d)| (*w, &d.rho)).collect();
        Self::new(HermitianMatrix::combine(&parts)?)
    }

    /// `SWAP·ρ·SWAP`.
    pub fn swapped(&self) -> HermitianMatrix {
        let perm = [0usize, 2, 1, 3];
        let m = self.rho.matrix();
        let out = DMatrix::from_fn(4, 4, |r, c| m[(perm[r], perm[c])]);
        HermitianMatrix::new(out).expect("permutation preserves hermiticity")
    }
}

/// Convex mixture of identical product states `Σ p_w ρ_w ⊗ ρ_w`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureSpec {
    weights: Vec<f64>,
    vectors: Vec<Vec3>,
}

impl MixtureSpec {
    pub fn new(weights: Vec<f64>, vectors: Vec<Vec3>) -> Result<Self> {
        if weights.len() != vectors.len() || weights.is_empty() {
            return Err(Error::Invalid(format!(
                "mixture needs matching non-empty weights and vectors ({} vs {})",
                weights.len(),
                vectors.len()
            )));
        }
        if let Some(p) = weights.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::Domain(format!("weight {p} outside [0, 1]")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("weights sum to {total}")));
        }
        if let Some(v) = vectors.iter().find(|v| v.norm() > 1.0 + 1e-12) {
            return Err(Error::Domain(format!("Bloch vector of length {}", v.norm())));
        }
        Ok(Self { weights, vectors })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn vectors(&self) -> &[Vec3] {
        &self.vectors
    }

    pub fn terms(&self) -> impl Iterator<Item = (f64, &Vec3)> {
        self.weights.iter().copied().zip(self.vectors.iter())
    }

    /// `s = Σ p_w s_w`.
    pub fn mean(&self) -> Vec3 {
        self.terms().map(|(p, v)| v * p).sum()
    }

    /// `T = Σ p_w s_w s_wᵀ`.
    pub fn second_moment(&self) -> Mat3 {
        self.terms().map(|(p, v)| v * v.transpose() * p).sum()
    }
}

pub fn pauli_decompose(rho: &TwoQubitDensity) -> Result<BlochParams> {
    let checked = |name: String, z: C64| -> Result<f64> {
        if z.im.abs() > 1e-10 {
            Err(Error::ImaginaryResidue { name, residue: z.im })
        } else {
            Ok(z.re)
        }
    };
    let r = &rho.rho;
    let mut s1 = Vec3::zeros();
    let mut s2 = Vec3::zeros();
    let mut t = Mat3::zeros();
    for i in 0..3 {
        s1[i] = checked(format!("s1_{}", AXES[i]), r.expectation(&sigma_first(i)))?;
        s2[i] = checked(format!("s2_{}", AXES[i]), r.expectation(&sigma_second(i)))?;
        for j in 0..3 {
            let op = kron(&pauli(i), &pauli(j));
            t[(i, j)] = checked(format!("t_{}{}", AXES[i], AXES[j]), r.expectation(&op))?;
        }
    }
    BlochParams::new(s1, s2, t)
}

fn compose_matrix(p: &BlochParams) -> DMatrix<C64> {
    let mut m = DMatrix::<C64>::identity(4, 4);
    for i in 0..3 {
        m += sigma_first(i) * c64(p.s1[i], 0.0);
        m += sigma_second(i) * c64(p.s2[i], 0.0);
        for j in 0..3 {
            m += kron(&pauli(i), &pauli(j)) * c64(p.t[(i, j)], 0.0);
        }
    }
    m * c64(0.25, 0.0)
}

pub fn pauli_compose(p: &BlochParams) -> Result<TwoQubitDensity> {
    let rho = HermitianMatrix::new(compose_matrix(p))?;
    let lmin = min_eigenvalue(&rho)?;
    if lmin < -POSITIVITY_TOLERANCE {
        return Err(Error::NotPositive(lmin));
    }
    Ok(TwoQubitDensity { rho })
}

/// Checks the exchange-symmetry constraints and returns `(s, T)`.
pub fn to_symmetric(p: &BlochParams, tol: f64) -> Result<SymmetricParams> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let residuals = [
        ("s1 = s2", (p.s1 - p.s2).norm()),
        ("T = T^T", (p.t - p.t.transpose()).norm()),
        ("tr T = 1", (p.t.trace() - 1.0).abs()),
    ];
    if let Some(&(constraint, residual)) = residuals
        .iter()
        .filter(|(_, r)| *r > tol)
        .reduce(|a, b| if b.1 > a.1 { b } else { a })
    {
        return Err(Error::NotSymmetric {
            constraint,
            residual,
        });
    }
    let s = (p.s1 + p.s2) * 0.5;
    let mut t = (p.t + p.t.transpose()) * 0.5;
    // restore the unit trace exactly; the residual is already below tol
    let shift = (1.0 - t.trace()) / 3.0;
    t += Mat3::identity() * shift;
    SymmetricParams::new(s, t)
}

/// `κ₁|↑↑⟩ + κ₂|↓↓⟩` with `κ₂ = √(1 − κ₁²)`.
pub fn schmidt_pure(kappa1: f64) -> Result<TwoQubitDensity> {
    if !(kappa1 > 0.0 && kappa1 < 1.0) {
        return Err(Error::Domain(format!("kappa1 = {kappa1} outside (0, 1)")));
    }
    let kappa2 = (1.0 - kappa1 * kappa1).sqrt();
    let psi = DVector::from_vec(vec![
        c64(kappa1, 0.0),
        c64(0.0, 0.0),
        c64(0.0, 0.0),
        c64(kappa2, 0.0),
    ]);
    TwoQubitDensity::pure(&psi)
}

/// `ρ_w = ½(I + s_w·σ)`.
pub fn qubit_density(s: &Vec3) -> Matrix2<C64> {
    let mut m = identity2();
    for i in 0..3 {
        m += pauli(i) * c64(s[i], 0.0);
    }
    m * c64(0.5, 0.0)
}

pub fn separable_symmetric(m: &MixtureSpec) -> TwoQubitDensity {
    let mut rho = DMatrix::<C64>::zeros(4, 4);
    for (p, s) in m.terms() {
        let q = qubit_density(s);
        rho += kron(&q, &q) * c64(p, 0.0);
    }
    TwoQubitDensity {
        rho: HermitianMatrix::new(rho).expect("product of Hermitian factors is Hermitian"),
    }
}

/// Transpose on the second tensor factor of any 4×4 Hermitian matrix.
pub fn partial_transpose_matrix(m: &HermitianMatrix) -> HermitianMatrix {
    let a = m.matrix();
    let out = DMatrix::from_fn(4, 4, |r, c| {
        let (i1, i2) = (r / 2, r % 2);
        let (j1, j2) = (c / 2, c % 2);
        a[(2 * i1 + j2, 2 * j1 + i2)]
    });
    HermitianMatrix::new(out).expect("partial transpose preserves hermiticity")
}

pub fn partial_transpose(rho: &TwoQubitDensity) -> HermitianMatrix {
    partial_transpose_matrix(&rho.rho)
}

/// Columns `|1,1⟩, |1,0⟩, |1,−1⟩` expressed in the computational basis (4×3).
pub fn triplet_basis() -> DMatrix<C64> {
    let r = c64(FRAC_1_SQRT_2, 0.0);
    let (o, l) = (c64(0.0, 0.0), c64(1.0, 0.0));
    DMatrix::from_row_slice(4, 3, &[l, o, o, o, r, o, o, r, o, o, o, l])
}

/// The singlet `|0,0⟩` in the computational basis.
pub fn singlet() -> DVector<C64> {
    let r = FRAC_1_SQRT_2;
    DVector::from_vec(vec![c64(0.0, 0.0), c64(r, 0.0), c64(-r, 0.0), c64(0.0, 0.0)])
}

/// ρ restricted to the triplet subspace, basis ordered `M = 1, 0, −1`.
pub fn symmetric_subspace_form(p: &SymmetricParams) -> Result<HermitianMatrix> {
    let rho = HermitianMatrix::new(compose_matrix(&p.to_bloch()))?;
    let form = rho.conjugate_by(&triplet_basis())?;
    let lmin = min_eigenvalue(&form)?;
    if lmin < -POSITIVITY_TOLERANCE {
        return Err(Error::NotPositive(lmin));
    }
    Ok(form)
}

/// Unitary `Q` with `Q†·ρ^{T₂}·Q = ½[[T, s], [sᵀ, 1]]` for every symmetric ρ.
///
/// `Q = (I ⊗ σ_y)·B`, where `I ⊗ σ_y` turns the transpose on qubit 2 into the
/// full reversal `σ₂ → −σ₂`, and `B` has columns
/// `−(|1,1⟩ − |1,−1⟩)/√2`, `+i(|1,1⟩ + |1,−1⟩)/√2`, `|1,0⟩`, `|0,0⟩`.
pub fn pt_block_basis() -> DMatrix<C64> {
    let r = FRAC_1_SQRT_2;
    let o = c64(0.0, 0.0);
    // rows: |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩; columns: X, Y, Z, singlet
    let b = DMatrix::from_row_slice(
        4,
        4,
        &[
            c64(-r, 0.0), c64(0.0, r), o, o,
            o, o, c64(r, 0.0), c64(r, 0.0),
            o, o, c64(r, 0.0), c64(-r, 0.0),
            c64(r, 0.0), c64(0.0, r), o, o,
        ],
    );
    kron(&identity2(), &pauli(1)) * b
}

/// `½·[[T, s], [sᵀ, 1]]`.
pub fn pt_block_form(p: &SymmetricParams) -> RealSymMatrix {
    let mut m = DMatrix::zeros(4, 4);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = 0.5 * p.t[(i, j)];
        }
        m[(i, 3)] = 0.5 * p.s[i];
        m[(3, i)] = 0.5 * p.s[i];
    }
    m[(3, 3)] = 0.5;
    RealSymMatrix::new(m).expect("T is symmetric by construction")
}

/// `L·M·Lᵀ` with `L = [[I, −s], [0, 1]]`, which block-diagonalizes
/// `½[[T, s], [sᵀ, 1]]` into `½·diag(T − ssᵀ, 1)`.
pub fn congruence_reduce(ptb: &RealSymMatrix, s: &Vec3) -> Result<RealSymMatrix> {
    if ptb.dim() != 4 {
        return Err(Error::Dimension {
            expected: 4,
            got: ptb.dim(),
        });
    }
    let mut l = DMatrix::identity(4, 4);
    for i in 0..3 {
        l[(i, 3)] = -s[i];
    }
    ptb.congruence(&l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{signature, Spectral};
    use approx::assert_abs_diff_eq;

    fn bell() -> TwoQubitDensity {
        schmidt_pure(FRAC_1_SQRT_2).unwrap()
    }

    fn dicke_10() -> TwoQubitDensity {
        let r = FRAC_1_SQRT_2;
        TwoQubitDensity::pure(&DVector::from_vec(vec![
            c64(0.0, 0.0),
            c64(r, 0.0),
            c64(r, 0.0),
            c64(0.0, 0.0),
        ]))
        .unwrap()
    }

    fn up_up() -> TwoQubitDensity {
        let e = DVector::from_vec(vec![c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0)]);
        TwoQubitDensity::pure(&e).unwrap()
    }

    fn assert_mat3(a: &Mat3, b: &Mat3, eps: f64) {
        assert!((a - b).amax() <= eps, "{a} vs {b}");
    }

    fn assert_vec3(a: &Vec3, b: &Vec3, eps: f64) {
        assert!((a - b).amax() <= eps, "{a} vs {b}");
    }

    #[test]
    fn decompose_product_state() {
        let p = pauli_decompose(&up_up()).unwrap();
        assert_vec3(&p.s1(), &Vec3::z(), 1e-15);
        assert_vec3(&p.s2(), &Vec3::z(), 1e-15);
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::z()), 1e-15);
    }

    #[test]
    fn decompose_maximally_mixed() {
        let mixed = TwoQubitDensity::new(HermitianMatrix::new(DMatrix::identity(4, 4) * c64(0.25, 0.0)).unwrap()).unwrap();
        let p = pauli_decompose(&mixed).unwrap();
        assert_eq!(p, BlochParams::zero());
    }

    #[test]
    fn decompose_bell() {
        let p = pauli_decompose(&bell()).unwrap();
        assert_vec3(&p.s1(), &Vec3::zeros(), 1e-15);
        assert_vec3(&p.s2(), &Vec3::zeros(), 1e-15);
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::new(1.0, -1.0, 1.0)), 1e-15);
    }

    #[test]
    fn compose_examples() {
        let rho = pauli_compose(&BlochParams::zero()).unwrap();
        assert!((rho.rho().matrix() - DMatrix::<C64>::identity(4, 4) * c64(0.25, 0.0)).norm() < 1e-15);

        let p = BlochParams::new(Vec3::z(), Vec3::z(), Mat3::from_diagonal(&Vec3::z())).unwrap();
        assert!((pauli_compose(&p).unwrap().rho().matrix() - up_up().rho().matrix()).norm() < 1e-15);

        let unphysical = BlochParams::new(Vec3::zeros(), Vec3::zeros(), Mat3::identity()).unwrap();
        assert!(matches!(pauli_compose(&unphysical), Err(Error::NotPositive(_))));
    }

    #[test]
    fn imaginary_residue_is_reported() {
        // Hermitian but with a non-physical phase would still give real
        // expectations, so feed a raw non-Hermitian matrix through the
        // unchecked path to exercise the guard.
        let mut m = DMatrix::<C64>::identity(4, 4) * c64(0.25, 0.0);
        m[(0, 1)] = c64(0.0, 0.1);
        m[(1, 0)] = c64(0.0, 0.1);
        let rho = TwoQubitDensity {
            rho: HermitianMatrix(m),
        };
        assert!(matches!(pauli_decompose(&rho), Err(Error::ImaginaryResidue { .. })));
    }

    #[test]
    fn to_symmetric_examples() {
        let sym = to_symmetric(&pauli_decompose(&bell()).unwrap(), SYMMETRY_TOLERANCE).unwrap();
        assert_vec3(&sym.s(), &Vec3::zeros(), 1e-15);
        assert_mat3(&sym.t(), &Mat3::from_diagonal(&Vec3::new(1.0, -1.0, 1.0)), 1e-15);

        let up_down = BlochParams::new(Vec3::z(), -Vec3::z(), Mat3::from_diagonal(&-Vec3::z())).unwrap();
        assert!(matches!(
            to_symmetric(&up_down, SYMMETRY_TOLERANCE),
            Err(Error::NotSymmetric { constraint: "s1 = s2", .. })
        ));

        let sym = to_symmetric(&pauli_decompose(&dicke_10()).unwrap(), SYMMETRY_TOLERANCE).unwrap();
        assert_vec3(&sym.s(), &Vec3::zeros(), 1e-15);
        assert_mat3(&sym.t(), &Mat3::from_diagonal(&Vec3::new(1.0, 1.0, -1.0)), 1e-15);
    }

    #[test]
    fn schmidt_closed_form() {
        let k1 = 3f64.sqrt() / 2.0;
        let p = pauli_decompose(&schmidt_pure(k1).unwrap()).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::new(h, -h, 1.0)), 1e-15);
        assert_vec3(&p.s1(), &Vec3::new(0.0, 0.0, 0.5), 1e-15);

        let p = pauli_decompose(&schmidt_pure(0.999_999_999).unwrap()).unwrap();
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::z()), 1e-4);
        assert_vec3(&p.s1(), &Vec3::z(), 1e-8);

        for bad in [0.0, 1.0, -0.3, f64::NAN] {
            assert!(schmidt_pure(bad).is_err());
        }
    }

    #[test]
    fn separable_examples() {
        let single = MixtureSpec::new(vec![1.0], vec![Vec3::z()]).unwrap();
        assert!((separable_symmetric(&single).rho().matrix() - up_up().rho().matrix()).norm() < 1e-15);

        let classical = MixtureSpec::new(vec![0.5, 0.5], vec![Vec3::z(), -Vec3::z()]).unwrap();
        let p = pauli_decompose(&separable_symmetric(&classical)).unwrap();
        assert_vec3(&p.s1(), &Vec3::zeros(), 1e-15);
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::z()), 1e-15);
    }

    #[test]
    fn mixture_validation() {
        assert!(MixtureSpec::new(vec![0.5, 0.4], vec![Vec3::z(), Vec3::x()]).is_err());
        assert!(MixtureSpec::new(vec![1.0], vec![Vec3::z() * 1.1]).is_err());
        assert!(MixtureSpec::new(vec![], vec![]).is_err());
        assert!(MixtureSpec::new(vec![1.5, -0.5], vec![Vec3::z(), Vec3::x()]).is_err());
    }

    #[test]
    fn partial_transpose_of_bell() {
        let ev = partial_transpose(&bell()).eigenvalues().unwrap();
        let expected = [-0.5, 0.5, 0.5, 0.5];
        for (a, b) in ev.iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn partial_transpose_of_product_is_psd() {
        let a = qubit_density(&Vec3::new(0.3, -0.4, 0.5));
        let b = qubit_density(&Vec3::new(-0.2, 0.6, 0.1));
        let rho = TwoQubitDensity::new(HermitianMatrix::new(kron(&a, &b)).unwrap()).unwrap();
        let pt = partial_transpose(&rho);
        let expected = kron(&a, &b.transpose());
        assert!((pt.matrix() - expected).norm() < 1e-15);
        assert!(min_eigenvalue(&pt).unwrap() > -1e-12);
    }

    #[test]
    fn triplet_form_examples() {
        let bell_params = SymmetricParams::new(Vec3::zeros(), Mat3::from_diagonal(&Vec3::new(1.0, -1.0, 1.0))).unwrap();
        let f = symmetric_subspace_form(&bell_params).unwrap();
        let h = c64(0.5, 0.0);
        let o = c64(0.0, 0.0);
        let expected = DMatrix::from_row_slice(3, 3, &[h, o, h, o, o, o, h, o, h]);
        assert!((f.matrix() - expected).norm() < 1e-15);

        let d = SymmetricParams::new(Vec3::zeros(), Mat3::from_diagonal(&Vec3::new(1.0, 1.0, -1.0))).unwrap();
        let f = symmetric_subspace_form(&d).unwrap();
        let mut expected = DMatrix::<C64>::zeros(3, 3);
        expected[(1, 1)] = c64(1.0, 0.0);
        assert!((f.matrix() - expected).norm() < 1e-15);
    }

    #[test]
    fn block_form_examples() {
        let bell_params = SymmetricParams::new(Vec3::zeros(), Mat3::from_diagonal(&Vec3::new(1.0, -1.0, 1.0))).unwrap();
        let b = pt_block_form(&bell_params);
        assert_eq!(b, RealSymMatrix::diagonal(&[0.5, -0.5, 0.5, 0.5]));

        let up = SymmetricParams::new(Vec3::z(), Mat3::from_diagonal(&Vec3::z())).unwrap();
        let b = pt_block_form(&up);
        let expected = RealSymMatrix::from_row_slice(
            4,
            &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5, 0.0, 0.0, 0.5, 0.5],
        )
        .unwrap();
        assert_eq!(b, expected);

        let reduced = congruence_reduce(&b, &up.s()).unwrap();
        assert!((reduced.matrix() - RealSymMatrix::diagonal(&[0.0, 0.0, 0.0, 0.5]).matrix()).amax() < 1e-15);
        let ev = reduced.eigenvalues().unwrap();
        assert_eq!(signature(&ev, 1e-9), (0, 3, 1));
    }

    #[test]
    fn block_basis_is_unitary() {
        let q = pt_block_basis();
        assert!((q.adjoint() * &q - DMatrix::<C64>::identity(4, 4)).norm() < 1e-15);
    }

    #[test]
    fn swap_invariance_of_symmetric_states() {
        let rho = dicke_10();
        assert!((rho.swapped().matrix() - rho.rho().matrix()).norm() < 1e-15);
        let singlet_state = TwoQubitDensity::pure(&singlet()).unwrap();
        // the singlet is antisymmetric as a vector but its projector is swap-invariant
        assert!((singlet_state.swapped().matrix() - singlet_state.rho().matrix()).norm() < 1e-15);
        let p = pauli_decompose(&singlet_state).unwrap();
        assert!(to_symmetric(&p, SYMMETRY_TOLERANCE).is_err());
    }
}
