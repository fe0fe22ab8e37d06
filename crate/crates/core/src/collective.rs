//! Symmetric N-qubit states on the maximal-spin Dicke manifold and the
//! collective pairwise-entanglement tests.
//!
//! With `J = Σ σ_α/2`, mean spin `S_i = ⟨J_i⟩` and collective correlation
//! matrix `V_ij = ½⟨J_iJ_j + J_jJ_i⟩ − S_iS_j`, every pair reduction `(s, T)`
//! of a symmetric state satisfies
//!
//! ```text
//! V + SSᵀ/N = (N/4)·(I + (N − 1)·C),    C = T − ssᵀ,
//! ```
//!
//! so the pairs are entangled exactly when `λ_min(V + SSᵀ/N) < N/4`.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::covariance::Verdict;
use crate::error::{Error, Result};
use crate::linalg::{c64, eig_hermitian, eig_real_symmetric, min_eigenvalue, HermitianMatrix, Mat3, RealSymMatrix, Vec3, C64};
use crate::qstate::{triplet_basis, SymmetricParams, TwoQubitDensity, POSITIVITY_TOLERANCE, TRACE_TOLERANCE};

/// Largest qubit count the dense Dicke-space routines are exercised at.
pub const MAX_QUBITS: usize = 64;
/// Tolerance on the `V + SSᵀ/N = (N/4)(I + (N−1)C)` residual.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-8;
/// Directions in the Fibonacci-sphere cross-check of the Korbicz search.
pub const GRID_DIRECTIONS: usize = 4096;

fn check_qubits(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Domain(format!("need at least {min} qubits, got {n}")));
    }
    if n > MAX_QUBITS {
        return Err(Error::Domain(format!("{n} qubits exceeds the cap of {MAX_QUBITS}")));
    }
    Ok(())
}

/// `(J_x, J_y, J_z)` for spin `N/2` in the basis `M = N/2, …, −N/2`.
pub fn angular_momentum_ops(n: usize) -> Result<[HermitianMatrix; 3]> {
    check_qubits(n, 1)?;
    let dim = n + 1;
    let j = n as f64 / 2.0;
    let mut raise = DMatrix::<C64>::zeros(dim, dim);
    for k in 1..dim {
        // |M⟩ at index k, M = j − k; J₊|M⟩ lands on index k − 1
        let m = j - k as f64;
        raise[(k - 1, k)] = c64((j * (j + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let lower = raise.adjoint();
    let jx = (&raise + &lower) * c64(0.5, 0.0);
    let jy = (&raise - &lower) * c64(0.0, -0.5);
    let jz = DMatrix::from_diagonal(&DVector::from_fn(dim, |k, _| c64(j - k as f64, 0.0)));
    Ok([
        HermitianMatrix::new(jx)?,
        HermitianMatrix::new(jy)?,
        HermitianMatrix::new(jz)?,
    ])
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// A density matrix on the `N+1`-dimensional symmetric subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct CollectiveState {
    n: usize,
    rho: HermitianMatrix,
}

impl CollectiveState {
    pub fn new(n: usize, rho: HermitianMatrix) -> Result<Self> {
        check_qubits(n, 1)?;
        if rho.dim() != n + 1 {
            return Err(Error::Dimension {
                expected: n + 1,
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
        Ok(Self { n, rho })
    }

    /// Pure state from Dicke amplitudes (normalized here).
    pub fn pure(n: usize, amplitudes: &DVector<C64>) -> Result<Self> {
        check_qubits(n, 1)?;
        if amplitudes.len() != n + 1 {
            return Err(Error::Dimension {
                expected: n + 1,
                got: amplitudes.len(),
            });
        }
        let norm = amplitudes.norm();
        if norm == 0.0 {
            return Err(Error::Invalid("zero state vector".into()));
        }
        Self::new(n, HermitianMatrix::from_weighted_projectors(n + 1, &[(1.0, amplitudes / c64(norm, 0.0))])?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> &HermitianMatrix {
        &self.rho
    }

    /// Dicke state with `k` spins down, `M = N/2 − k`.
    pub fn dicke(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Domain(format!("k = {k} exceeds N = {n}")));
        }
        let mut amps = DVector::zeros(n + 1);
        amps[k] = c64(1.0, 0.0);
        Self::pure(n, &amps)
    }

    /// `(|N/2⟩ + |−N/2⟩)/√2`.
    pub fn ghz(n: usize) -> Result<Self> {
        let mut amps = DVector::zeros(n + 1);
        amps[0] = c64(1.0, 0.0);
        amps[n] = c64(1.0, 0.0);
        Self::pure(n, &amps)
    }

    /// All spins along `(sinθ cosφ, sinθ sinφ, cosθ)`.
    pub fn spin_coherent(n: usize, theta: f64, phi: f64) -> Result<Self> {
        Self::pure(n, &coherent_amplitudes(n, theta, phi))
    }

    /// `exp(−i·χt·J_z²)` applied to the coherent state along `(θ, φ)`.
    pub fn one_axis_twisted(n: usize, chi_t: f64, theta: f64, phi: f64) -> Result<Self> {
        let j = n as f64 / 2.0;
        let amps = coherent_amplitudes(n, theta, phi);
        let twisted = DVector::from_fn(n + 1, |k, _| {
            let m = j - k as f64;
            amps[k] * C64::from_polar(1.0, -chi_t * m * m)
        });
        Self::pure(n, &twisted)
    }

    /// Convex combination of states with equal `N`.
    pub fn mix(terms: &[(f64, &CollectiveState)]) -> Result<Self> {
        let n = terms
            .first()
            .map(|(_, s)| s.n)
            .ok_or_else(|| Error::Invalid("empty mixture".into()))?;
        if let Some((_, s)) = terms.iter().find(|(_, s)| s.n != n) {
            return Err(Error::Dimension {
                expected: n + 1,
                got: s.n + 1,
            });
        }
        let parts: Vec<_> = terms.iter().map(|(w, s)| (*w, &s.rho)).collect();
        Self::new(n, HermitianMatrix::combine(&parts)?)
    }

    /// Embeds a two-qubit state supported on the triplet subspace as `N = 2`.
    pub fn from_two_qubit(rho: &TwoQubitDensity) -> Result<Self> {
        let form = rho.rho().conjugate_by(&triplet_basis())?;
        Self::new(2, form)
    }

    /// The `N = 2` state as a 4×4 computational-basis density matrix.
    pub fn to_two_qubit(&self) -> Result<TwoQubitDensity> {
        if self.n != 2 {
            return Err(Error::Domain(format!("two-qubit embedding needs N = 2, got {}", self.n)));
        }
        let w = triplet_basis();
        TwoQubitDensity::new(HermitianMatrix::new(&w * self.rho.matrix() * w.adjoint())?)
    }

    /// `R ρ R†` with the Wigner rotation `R = exp(−iθ n·J)`.
    pub fn rotated(&self, axis: &Vec3, angle: f64) -> Result<Self> {
        let r = wigner_rotation(self.n, axis, angle)?;
        Self::new(self.n, HermitianMatrix::new(&r * self.rho.matrix() * r.adjoint())?)
    }
}

fn coherent_amplitudes(n: usize, theta: f64, phi: f64) -> DVector<C64> {
    let (sin, cos) = (theta / 2.0).sin_cos();
    DVector::from_fn(n + 1, |k, _| {
        let mag = binomial(n, k).sqrt() * cos.powi((n - k) as i32) * sin.powi(k as i32);
        C64::from_polar(mag, k as f64 * phi)
    })
}

/// `exp(−iθ n·J)` on the spin-`N/2` space, via the eigendecomposition of `n·J`.
pub fn wigner_rotation(n: usize, axis: &Vec3, angle: f64) -> Result<DMatrix<C64>> {
    let axis = axis.normalize();
    let ops = angular_momentum_ops(n)?;
    let mut generator = DMatrix::<C64>::zeros(n + 1, n + 1);
    for (i, op) in ops.iter().enumerate() {
        generator += op.matrix() * c64(axis[i], 0.0);
    }
    let e = eig_hermitian(&HermitianMatrix::new(generator)?)?;
    let phases = DMatrix::from_diagonal(&DVector::from_iterator(
        n + 1,
        e.values.iter().map(|m| C64::from_polar(1.0, -angle * m)),
    ));
    Ok(&e.vectors * phases * e.vectors.adjoint())
}

/// First and symmetrized second moments of the collective spin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CollectiveMoments {
    pub n: usize,
    /// `S_i = ⟨J_i⟩`.
    pub s: Vec3,
    /// `V_ij = ½⟨J_iJ_j + J_jJ_i⟩ − S_iS_j`.
    pub vn: Mat3,
}

impl CollectiveMoments {
    /// `½⟨J_iJ_j + J_jJ_i⟩`.
    pub fn second_moments(&self) -> Mat3 {
        self.vn + self.s * self.s.transpose()
    }

    /// `V + SSᵀ/N`.
    pub fn pairwise_matrix(&self) -> Mat3 {
        self.vn + self.s * self.s.transpose() / self.n as f64
    }

    /// `N/4`.
    pub fn threshold(&self) -> f64 {
        self.n as f64 / 4.0
    }

    /// `(N/2)(N/2 + 1)`.
    pub fn casimir(&self) -> f64 {
        let j = self.n as f64 / 2.0;
        j * (j + 1.0)
    }
}

pub fn collective_moments(st: &CollectiveState) -> Result<CollectiveMoments> {
    let ops = angular_momentum_ops(st.n)?;
    let rho = &st.rho;
    let s = Vec3::from_fn(|i, _| rho.expectation(ops[i].matrix()).re);
    let mut second = Mat3::zeros();
    for i in 0..3 {
        for j in i..3 {
            let anti = ops[i].matrix() * ops[j].matrix() + ops[j].matrix() * ops[i].matrix();
            let v = 0.5 * rho.expectation(&anti).re;
            second[(i, j)] = v;
            second[(j, i)] = v;
        }
    }
    Ok(CollectiveMoments {
        n: st.n,
        s,
        vn: second - s * s.transpose(),
    })
}

/// Pair reduction `(s, T)` recovered from the collective moments.
pub fn reduced_two_qubit(st: &CollectiveState) -> Result<SymmetricParams> {
    check_qubits(st.n, 2)?;
    reduced_from_moments(&collective_moments(st)?)
}

pub fn reduced_from_moments(m: &CollectiveMoments) -> Result<SymmetricParams> {
    let n = m.n as f64;
    let anti = m.second_moments() * 2.0;
    let t = (anti * (2.0 / n) - Mat3::identity()) / (n - 1.0);
    SymmetricParams::new(m.s * (2.0 / n), t)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairwiseAnalysis {
    pub verdict: Verdict,
    /// `λ_min(V + SSᵀ/N)`.
    pub lambda_min: f64,
    /// `N/4`.
    pub threshold: f64,
    /// `‖(V + SSᵀ/N) − (N/4)(I + (N−1)C)‖` (Frobenius).
    pub residual: f64,
}

/// Collective test with its consistency check against the pair reduction.
pub fn pairwise_analysis(st: &CollectiveState, tol: f64) -> Result<PairwiseAnalysis> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    check_qubits(st.n, 2)?;
    let moments = collective_moments(st)?;
    let pair = reduced_from_moments(&moments)?;
    let s = pair.s();
    let c = pair.t() - s * s.transpose();
    let n = st.n as f64;
    let lhs = moments.pairwise_matrix();
    let residual = (lhs - (Mat3::identity() + c * (n - 1.0)) * (n / 4.0)).norm();
    if residual > CONSISTENCY_TOLERANCE {
        return Err(Error::ConsistencyFailure(residual));
    }
    let lambda_min = min_eigenvalue(&RealSymMatrix::from_mat3(&lhs)?)?;
    let threshold = moments.threshold();
    Ok(PairwiseAnalysis {
        verdict: Verdict::from_margin(lambda_min - threshold, tol),
        lambda_min,
        threshold,
        residual,
    })
}

/// Entangled iff `λ_min(V + SSᵀ/N) < N/4 − tol`; the decisive value is
/// `λ_min − N/4`.
pub fn pairwise_test(st: &CollectiveState, tol: f64) -> Result<Verdict> {
    Ok(pairwise_analysis(st, tol)?.verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KorbiczCheck {
    /// `4⟨ΔJ_n²⟩/N`.
    pub lhs: f64,
    /// `1 − 4⟨J_n⟩²/N²`.
    pub rhs: f64,
    pub holds: bool,
}

pub fn korbicz_inequality(st: &CollectiveState, direction: &Vec3) -> Result<KorbiczCheck> {
    if (direction.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!("direction has length {}", direction.norm())));
    }
    Ok(korbicz_from_moments(&collective_moments(st)?, direction))
}

pub fn korbicz_from_moments(m: &CollectiveMoments, direction: &Vec3) -> KorbiczCheck {
    let n = m.n as f64;
    let variance = (direction.transpose() * m.vn * direction)[(0, 0)];
    let mean = direction.dot(&m.s);
    let lhs = 4.0 * variance / n;
    let rhs = 1.0 - 4.0 * mean * mean / (n * n);
    KorbiczCheck {
        lhs,
        rhs,
        holds: lhs < rhs,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KorbiczWitness {
    /// Eigenvector of the smallest eigenvalue of `V + SSᵀ/N`.
    pub direction: Vec3,
    /// `λ_min − N/4`; the inequality holds along `direction` iff negative.
    pub margin: f64,
}

/// The most violating direction, read off the eigendecomposition.
pub fn korbicz_witness_search(st: &CollectiveState) -> Result<KorbiczWitness> {
    witness_from_moments(&collective_moments(st)?)
}

pub fn witness_from_moments(m: &CollectiveMoments) -> Result<KorbiczWitness> {
    let e = eig_real_symmetric(&RealSymMatrix::from_mat3(&m.pairwise_matrix())?)?;
    let v = e.vectors.column(0);
    Ok(KorbiczWitness {
        direction: Vec3::new(v[0], v[1], v[2]).normalize(),
        margin: e.min() - m.threshold(),
    })
}

/// `count` nearly uniform unit vectors on the sphere.
pub fn fibonacci_sphere(count: usize) -> Vec<Vec3> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
            let r = (1.0 - z * z).sqrt();
            let phi = golden * i as f64;
            Vec3::new(r * phi.cos(), r * phi.sin(), z)
        })
        .collect()
}

/// Minimum of `nᵀ(V + SSᵀ/N)n` over a direction grid, with its minimizer.
pub fn grid_minimum(m: &CollectiveMoments, grid: &[Vec3]) -> (Vec3, f64) {
    let q = m.pairwise_matrix();
    grid.iter()
        .map(|d| (*d, (d.transpose() * q * d)[(0, 0)]))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("grid is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{su2_from_axis_angle, su2_to_so3};
    use crate::linalg::Spectral;
    use approx::assert_abs_diff_eq;

    fn assert_mat3(a: &Mat3, b: &Mat3, eps: f64) {
        assert!((a - b).amax() <= eps, "{a} vs {b}");
    }

    #[test]
    fn spin_half_operators_are_half_paulis() {
        let ops = angular_momentum_ops(1).unwrap();
        for (i, op) in ops.iter().enumerate() {
            let half = crate::qstate::pauli(i) * c64(0.5, 0.0);
            for r in 0..2 {
                for c in 0..2 {
                    assert!((op.get(r, c) - half[(r, c)]).norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn spin_one_jz_spectrum() {
        let ops = angular_momentum_ops(2).unwrap();
        let ev = ops[2].eigenvalues().unwrap();
        assert_eq!(ev, vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn casimir_and_commutator() {
        for n in [1, 2, 5, 16, 64] {
            let [jx, jy, jz] = angular_momentum_ops(n).unwrap();
            let (x, y, z) = (jx.matrix(), jy.matrix(), jz.matrix());
            let j = n as f64 / 2.0;
            let casimir = x * x + y * y + z * z - DMatrix::<C64>::identity(n + 1, n + 1) * c64(j * (j + 1.0), 0.0);
            assert!(casimir.iter().all(|e| e.norm() < 1e-12 * j.max(1.0).powi(2)));
            let comm = x * y - y * x - z * c64(0.0, 1.0);
            assert!(comm.iter().all(|e| e.norm() < 1e-12 * j.max(1.0)));
        }
        assert!(angular_momentum_ops(0).is_err());
        assert!(angular_momentum_ops(MAX_QUBITS + 1).is_err());
    }

    #[test]
    fn coherent_moments() {
        let n = 6;
        let m = collective_moments(&CollectiveState::spin_coherent(n, 0.0, 0.0).unwrap()).unwrap();
        assert!((m.s - Vec3::new(0.0, 0.0, 3.0)).amax() < 1e-14);
        assert_mat3(&m.vn, &Mat3::from_diagonal(&Vec3::new(1.5, 1.5, 0.0)), 1e-14);
    }

    #[test]
    fn coherent_state_points_along_its_axis() {
        let (theta, phi) = (1.1, -0.7);
        let m = collective_moments(&CollectiveState::spin_coherent(8, theta, phi).unwrap()).unwrap();
        let axis = Vec3::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos());
        assert!((m.s - axis * 4.0).amax() < 1e-13);
    }

    #[test]
    fn dicke_and_ghz_moments() {
        let m = collective_moments(&CollectiveState::dicke(2, 1).unwrap()).unwrap();
        assert!(m.s.amax() < 1e-15);
        assert_mat3(&m.vn, &Mat3::from_diagonal(&Vec3::new(1.0, 1.0, 0.0)), 1e-14);

        let m = collective_moments(&CollectiveState::ghz(4).unwrap()).unwrap();
        assert!(m.s.amax() < 1e-15);
        assert_abs_diff_eq!(m.vn[(2, 2)], 4.0, epsilon = 1e-13);
    }

    #[test]
    fn pair_reductions() {
        let p = reduced_two_qubit(&CollectiveState::dicke(2, 1).unwrap()).unwrap();
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::new(1.0, 1.0, -1.0)), 1e-14);

        let p = reduced_two_qubit(&CollectiveState::ghz(4).unwrap()).unwrap();
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::z()), 1e-14);
        assert!(p.s().amax() < 1e-15);

        let p = reduced_two_qubit(&CollectiveState::dicke(4, 2).unwrap()).unwrap();
        assert_mat3(&p.t(), &Mat3::from_diagonal(&Vec3::new(2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0)), 1e-14);

        assert!(reduced_two_qubit(&CollectiveState::spin_coherent(1, 0.3, 0.2).unwrap()).is_err());
    }

    #[test]
    fn pairwise_examples() {
        let tol = 1e-9;
        let a = pairwise_analysis(&CollectiveState::spin_coherent(5, 0.4, 2.0).unwrap(), tol).unwrap();
        assert_abs_diff_eq!(a.lambda_min, 1.25, epsilon = 1e-12);
        assert!(!a.verdict.is_entangled());

        let a = pairwise_analysis(&CollectiveState::dicke(2, 1).unwrap(), tol).unwrap();
        assert_abs_diff_eq!(a.lambda_min, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(a.verdict.decisive_value, -0.5, epsilon = 1e-14);
        assert!(a.verdict.is_entangled());

        let a = pairwise_analysis(&CollectiveState::dicke(4, 2).unwrap(), tol).unwrap();
        assert_abs_diff_eq!(a.lambda_min, 0.0, epsilon = 1e-12);
        assert_eq!(a.threshold, 1.0);
        assert!(a.verdict.is_entangled());
    }

    #[test]
    fn korbicz_examples() {
        let d = CollectiveState::dicke(2, 1).unwrap();
        let k = korbicz_inequality(&d, &Vec3::z()).unwrap();
        assert_abs_diff_eq!(k.lhs, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(k.rhs, 1.0, epsilon = 1e-15);
        assert!(k.holds);

        let w = korbicz_witness_search(&d).unwrap();
        assert_abs_diff_eq!(w.margin, -0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(w.direction[2].abs(), 1.0, epsilon = 1e-12);

        let c = CollectiveState::spin_coherent(10, 0.0, 0.0).unwrap();
        let w = korbicz_witness_search(&c).unwrap();
        assert_abs_diff_eq!(w.margin, 0.0, epsilon = 1e-12);
        for dir in fibonacci_sphere(64) {
            let k = korbicz_inequality(&c, &dir).unwrap();
            assert!(k.lhs - k.rhs > -1e-12);
        }
        assert!(korbicz_inequality(&c, &(Vec3::z() * 0.5)).is_err());
    }

    #[test]
    fn twisting_squeezes() {
        let st = CollectiveState::one_axis_twisted(10, 0.05, std::f64::consts::FRAC_PI_2, 0.0).unwrap();
        let w = korbicz_witness_search(&st).unwrap();
        assert!(w.margin < -1e-3, "margin {}", w.margin);
        assert!(pairwise_test(&st, 1e-9).unwrap().is_entangled());
    }

    #[test]
    fn two_qubit_embedding_round_trip() {
        let d = CollectiveState::dicke(2, 1).unwrap();
        let back = CollectiveState::from_two_qubit(&d.to_two_qubit().unwrap()).unwrap();
        assert!((back.rho().matrix() - d.rho().matrix()).norm() < 1e-15);
        assert!(CollectiveState::dicke(3, 1).unwrap().to_two_qubit().is_err());
    }

    #[test]
    fn rotation_about_z_preserves_dicke() {
        let d = CollectiveState::dicke(4, 1).unwrap();
        let r = d.rotated(&Vec3::z(), 0.8).unwrap();
        assert!((r.rho().matrix() - d.rho().matrix()).norm() < 1e-12);
        let o = su2_to_so3(&su2_from_axis_angle(&Vec3::x(), 0.8)).unwrap();
        let before = collective_moments(&CollectiveState::spin_coherent(4, 0.0, 0.0).unwrap()).unwrap();
        let after = collective_moments(&CollectiveState::spin_coherent(4, 0.0, 0.0).unwrap().rotated(&Vec3::x(), 0.8).unwrap()).unwrap();
        assert!((after.s - o * before.s).amax() < 1e-12);
        assert_mat3(&after.vn, &(o * before.vn * o.transpose()), 1e-12);
    }

    #[test]
    fn constructor_errors() {
        assert!(CollectiveState::dicke(3, 4).is_err());
        assert!(CollectiveState::ghz(MAX_QUBITS + 1).is_err());
        let a = CollectiveState::dicke(2, 0).unwrap();
        let b = CollectiveState::dicke(3, 0).unwrap();
        assert!(CollectiveState::mix(&[(0.5, &a), (0.5, &b)]).is_err());
        assert!(CollectiveState::mix(&[]).is_err());
    }

    #[test]
    fn fibonacci_points_are_unit() {
        let g = fibonacci_sphere(GRID_DIRECTIONS);
        assert_eq!(g.len(), GRID_DIRECTIONS);
        assert!(g.iter().all(|d| (d.norm() - 1.0).abs() < 1e-14));
    }
}
