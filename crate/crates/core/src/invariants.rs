//! Identical local unitaries `U ⊗ U` and the invariants of `C` they leave
//! unchanged.
//!
//! A local `U ∈ SU(2)` acts on Bloch coordinates through its adjoint
//! rotation `O_ij = ½ tr(σ_i U σ_j U†)`: `s → O s`, `T → O T Oᵀ`. Under that
//! action `C` transforms by similarity, so its spectrum and every symmetric
//! function of it are invariant:
//!
//! | invariant | definition          | in eigenvalues            |
//! |-----------|---------------------|---------------------------|
//! | `I1`      | `det C`             | `c₁c₂c₃`                  |
//! | `I2`      | `tr C`              | `c₁+c₂+c₃`                |
//! | `I3`      | `tr C²`             | `c₁²+c₂²+c₃²`             |
//! | `I4`      | `(I2² − I3)/2`      | `c₁c₂+c₂c₃+c₁c₃`          |

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c64, eig_real_symmetric, Mat3, RealSymMatrix, Vec3, C64};
use crate::qstate::{pauli, SymmetricParams};

/// `exp(−iθ n·σ/2)` for a unit axis `n`.
pub fn su2_from_axis_angle(axis: &Vec3, angle: f64) -> Matrix2<C64> {
    let n = axis.normalize();
    let (sin, cos) = (angle / 2.0).sin_cos();
    let mut u = Matrix2::identity() * c64(cos, 0.0);
    for i in 0..3 {
        u -= pauli(i) * c64(0.0, sin * n[i]);
    }
    u
}

/// The SO(3) rotation `O_ij = ½ tr(σ_i U σ_j U†)` of a special unitary `U`.
pub fn su2_to_so3(u: &Matrix2<C64>) -> Result<Mat3> {
    let unitarity = (u.adjoint() * u - Matrix2::identity()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let det = (u.determinant() - c64(1.0, 0.0)).norm();
    if unitarity > 1e-10 || det > 1e-10 {
        return Err(Error::NotSpecialUnitary { unitarity, det });
    }
    let ud = u.adjoint();
    Ok(Mat3::from_fn(|i, j| 0.5 * (pauli(i) * u * pauli(j) * ud).trace().re))
}

/// `(s, T) → (O s, O T Oᵀ)` for `ρ → (U⊗U) ρ (U⊗U)†`.
pub fn apply_identical_local_unitary(p: &SymmetricParams, u: &Matrix2<C64>) -> Result<SymmetricParams> {
    let o = su2_to_so3(u)?;
    SymmetricParams::new(o * p.s(), o * p.t() * o.transpose())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocalInvariants {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
}

impl LocalInvariants {
    /// `min(I1, I4)`: negative exactly when [`invariant_witness`] fires.
    pub fn witness_margin(&self) -> f64 {
        self.i1.min(self.i4)
    }
}

pub fn local_invariants(c: &RealSymMatrix) -> Result<LocalInvariants> {
    if c.dim() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            got: c.dim(),
        });
    }
    let m = c.to_mat3();
    let i2 = m.trace();
    let i3 = (m * m).trace();
    Ok(LocalInvariants {
        i1: m.determinant(),
        i2,
        i3,
        i4: (i2 * i2 - i3) / 2.0,
    })
}

/// `I1 < 0 ∨ I4 < 0`, a sufficient condition for entanglement of a
/// symmetric two-qubit state.
pub fn invariant_witness(inv: &LocalInvariants) -> bool {
    inv.i1 < 0.0 || inv.i4 < 0.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// One zero, one negative, one positive eigenvalue.
    CaseI,
    /// Two negative eigenvalues.
    CaseII,
    /// One negative eigenvalue, the other two positive.
    CaseIII,
    NotEntangled,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::CaseI => "case_i",
            Case::CaseII => "case_ii",
            Case::CaseIII => "case_iii",
            Case::NotEntangled => "not_entangled",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseLabel {
    pub label: Case,
    /// Eigenvalues of `C`, ascending.
    pub eigenvalues: [f64; 3],
}

impl CaseLabel {
    /// Whether the invariant sign implied for this case holds:
    /// `I4 < 0` for cases I and II, `I1 < 0` for case III.
    pub fn implication_holds(&self, inv: &LocalInvariants) -> bool {
        match self.label {
            Case::CaseI | Case::CaseII => inv.i4 < 0.0,
            Case::CaseIII => inv.i1 < 0.0,
            Case::NotEntangled => true,
        }
    }
}

/// Labels the eigenvalue sign pattern of `C` with `|c| <= tol` counted as zero.
pub fn classify_case(c: &RealSymMatrix, tol: f64) -> Result<CaseLabel> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if c.dim() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            got: c.dim(),
        });
    }
    let ev = eig_real_symmetric(c)?.values;
    let eigenvalues = [ev[0], ev[1], ev[2]];
    let negative = ev.iter().filter(|&&x| x < -tol).count();
    let zero = ev.iter().filter(|&&x| x.abs() <= tol).count();
    let label = match (negative, zero) {
        (3, _) => return Err(Error::ThreeNegative(eigenvalues)),
        (0, _) => Case::NotEntangled,
        (2, _) => Case::CaseII,
        (1, 0) => Case::CaseIII,
        (1, 1) => Case::CaseI,
        _ => {
            return Err(Error::Invalid(format!(
                "eigenvalue pattern {eigenvalues:?} has one negative and two zero eigenvalues"
            )))
        }
    };
    Ok(CaseLabel { label, eigenvalues })
}
