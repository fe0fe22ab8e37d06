//! The two-qubit covariance matrix and the `C = T − ssᵀ` entanglement test.
//!
//! For qubit observables `σ_{1i}, σ_{2j}` the symmetrized covariance has
//! 3×3 blocks
//!
//! ```text
//! A = I − s₁s₁ᵀ,   B = I − s₂s₂ᵀ,   C = T − s₁s₂ᵀ.
//! ```
//!
//! For exchange-symmetric states `C = T − ssᵀ` is real symmetric, it is
//! positive semidefinite for every separable state, and it has a negative
//! eigenvalue exactly when the partial transpose does.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{min_eigenvalue, Mat3, RealSymMatrix, Vec3};
use crate::qstate::{BlochParams, MixtureSpec, SymmetricParams};

/// Shared tolerance for the C-test, the PPT oracle and the collective test.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Entangled,
    SeparableConsistent,
    Indeterminate,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Entangled => "entangled",
            Outcome::SeparableConsistent => "separable_consistent",
            Outcome::Indeterminate => "indeterminate",
        }
    }
}

/// Outcome of a single entanglement test together with the scalar that
/// decided it.
///
/// A test reports `Entangled` when its decisive value lies below
/// `−tolerance` and `SeparableConsistent` otherwise, so states sitting on
/// the separable boundary (a zero eigenvalue) are reported as consistent
/// with separability. `Indeterminate` is produced only by [`Verdict::combine`]
/// when independent tests disagree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub decisive_value: f64,
    pub tolerance: f64,
}

impl Verdict {
    pub fn from_margin(decisive_value: f64, tolerance: f64) -> Self {
        let outcome = if decisive_value < -tolerance {
            Outcome::Entangled
        } else {
            Outcome::SeparableConsistent
        };
        Self {
            outcome,
            decisive_value,
            tolerance,
        }
    }

    pub fn is_entangled(&self) -> bool {
        self.outcome == Outcome::Entangled
    }

    /// True when `|decisive_value|` exceeds `band`, i.e. the sign is trustworthy.
    pub fn is_clear(&self, band: f64) -> bool {
        self.decisive_value.abs() > band
    }

    /// Merges verdicts from independent tests of the same state. Agreement
    /// keeps the outcome and the smallest decisive value; any disagreement
    /// yields `Indeterminate`.
    pub fn combine(verdicts: &[Verdict]) -> Verdict {
        let first = verdicts.first().expect("combine needs at least one verdict");
        let decisive = verdicts
            .iter()
            .map(|v| v.decisive_value)
            .fold(f64::INFINITY, f64::min);
        let agree = verdicts.iter().all(|v| v.outcome == first.outcome);
        Verdict {
            outcome: if agree {
                first.outcome
            } else {
                Outcome::Indeterminate
            },
            decisive_value: decisive,
            tolerance: first.tolerance,
        }
    }
}

/// The three 3×3 blocks of the 6×6 covariance matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceBlocks {
    pub a: Mat3,
    pub b: Mat3,
    pub c: Mat3,
}

pub fn covariance_blocks(p: &BlochParams) -> CovarianceBlocks {
    let (s1, s2) = (p.s1(), p.s2());
    CovarianceBlocks {
        a: Mat3::identity() - s1 * s1.transpose(),
        b: Mat3::identity() - s2 * s2.transpose(),
        c: p.t() - s1 * s2.transpose(),
    }
}

/// `C = T − ssᵀ` for a symmetric state.
pub fn c_matrix(p: &SymmetricParams) -> RealSymMatrix {
    let s = p.s();
    RealSymMatrix::from_mat3(&(p.t() - s * s.transpose())).expect("T - ss^T is symmetric")
}

/// `C = T − s₁s₂ᵀ` for a swap-invariant state (`s₁ = s₂`, `T = Tᵀ` within
/// `tol`) that need not lie in the triplet subspace, e.g. `Σ p_w ρ_w ⊗ ρ_w`
/// with mixed `ρ_w`.
pub fn swap_invariant_c(p: &BlochParams, tol: f64) -> Result<RealSymMatrix> {
    let checks = [
        ("s1 = s2", (p.s1() - p.s2()).norm()),
        ("T = T^T", (p.t() - p.t().transpose()).norm()),
    ];
    for (constraint, residual) in checks {
        if residual > tol {
            return Err(Error::NotSymmetric { constraint, residual });
        }
    }
    let s = (p.s1() + p.s2()) * 0.5;
    let t = (p.t() + p.t().transpose()) * 0.5;
    RealSymMatrix::from_mat3(&(t - s * s.transpose()))
}

/// Entangled iff `λ_min(C) < −tol`.
pub fn c_negativity_test(p: &SymmetricParams, tol: f64) -> Result<Verdict> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    Ok(Verdict::from_margin(min_eigenvalue(&c_matrix(p))?, tol))
}

/// `nᵀ(T − ssᵀ)n` for a separable mixture, evaluated both from the C matrix
/// and as the variance `Σp_w(s_w·n)² − (Σp_w s_w·n)²`.
pub fn lemma_quadratic_form(m: &MixtureSpec, n: &Vec3) -> Result<f64> {
    if (n.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!("direction has length {}", n.norm())));
    }
    let s = m.mean();
    let c = m.second_moment() - s * s.transpose();
    let from_matrix = (n.transpose() * c * n)[(0, 0)];

    let mean_proj: f64 = m.terms().map(|(p, v)| p * v.dot(n)).sum();
    let second: f64 = m.terms().map(|(p, v)| p * v.dot(n).powi(2)).sum();
    let from_mixture = second - mean_proj * mean_proj;

    if (from_matrix - from_mixture).abs() > 1e-12 {
        return Err(Error::QuadraticFormMismatch {
            from_matrix,
            from_mixture,
        });
    }
    Ok(from_matrix)
}
