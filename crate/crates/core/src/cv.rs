//! Two-mode Gaussian reference: covariance blocks, local symplectic maps,
//! the four local invariants and the Simon separability inequality.
//!
//! Quadratures are ordered `(q₁, p₁, q₂, p₂)` with `[q, p] = i`, so the vacuum
//! covariance is `½I` and a physical `V` satisfies `V + (i/2)Ω ≥ 0` with
//! `Ω = J ⊕ J`, `J = [[0, 1], [−1, 0]]`.

use nalgebra::{DMatrix, Matrix2, Matrix4};
use rand::Rng;
use rand_distr::{Distribution, Uniform};
use serde::{Deserialize, Serialize};

use crate::covariance::Verdict;
use crate::error::{Error, Result};
use crate::linalg::{c64, min_eigenvalue, HermitianMatrix, RealSymMatrix};

/// Tolerance on `λ_min(V + (i/2)Ω)` for a covariance to count as physical.
pub const PHYSICALITY_TOLERANCE: f64 = 1e-10;
/// Slack allowed by [`simon_criterion`] before it rejects a covariance.
pub const UNPHYSICAL_THRESHOLD: f64 = 1e-8;

pub type Mat2 = Matrix2<f64>;
pub type Mat4 = Matrix4<f64>;

fn j2() -> Mat2 {
    Mat2::new(0.0, 1.0, -1.0, 0.0)
}

/// `Ω = J ⊕ J`.
pub fn omega() -> Mat4 {
    let mut o = Mat4::zeros();
    o.fixed_view_mut::<2, 2>(0, 0).copy_from(&j2());
    o.fixed_view_mut::<2, 2>(2, 2).copy_from(&j2());
    o
}

fn block_diag(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut m = Mat4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(b);
    m
}

/// `λ_min(V + (i/2)Ω)`.
fn uncertainty_min(v: &Mat4) -> Result<f64> {
    let o = omega();
    let h = DMatrix::from_fn(4, 4, |r, c| c64(v[(r, c)], 0.5 * o[(r, c)]));
    min_eigenvalue(&HermitianMatrix::new(h)?)
}

/// A physical two-mode covariance matrix `[[A, C], [Cᵀ, B]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CvCovariance {
    v: Mat4,
}

impl CvCovariance {
    pub fn new(v: Mat4) -> Result<Self> {
        let sym = RealSymMatrix::new(DMatrix::from_iterator(4, 4, v.iter().copied()))?;
        let v = Mat4::from_iterator(sym.matrix().iter().copied());
        let lmin = uncertainty_min(&v)?;
        if lmin < -PHYSICALITY_TOLERANCE {
            return Err(Error::Unphysical(lmin));
        }
        Ok(Self { v })
    }

    pub fn from_blocks(a: &Mat2, b: &Mat2, c: &Mat2) -> Result<Self> {
        let mut v = block_diag(a, b);
        v.fixed_view_mut::<2, 2>(0, 2).copy_from(c);
        v.fixed_view_mut::<2, 2>(2, 0).copy_from(&c.transpose());
        Self::new(v)
    }

    pub fn vacuum() -> Self {
        Self { v: Mat4::identity() * 0.5 }
    }

    /// Two-mode squeezed vacuum with squeezing `r`.
    pub fn two_mode_squeezed(r: f64) -> Self {
        let (ch, sh) = ((2.0 * r).cosh() / 2.0, (2.0 * r).sinh() / 2.0);
        let c = Mat2::new(sh, 0.0, 0.0, -sh);
        Self::from_blocks(&(Mat2::identity() * ch), &(Mat2::identity() * ch), &c).expect("squeezed vacuum is physical")
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.v
    }

    pub fn a(&self) -> Mat2 {
        self.v.fixed_view::<2, 2>(0, 0).into_owned()
    }

    pub fn b(&self) -> Mat2 {
        self.v.fixed_view::<2, 2>(2, 2).into_owned()
    }

    pub fn c(&self) -> Mat2 {
        self.v.fixed_view::<2, 2>(0, 2).into_owned()
    }

    /// `λ_min(V + (i/2)Ω)`.
    pub fn uncertainty_margin(&self) -> Result<f64> {
        uncertainty_min(&self.v)
    }
}

/// How `I4` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum I4Form {
    /// `Tr(A J C J B J Cᵀ J)`.
    #[default]
    Standard,
    /// `Tr(A J C B Cᵀ J)`, kept for comparison. It does not reproduce the
    /// violation of two-mode squeezed states.
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CvInvariants {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub i4: f64,
}

impl CvInvariants {
    /// `det A < 1/4` or `det B < 1/4`. Reported as a warning only.
    pub fn below_vacuum_bound(&self) -> bool {
        self.i1 < 0.25 - 1e-12 || self.i2 < 0.25 - 1e-12
    }

    /// `I1·I2 + (1/4 − |I3|)² − I4 − (I1 + I2)/4`; negative values violate
    /// the separability inequality.
    pub fn simon_margin(&self) -> f64 {
        self.i1 * self.i2 + (0.25 - self.i3.abs()).powi(2) - self.i4 - (self.i1 + self.i2) / 4.0
    }
}

pub fn cv_invariants(v: &CvCovariance) -> CvInvariants {
    cv_invariants_with(v, I4Form::Standard)
}

pub fn cv_invariants_with(v: &CvCovariance, form: I4Form) -> CvInvariants {
    let (a, b, c, j) = (v.a(), v.b(), v.c(), j2());
    let i4 = match form {
        I4Form::Standard => (a * j * c * j * b * j * c.transpose() * j).trace(),
        I4Form::Printed => (a * j * c * b * c.transpose() * j).trace(),
    };
    CvInvariants {
        i1: a.determinant(),
        i2: b.determinant(),
        i3: c.determinant(),
        i4,
    }
}

pub fn simon_criterion(v: &CvCovariance, tol: f64) -> Result<Verdict> {
    simon_criterion_with(v, I4Form::Standard, tol)
}

pub fn simon_criterion_with(v: &CvCovariance, form: I4Form, tol: f64) -> Result<Verdict> {
    let lmin = v.uncertainty_margin()?;
    if lmin < -UNPHYSICAL_THRESHOLD {
        return Err(Error::Unphysical(lmin));
    }
    Ok(Verdict::from_margin(cv_invariants_with(v, form).simon_margin(), tol))
}

/// `Λ = diag(1, 1, 1, −1)`, the action of partial transposition on mode 2.
pub fn mirror() -> Mat4 {
    Mat4::from_diagonal(&nalgebra::Vector4::new(1.0, 1.0, 1.0, -1.0))
}

/// Entangled iff `λ_min(ΛVΛ + (i/2)Ω) < −tol`.
pub fn gaussian_ppt_oracle(v: &CvCovariance, tol: f64) -> Result<Verdict> {
    let l = mirror();
    Ok(Verdict::from_margin(uncertainty_min(&(l * v.v * l))?, tol))
}

fn check_symplectic(s: &Mat2) -> Result<()> {
    let det = (s.determinant() - 1.0).abs();
    if det > 1e-12 {
        return Err(Error::NotSymplectic(det));
    }
    Ok(())
}

/// `A → S₁AS₁ᵀ, B → S₂BS₂ᵀ, C → S₁CS₂ᵀ`.
pub fn apply_local_symplectic(v: &CvCovariance, s1: &Mat2, s2: &Mat2) -> Result<CvCovariance> {
    check_symplectic(s1)?;
    check_symplectic(s2)?;
    let s = block_diag(s1, s2);
    CvCovariance::new(s * v.v * s.transpose())
}

pub fn rotation(theta: f64) -> Mat2 {
    let (sin, cos) = theta.sin_cos();
    Mat2::new(cos, -sin, sin, cos)
}

/// `diag(eˢ, e⁻ˢ)`.
pub fn squeezer(s: f64) -> Mat2 {
    Mat2::new(s.exp(), 0.0, 0.0, (-s).exp())
}

/// Rotation · squeezer · rotation with random angles and `|s| ≤ max_squeeze`.
pub fn random_local_symplectic<R: Rng + ?Sized>(rng: &mut R, max_squeeze: f64) -> Mat2 {
    let angle = Uniform::new(0.0, std::f64::consts::TAU).expect("valid range");
    let sq = Uniform::new_inclusive(-max_squeeze, max_squeeze).expect("valid range");
    rotation(angle.sample(rng)) * squeezer(sq.sample(rng)) * rotation(angle.sample(rng))
}

fn beam_splitter(theta: f64) -> Mat4 {
    let (s, c) = theta.sin_cos();
    Mat4::new(
        c, 0.0, s, 0.0, //
        0.0, c, 0.0, s, //
        -s, 0.0, c, 0.0, //
        0.0, -s, 0.0, c,
    )
}

fn two_mode_squeezer(r: f64) -> Mat4 {
    let (ch, sh) = (r.cosh(), r.sinh());
    Mat4::new(
        ch, 0.0, sh, 0.0, //
        0.0, ch, 0.0, -sh, //
        sh, 0.0, ch, 0.0, //
        0.0, -sh, 0.0, ch,
    )
}

/// A random physical covariance `S·diag(ν₁, ν₁, ν₂, ν₂)·Sᵀ` with `ν ≥ ½` and
/// `S` a product of local, beam-splitter and two-mode-squeezing symplectics.
/// Covers both separable and entangled Gaussian states.
pub fn random_physical_covariance<R: Rng + ?Sized>(rng: &mut R) -> CvCovariance {
    let nu = Uniform::new(0.5, 2.0).expect("valid range");
    let angle = Uniform::new(0.0, std::f64::consts::TAU).expect("valid range");
    let squeeze = Uniform::new(0.0, 1.2).expect("valid range");
    let (n1, n2) = (nu.sample(rng), nu.sample(rng));
    let thermal = Mat4::from_diagonal(&nalgebra::Vector4::new(n1, n1, n2, n2));
    let inner = block_diag(&random_local_symplectic(rng, 0.8), &random_local_symplectic(rng, 0.8));
    let outer = block_diag(&random_local_symplectic(rng, 0.8), &random_local_symplectic(rng, 0.8));
    let s = outer * two_mode_squeezer(squeeze.sample(rng)) * beam_splitter(angle.sample(rng)) * inner;
    CvCovariance::new(s * thermal * s.transpose()).expect("symplectic image of a thermal state is physical")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn vacuum_invariants() {
        let inv = cv_invariants(&CvCovariance::vacuum());
        assert_eq!(inv, CvInvariants { i1: 0.25, i2: 0.25, i3: 0.0, i4: 0.0 });
        assert!(!inv.below_vacuum_bound());
        let v = simon_criterion(&CvCovariance::vacuum(), 1e-9).unwrap();
        assert!(!v.is_entangled());
        assert_abs_diff_eq!(v.decisive_value, 0.0, epsilon = 1e-15);
        assert!(!gaussian_ppt_oracle(&CvCovariance::vacuum(), 1e-9).unwrap().is_entangled());
    }

    #[test]
    fn squeezed_margin() {
        for r in [0.1, 0.5, 1.0] {
            let v = CvCovariance::two_mode_squeezed(r);
            let inv = cv_invariants(&v);
            assert_abs_diff_eq!(inv.i3, -(2.0 * r).sinh().powi(2) / 4.0, epsilon = 1e-12);
            let verdict = simon_criterion(&v, 1e-9).unwrap();
            assert!(verdict.is_entangled());
            assert_abs_diff_eq!(verdict.decisive_value, -(2.0 * r).sinh().powi(2) / 4.0, epsilon = 1e-9);
            assert!(gaussian_ppt_oracle(&v, 1e-9).unwrap().is_entangled());
            // the printed variant misses the violation
            assert!(!simon_criterion_with(&v, I4Form::Printed, 1e-9).unwrap().is_entangled());
        }
    }

    #[test]
    fn local_maps() {
        let v = CvCovariance::two_mode_squeezed(0.3);
        assert_eq!(apply_local_symplectic(&v, &Mat2::identity(), &Mat2::identity()).unwrap(), v);
        let s = squeezer(0.4);
        let w = apply_local_symplectic(&CvCovariance::vacuum(), &s, &Mat2::identity()).unwrap();
        assert!((w.a() - Mat2::new(0.5 * 0.8f64.exp(), 0.0, 0.0, 0.5 * (-0.8f64).exp())).amax() < 1e-15);
        assert!(matches!(
            apply_local_symplectic(&v, &(Mat2::identity() * 2.0), &Mat2::identity()),
            Err(Error::NotSymplectic(_))
        ));
    }

    #[test]
    fn invariants_survive_local_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v = random_physical_covariance(&mut rng);
            let w = apply_local_symplectic(&v, &random_local_symplectic(&mut rng, 1.0), &random_local_symplectic(&mut rng, 1.0)).unwrap();
            let (a, b) = (cv_invariants(&v), cv_invariants(&w));
            for (x, y) in [(a.i1, b.i1), (a.i2, b.i2), (a.i3, b.i3), (a.i4, b.i4)] {
                assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn rejects_unphysical() {
        assert!(matches!(CvCovariance::new(Mat4::identity() * 0.4), Err(Error::Unphysical(_))));
    }

    #[test]
    fn mirror_is_involution_and_scaled_identity_is_separable() {
        assert_eq!(mirror() * mirror(), Mat4::identity());
        for lambda in [0.5, 0.7, 3.0] {
            let v = CvCovariance::new(Mat4::identity() * lambda).unwrap();
            assert!(!gaussian_ppt_oracle(&v, 1e-9).unwrap().is_entangled());
        }
    }

    #[test]
    fn nonnegative_i3_is_separable() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen = 0;
        for _ in 0..500 {
            let v = random_physical_covariance(&mut rng);
            if cv_invariants(&v).i3 >= 0.0 {
                seen += 1;
                assert!(!simon_criterion(&v, 1e-9).unwrap().is_entangled());
            }
        }
        assert!(seen > 0);
    }
}
