//! Entanglement of exchange-symmetric qubit states through the covariance
//! matrix `C = T − ssᵀ`, with partial-transpose, local-invariant, collective
//! spin and Gaussian cross-checks.
//!
//! ```
//! use symcov::covariance::{c_negativity_test, DEFAULT_TOLERANCE};
//! use symcov::qstate::{pauli_decompose, schmidt_pure, to_symmetric, SYMMETRY_TOLERANCE};
//!
//! let bell = schmidt_pure(std::f64::consts::FRAC_1_SQRT_2)?;
//! let params = to_symmetric(&pauli_decompose(&bell)?, SYMMETRY_TOLERANCE)?;
//! let verdict = c_negativity_test(&params, DEFAULT_TOLERANCE)?;
//! assert!(verdict.is_entangled());
//! assert!((verdict.decisive_value + 1.0).abs() < 1e-12);
//! # Ok::<(), symcov::Error>(())
//! ```

mod error;

pub mod collective;
pub mod covariance;
pub mod cv;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod qstate;

pub use error::{Error, Result};
pub use nalgebra;
pub use covariance::{Outcome, Verdict};
pub use linalg::{HermitianMatrix, Mat3, RealSymMatrix, Vec3, C64};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/states.md")]
    mod states {}
    #[doc = include_str!("../../../book/src/covariance.md")]
    mod covariance {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/collective.md")]
    mod collective {}
    #[doc = include_str!("../../../book/src/cv.md")]
    mod cv {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/schema.md")]
    mod schema {}
}
