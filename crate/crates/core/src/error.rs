use thiserror::Error;

/// Errors raised by state construction, decompositions and the entanglement tests.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square or has the wrong size: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("matrix asymmetry {0:e} exceeds the symmetrization threshold")]
    Asymmetric(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("Pauli expectation {name} has imaginary part {residue:e}")]
    ImaginaryResidue { name: String, residue: f64 },

    #[error("state is not positive semidefinite (minimum eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("trace is {0} instead of 1")]
    Trace(f64),

    #[error("state violates exchange symmetry ({constraint} residual {residual:e})")]
    NotSymmetric {
        constraint: &'static str,
        residual: f64,
    },

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("matrix is not in SU(2) (unitarity residual {unitarity:e}, |det - 1| = {det:e})")]
    NotSpecialUnitary { unitarity: f64, det: f64 },

    #[error("quadratic-form routes disagree: {from_matrix} vs {from_mixture}")]
    QuadraticFormMismatch {
        from_matrix: f64,
        from_mixture: f64,
    },

    #[error("correlation block has three negative eigenvalues {0:?}")]
    ThreeNegative([f64; 3]),

    #[error("collective moments disagree with the pair reduction (residual {0:e})")]
    ConsistencyFailure(f64),

    #[error("matrix is not symplectic (|det - 1| = {0:e})")]
    NotSymplectic(f64),

    #[error("covariance violates the uncertainty relation (minimum eigenvalue {0:e})")]
    Unphysical(f64),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
