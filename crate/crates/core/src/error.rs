use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operator bases differ")]
    BasisMismatch,

    #[error("projection denominator is zero")]
    ZeroDenominator,

    #[error("matrix is not Hermitian (defect {0:e})")]
    NotHermitian(f64),

    #[error("Jacobi sweeps did not converge (off-diagonal mass {0:e})")]
    NoConvergence(f64),

    #[error("excitation sector u = {0} contains no basis states")]
    EmptySector(String),

    #[error("subspace (u = {u}, r = {r}) is empty")]
    EmptySubspace { u: String, r: String },

    #[error("ladder element vanishes at photon number {photon_number}")]
    DegenerateLadder { photon_number: usize },

    #[error("pole: reduced energy at photon number {photon_number} is zero")]
    Pole { photon_number: usize },

    #[error("negative radicand in branch {branch} ({radicand:e})")]
    NegativeRadicand { branch: &'static str, radicand: f64 },
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
