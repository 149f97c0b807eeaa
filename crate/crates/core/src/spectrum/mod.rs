//! Dressed-state spectra of the deformed collective model in a fixed
//! `(u, r)` ladder: `u` total excitations, total spin `r`.
//!
//! The interaction part `H1 = detuning * a^dagger a + eta (S+ a + S- a^dagger)`
//! is tridiagonal in the photon number, so each ladder reduces to a
//! three-term recurrence for the expansion coefficients `c_n`.

mod coefficients;
mod dressed;
mod four_qubit;
mod polynomial;
mod subspace;

pub use coefficients::{
    amplitude_contribution, coefficients_closed, coefficients_recursive, reduced_energies,
    termination_residual,
};
pub use dressed::{build_h1_matrix, solve_dressed, DressedState, Normalization, Tridiagonal};
pub use four_qubit::{
    printed_quartic, resonant_energies, resonant_roots_from_recursion, truncated_quartic,
    weak_coupling_energies, ResonantComparison,
};
pub use polynomial::{characteristic_polynomial, Polynomial};
pub use subspace::{subspace, ExcitationSubspace, SubspaceState};

use serde::Serialize;

use crate::error::{invalid, Result};

/// Scalars entering `H1` for one ladder.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LadderParams {
    /// Deformation factor `R` in `[0, 1]`.
    pub deformation: f64,
    /// `w0 - wq`.
    pub detuning: f64,
    /// `eta >= 0`.
    pub coupling: f64,
}

impl LadderParams {
    pub fn new(deformation: f64, detuning: f64, coupling: f64) -> Result<Self> {
        let p = LadderParams {
            deformation,
            detuning,
            coupling,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.deformation >= 0.0 && self.deformation <= 1.0) {
            return Err(invalid(format!(
                "deformation must lie in [0, 1], got {}",
                self.deformation
            )));
        }
        if !self.detuning.is_finite() {
            return Err(invalid("detuning must be finite"));
        }
        if !(self.coupling.is_finite() && self.coupling >= 0.0) {
            return Err(invalid(format!(
                "coupling must be >= 0, got {}",
                self.coupling
            )));
        }
        Ok(())
    }
}
