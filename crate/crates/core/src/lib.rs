//! Excitation spectra of a chain of two-level qubits coupled to one photon
//! mode with position-dependent strength `eta * cos(j pi l)`.
//!
//! The collective operators of such a chain close a deformed SU(2) algebra
//! whose only new parameter is the deformation factor `R(N, l)`. The crate
//! computes that algebra ([`algebra`]), the dressed-state ladder spectra it
//! implies ([`spectrum`]), the Frenkel/Wannier crossover spacing
//! ([`crossover`]), and checks all of it against exact diagonalization of the
//! full Hamiltonian ([`oracle`]).

pub mod algebra;
pub mod crossover;
mod error;
pub mod exec;
mod half;
pub mod oracle;
pub mod spectrum;

pub use error::{Error, Result};
pub use exec::Execution;
pub use half::HalfInt;
