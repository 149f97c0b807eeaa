//! Brute-force ground truth: explicit matrices for the collective operators
//! and the rotating-wave Hamiltonian on the qubit (x) Fock space, diagonalized
//! with an in-house Jacobi solver.

mod build;
mod eigh;
mod matrix;

pub use build::{
    build_collective_ops, build_collective_ops_with, build_hamiltonian, build_hamiltonian_with,
    excitation_number, sector_basis, sector_hamiltonian, sector_hamiltonian_with, sector_spectrum,
    sector_spectrum_with, Capacity, CollectiveOps,
};
pub(crate) use eigh::eigh_real_symmetric;
pub use eigh::{eigh, Eigen};
pub use matrix::{commutator, hs_projection, BasisLabel, OperatorMatrix};
