use num_complex::Complex64;

use super::eigh::eigh;
use super::matrix::{BasisLabel, OperatorMatrix};
use crate::algebra::{sigma_z_deviation_weights, ChainConfig};
use crate::error::{Error, Result};
use crate::half::HalfInt;

/// Size limits for dense oracle matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capacity {
    pub max_qubits: usize,
    pub max_dim: usize,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            max_qubits: 12,
            max_dim: 4096,
        }
    }
}

impl Capacity {
    fn check(&self, n_qubits: usize, dim: usize) -> Result<()> {
        if n_qubits > self.max_qubits {
            return Err(Error::CapacityExceeded(format!(
                "{n_qubits} qubits (cap {})",
                self.max_qubits
            )));
        }
        if dim > self.max_dim {
            return Err(Error::CapacityExceeded(format!(
                "dimension {dim} (cap {})",
                self.max_dim
            )));
        }
        Ok(())
    }
}

/// Collective operators on the `2^N` qubit space.
#[derive(Clone, Debug)]
pub struct CollectiveOps {
    pub s_z: OperatorMatrix,
    pub s_plus: OperatorMatrix,
    pub s_minus: OperatorMatrix,
    pub sigma_z: OperatorMatrix,
}

fn qubit_basis(n_qubits: usize) -> Vec<BasisLabel> {
    (0..1u64 << n_qubits)
        .map(|b| BasisLabel::new(0, b))
        .collect()
}

fn spin_z(bits: u64, n_qubits: usize) -> f64 {
    f64::from(bits.count_ones()) - n_qubits as f64 / 2.0
}

pub fn build_collective_ops(config: &ChainConfig) -> Result<CollectiveOps> {
    build_collective_ops_with(config, Capacity::default())
}

pub fn build_collective_ops_with(config: &ChainConfig, cap: Capacity) -> Result<CollectiveOps> {
    config.validate()?;
    let n = config.n_qubits;
    cap.check(n, 1usize.checked_shl(n as u32).unwrap_or(usize::MAX))?;
    let basis = qubit_basis(n);
    let couplings = config.coupling_profile();
    let weights: Vec<f64> = if config.spacing == 0.0 {
        vec![0.0; n]
    } else {
        sigma_z_deviation_weights(n, config.spacing)?
    };

    let mut s_z = OperatorMatrix::zeros(basis.clone());
    let mut s_plus = OperatorMatrix::zeros(basis.clone());
    let mut sigma_z = OperatorMatrix::zeros(basis);
    for bits in 0..1u64 << n {
        let col = bits as usize;
        s_z.add_to(col, col, Complex64::new(spin_z(bits, n), 0.0));
        let deformed: f64 = (0..n)
            .map(|j| {
                let sz = if bits >> j & 1 == 1 { 0.5 } else { -0.5 };
                (1.0 + weights[j]) * sz
            })
            .sum();
        sigma_z.add_to(col, col, Complex64::new(deformed, 0.0));
        for (j, &g) in couplings.iter().enumerate() {
            if bits >> j & 1 == 0 {
                let row = (bits | 1 << j) as usize;
                s_plus.add_to(row, col, Complex64::new(g, 0.0));
            }
        }
    }
    s_plus.refresh_hermitian_flag();
    let s_minus = s_plus.adjoint();
    Ok(CollectiveOps {
        s_z,
        s_plus,
        s_minus,
        sigma_z,
    })
}

/// Nonzero matrix elements `<target| H |label>` of the rotating-wave
/// Hamiltonian, including the diagonal. Raising the photon number above
/// `fock_cutoff` is dropped.
fn hamiltonian_column(
    config: &ChainConfig,
    couplings: &[f64],
    label: BasisLabel,
    fock_cutoff: u32,
) -> Vec<(BasisLabel, f64)> {
    let n = config.n_qubits;
    let photons = label.photon_number;
    let mut out = Vec::with_capacity(n + 1);
    let diag =
        config.qubit_freq * spin_z(label.qubit_bits, n) + config.photon_freq * f64::from(photons);
    out.push((label, diag));
    for (j, &g) in couplings.iter().enumerate() {
        let amp = config.coupling * g;
        if amp == 0.0 {
            continue;
        }
        let excited = label.qubit_bits >> j & 1 == 1;
        if !excited && photons >= 1 {
            // sigma_{j,+} a
            let target = BasisLabel::new(photons - 1, label.qubit_bits | 1 << j);
            out.push((target, amp * f64::from(photons).sqrt()));
        } else if excited && photons < fock_cutoff {
            // sigma_{j,-} a^dagger
            let target = BasisLabel::new(photons + 1, label.qubit_bits & !(1 << j));
            out.push((target, amp * f64::from(photons + 1).sqrt()));
        }
    }
    out
}

fn full_basis(n_qubits: usize, fock_cutoff: u32) -> Vec<BasisLabel> {
    (0..=fock_cutoff)
        .flat_map(|p| (0..1u64 << n_qubits).map(move |b| BasisLabel::new(p, b)))
        .collect()
}

fn assemble(config: &ChainConfig, basis: Vec<BasisLabel>, fock_cutoff: u32) -> OperatorMatrix {
    let couplings = config.coupling_profile();
    let mut h = OperatorMatrix::zeros(basis);
    for col in 0..h.dim() {
        let label = h.basis()[col];
        for (target, amp) in hamiltonian_column(config, &couplings, label, fock_cutoff) {
            if let Ok(row) = h.basis().binary_search(&target) {
                h.add_to(row, col, Complex64::new(amp, 0.0));
            }
        }
    }
    h.refresh_hermitian_flag();
    h
}

/// Full Hamiltonian on qubits (x) Fock space truncated at `fock_cutoff`
/// photons.
pub fn build_hamiltonian(config: &ChainConfig, fock_cutoff: u32) -> Result<OperatorMatrix> {
    build_hamiltonian_with(config, fock_cutoff, Capacity::default())
}

pub fn build_hamiltonian_with(
    config: &ChainConfig,
    fock_cutoff: u32,
    cap: Capacity,
) -> Result<OperatorMatrix> {
    config.validate()?;
    let n = config.n_qubits;
    cap.check(n, 0)?;
    let dim = (1usize << n).saturating_mul(fock_cutoff as usize + 1);
    cap.check(n, dim)?;
    Ok(assemble(config, full_basis(n, fock_cutoff), fock_cutoff))
}

/// `S_z + a^dagger a` on the same truncated space as [`build_hamiltonian`].
pub fn excitation_number(n_qubits: usize, fock_cutoff: u32) -> OperatorMatrix {
    let mut m = OperatorMatrix::zeros(full_basis(n_qubits, fock_cutoff));
    for i in 0..m.dim() {
        let label = m.basis()[i];
        let value = spin_z(label.qubit_bits, n_qubits) + f64::from(label.photon_number);
        m.add_to(i, i, Complex64::new(value, 0.0));
    }
    m
}

/// Product states with `S_z + n = u`, in basis order.
pub fn sector_basis(n_qubits: usize, u: HalfInt) -> Result<Vec<BasisLabel>> {
    // u + N/2 = (excited qubits) + photons
    let doubled = u.doubled() + n_qubits as i32;
    if doubled < 0 || doubled % 2 != 0 {
        return Err(Error::EmptySector(u.to_string()));
    }
    let total = (doubled / 2) as u32;
    let mut basis = Vec::new();
    for photons in 0..=total {
        let excited = total - photons;
        if excited as usize > n_qubits {
            continue;
        }
        basis.extend(
            (0..1u64 << n_qubits)
                .filter(|b| b.count_ones() == excited)
                .map(|b| BasisLabel::new(photons, b)),
        );
    }
    if basis.is_empty() {
        return Err(Error::EmptySector(u.to_string()));
    }
    Ok(basis)
}

/// Block of the Hamiltonian on the `S_z + a^dagger a = u` sector. The photon
/// number never exceeds `u + N/2` there, so no truncation enters.
pub fn sector_hamiltonian(config: &ChainConfig, u: HalfInt) -> Result<OperatorMatrix> {
    sector_hamiltonian_with(config, u, Capacity::default())
}

pub fn sector_hamiltonian_with(
    config: &ChainConfig,
    u: HalfInt,
    cap: Capacity,
) -> Result<OperatorMatrix> {
    config.validate()?;
    cap.check(config.n_qubits, 0)?;
    let basis = sector_basis(config.n_qubits, u)?;
    cap.check(config.n_qubits, basis.len())?;
    let cutoff = basis.last().map_or(0, |b| b.photon_number);
    Ok(assemble(config, basis, cutoff))
}

/// Ascending eigenvalues of the `u` sector.
pub fn sector_spectrum(config: &ChainConfig, u: HalfInt) -> Result<Vec<f64>> {
    sector_spectrum_with(config, u, Capacity::default())
}

pub fn sector_spectrum_with(config: &ChainConfig, u: HalfInt, cap: Capacity) -> Result<Vec<f64>> {
    let h = sector_hamiltonian_with(config, u, cap)?;
    Ok(eigh(&h)?.values)
}
