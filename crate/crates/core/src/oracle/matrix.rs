use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Product-basis state `|n> (x) |b_0 ... b_{N-1}>`; bit `j` set means qubit
/// `j` is excited. Ordering is photon number first, then the bit string read
/// as an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisLabel {
    pub photon_number: u32,
    pub qubit_bits: u64,
}

impl BasisLabel {
    pub const fn new(photon_number: u32, qubit_bits: u64) -> Self {
        BasisLabel {
            photon_number,
            qubit_bits,
        }
    }

    pub fn excited_qubits(&self) -> u32 {
        self.qubit_bits.count_ones()
    }
}

/// Dense square complex matrix over a labelled basis, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<Complex64>,
    basis: Vec<BasisLabel>,
    hermitian: bool,
}

pub(crate) const HERMITIAN_TOL: f64 = 1e-12;

impl OperatorMatrix {
    pub fn zeros(basis: Vec<BasisLabel>) -> Self {
        let dim = basis.len();
        OperatorMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
            basis,
            hermitian: true,
        }
    }

    pub fn identity(basis: Vec<BasisLabel>) -> Self {
        let mut m = Self::zeros(basis);
        for i in 0..m.dim {
            m.entries[i * m.dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Wraps row-major entries; labels `(0, i)` are attached when the
    /// matrix has no physical basis.
    pub fn from_rows(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        let basis = (0..dim as u64).map(|i| BasisLabel::new(0, i)).collect();
        let mut m = OperatorMatrix {
            dim,
            entries,
            basis,
            hermitian: false,
        };
        m.refresh_hermitian_flag();
        Ok(m)
    }

    pub fn from_real_rows(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::from_rows(
            dim,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub(crate) fn add_to(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] += value;
    }

    /// Re-derives the Hermitian flag after direct entry writes.
    pub(crate) fn refresh_hermitian_flag(&mut self) {
        self.hermitian = self.hermitian_defect() <= HERMITIAN_TOL;
    }

    /// `max |A_ij - conj(A_ji)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let d = (self.entries[i * n + j] - self.entries[j * n + i].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        OperatorMatrix {
            dim: n,
            entries,
            basis: self.basis.clone(),
            hermitian: self.hermitian,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let other_row = &other.entries[k * n..(k + 1) * n];
                for (o, b) in row.iter_mut().zip(other_row) {
                    *o += a * b;
                }
            }
        }
        let mut m = OperatorMatrix {
            dim: n,
            entries: out,
            basis: self.basis.clone(),
            hermitian: false,
        };
        m.refresh_hermitian_flag();
        Ok(m)
    }

    pub fn linear_combination(&self, a: Complex64, other: &Self, b: Complex64) -> Result<Self> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| a * x + b * y)
            .collect();
        let mut m = OperatorMatrix {
            dim: self.dim,
            entries,
            basis: self.basis.clone(),
            hermitian: false,
        };
        m.refresh_hermitian_flag();
        Ok(m)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut m = self.clone();
        m.entries.iter_mut().for_each(|x| *x *= factor);
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Hilbert-Schmidt inner product `tr(A^dagger B)`.
    pub fn hs_inner(&self, other: &Self) -> Result<Complex64> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|x| x.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                self.entries[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect()
    }
}

/// `AB - BA`.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    let ab = a.matmul(b)?;
    let ba = b.matmul(a)?;
    ab.linear_combination(Complex64::new(1.0, 0.0), &ba, Complex64::new(-1.0, 0.0))
}

/// `tr(A^dagger B) / tr(B^dagger B)`, real part.
pub fn hs_projection(a: &OperatorMatrix, onto: &OperatorMatrix) -> Result<f64> {
    let denom = onto.hs_inner(onto)?.re;
    if denom == 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(a.hs_inner(onto)?.re / denom)
}
