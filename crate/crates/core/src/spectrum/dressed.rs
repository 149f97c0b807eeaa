use serde::Serialize;

use super::subspace::ExcitationSubspace;
use super::LadderParams;
use crate::algebra::ladder_value;
use crate::error::{invalid, Result};
use crate::oracle::eigh_real_symmetric;

/// Real symmetric tridiagonal matrix; `off_diagonal[k]` couples rows `k` and
/// `k + 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tridiagonal {
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<f64>,
}

impl Tridiagonal {
    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.dim();
        let mut dense = vec![0.0; n * n];
        for (i, &d) in self.diagonal.iter().enumerate() {
            dense[i * n + i] = d;
        }
        for (i, &b) in self.off_diagonal.iter().enumerate() {
            dense[i * n + i + 1] = b;
            dense[(i + 1) * n + i] = b;
        }
        dense
    }
}

/// `H1` in the ladder basis ordered by photon number: diagonal
/// `detuning * n`, coupling `eta sqrt(n+1) alpha_{u-n-1}` between `n` and
/// `n + 1`.
pub fn build_h1_matrix(sub: &ExcitationSubspace, params: &LadderParams) -> Result<Tridiagonal> {
    params.validate()?;
    let u = sub.total_excitation;
    let r = sub.total_spin;
    let diagonal = sub
        .photon_numbers()
        .map(|n| params.detuning * n as f64)
        .collect();
    let off_diagonal = (sub.n_min..sub.n_max)
        .map(|n| {
            let alpha = ladder_value(r, u - (n as i32 + 1), params.deformation);
            params.coupling * ((n + 1) as f64).sqrt() * alpha
        })
        .collect();
    Ok(Tridiagonal {
        diagonal,
        off_diagonal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Vacuum amplitude fixed to one.
    C0IsOne,
    UnitNorm,
}

/// One eigenpair of `H1` in a ladder.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DressedState {
    pub interaction_eigenvalue: f64,
    /// `wq * u + v`.
    pub total_energy: f64,
    /// Photon number of `coefficients[0]`.
    pub n_min: usize,
    pub coefficients: Vec<f64>,
    pub normalization: Normalization,
}

impl DressedState {
    pub fn with_normalization(&self, mode: Normalization) -> Result<DressedState> {
        let coefficients = match mode {
            Normalization::UnitNorm => {
                let norm = self.coefficients.iter().map(|c| c * c).sum::<f64>().sqrt();
                if norm == 0.0 {
                    return Err(invalid("zero coefficient vector"));
                }
                self.coefficients.iter().map(|c| c / norm).collect()
            }
            Normalization::C0IsOne => {
                if self.n_min != 0 {
                    return Err(invalid("vacuum is not part of this ladder"));
                }
                let c0 = self.coefficients[0];
                if c0.abs() <= 1e-12 {
                    return Err(invalid(format!(
                        "vacuum amplitude {c0:e} is too small to rescale"
                    )));
                }
                let mut c: Vec<f64> = self.coefficients.iter().map(|x| x / c0).collect();
                c[0] = 1.0;
                c
            }
        };
        Ok(DressedState {
            coefficients,
            normalization: mode,
            ..self.clone()
        })
    }
}

/// Eigenpairs of `H1`, ascending in `v`, unit-normalized.
pub fn solve_dressed(
    sub: &ExcitationSubspace,
    params: &LadderParams,
    qubit_freq: f64,
) -> Result<Vec<DressedState>> {
    let h1 = build_h1_matrix(sub, params)?;
    let eigen = eigh_real_symmetric(h1.dim(), &h1.to_dense())?;
    let base = qubit_freq * sub.total_excitation.value();
    Ok(eigen
        .values
        .into_iter()
        .zip(eigen.vectors)
        .map(|(v, vec)| DressedState {
            interaction_eigenvalue: v,
            total_energy: base + v,
            n_min: sub.n_min,
            coefficients: vec.iter().map(|z| z.re).collect(),
            normalization: Normalization::UnitNorm,
        })
        .collect())
}
