//! Closed-form scalars of the deformed SU(2) algebra obeyed by the collective
//! operators of an inhomogeneously coupled qubit chain.
//!
//! The qubit at position `j` couples to the photon with strength
//! `eta * cos(j * pi * l)`, where `l` is the qubit spacing in units of half a
//! photon wavelength. Projecting the commutator `[S+, S-]` back onto `S_z`
//! gives the deformation factor `R(N, l)`; everything else here follows from it.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exec::{linspace_point, Execution};
use crate::half::HalfInt;

/// Physical parameters of one chain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainConfig {
    pub n_qubits: usize,
    /// Relative spacing `l = 2 L_q / L_p`.
    pub spacing: f64,
    pub qubit_freq: f64,
    pub photon_freq: f64,
    pub coupling: f64,
}

impl ChainConfig {
    pub fn new(
        n_qubits: usize,
        spacing: f64,
        qubit_freq: f64,
        photon_freq: f64,
        coupling: f64,
    ) -> Result<Self> {
        let config = ChainConfig {
            n_qubits,
            spacing,
            qubit_freq,
            photon_freq,
            coupling,
        };
        config.validate()?;
        Ok(config)
    }

    /// Unlike [`deformation_factor`], `l = 0` is accepted here: it is the
    /// homogeneous limit where every qubit couples with full strength.
    pub fn validate(&self) -> Result<()> {
        if self.n_qubits < 1 {
            return Err(invalid("chain needs at least one qubit"));
        }
        if !(self.spacing.is_finite() && self.spacing >= 0.0) {
            return Err(invalid(format!(
                "spacing must be finite and >= 0, got {}",
                self.spacing
            )));
        }
        if !self.qubit_freq.is_finite() || !self.photon_freq.is_finite() {
            return Err(invalid("frequencies must be finite"));
        }
        if !(self.coupling.is_finite() && self.coupling >= 0.0) {
            return Err(invalid(format!(
                "coupling must be >= 0, got {}",
                self.coupling
            )));
        }
        Ok(())
    }

    /// Photon detuning from the qubits, `w0 - wq`.
    pub fn detuning(&self) -> f64 {
        self.photon_freq - self.qubit_freq
    }

    /// Total spin of the fully symmetric ladder, `N/2`.
    pub fn collective_spin(&self) -> HalfInt {
        HalfInt::from_doubled(self.n_qubits as i32)
    }

    /// Per-qubit coupling profile `cos(j pi l)`.
    pub fn coupling_profile(&self) -> Vec<f64> {
        (0..self.n_qubits)
            .map(|j| (j as f64 * PI * self.spacing).cos())
            .collect()
    }

    pub fn deformation(&self) -> DeformationFactor {
        DeformationFactor {
            value: deformation_sum(self.n_qubits, self.spacing),
            n_qubits: self.n_qubits,
            spacing: self.spacing,
        }
    }
}

fn check_chain(n_qubits: usize, spacing: f64) -> Result<()> {
    if n_qubits < 1 {
        return Err(invalid("chain needs at least one qubit"));
    }
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(invalid(format!(
            "spacing must be finite and > 0, got {spacing}"
        )));
    }
    Ok(())
}

fn check_deformation(r: f64) -> Result<()> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(invalid(format!(
            "deformation factor must lie in (0, 1], got {r}"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DeformationFactor {
    pub value: f64,
    pub n_qubits: usize,
    pub spacing: f64,
}

fn deformation_sum(n_qubits: usize, spacing: f64) -> f64 {
    let sum: f64 = (0..n_qubits)
        .map(|j| (2.0 * PI * j as f64 * spacing).cos())
        .sum();
    0.5 + sum / (2.0 * n_qubits as f64)
}

/// `R(N, l) = 1/2 + (1/2N) sum_j cos(2 j pi l)`.
///
/// The cosine sum has no removable singularity, so integer spacings need no
/// special handling.
pub fn deformation_factor(n_qubits: usize, spacing: f64) -> Result<DeformationFactor> {
    check_chain(n_qubits, spacing)?;
    Ok(DeformationFactor {
        value: deformation_sum(n_qubits, spacing),
        n_qubits,
        spacing,
    })
}

/// Dirichlet-kernel form `[2N + 1 + sin((2N-1) pi l) / sin(pi l)] / 4N`.
///
/// Returns `None` where `|sin(pi l)| < 1e-12`.
pub fn deformation_factor_closed(n_qubits: usize, spacing: f64) -> Result<Option<f64>> {
    check_chain(n_qubits, spacing)?;
    let n = n_qubits as f64;
    let denom = (PI * spacing).sin();
    if denom.abs() < 1e-12 {
        return Ok(None);
    }
    let kernel = ((2.0 * n - 1.0) * PI * spacing).sin() / denom;
    Ok(Some((2.0 * n + 1.0 + kernel) / (4.0 * n)))
}

/// Weights `w_j` with `Sigma_z = S_z + sum_j w_j sigma_{j,z}`.
pub fn sigma_z_deviation_weights(n_qubits: usize, spacing: f64) -> Result<Vec<f64>> {
    check_chain(n_qubits, spacing)?;
    Ok((0..n_qubits)
        .map(|j| {
            let j = j as f64;
            (j * PI * (1.0 + spacing)).sin() * (j * PI * (1.0 - spacing)).sin()
        })
        .collect())
}

/// Uniform `(l, R)` samples, computed under the given execution policy.
pub fn deformation_sweep(
    n_qubits: usize,
    l_start: f64,
    l_end: f64,
    steps: usize,
    exec: Execution,
) -> Result<Vec<(f64, f64)>> {
    if steps < 2 {
        return Err(invalid("sweep needs at least two steps"));
    }
    check_chain(n_qubits, l_start)?;
    if !(l_end.is_finite() && l_end > l_start) {
        return Err(invalid(format!(
            "sweep end {l_end} must exceed start {l_start}"
        )));
    }
    Ok(exec.map_indexed(steps, |i| {
        let l = linspace_point(l_start, l_end, steps, i);
        (l, deformation_sum(n_qubits, l))
    }))
}

/// Matrix element of the deformed ladder operators between `|r, m>` and
/// `|r, m+1>`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LadderElement {
    pub total_spin: HalfInt,
    pub moment: HalfInt,
    pub deformation: f64,
    pub value: f64,
}

/// `alpha_m^(r) = sqrt(R (r - m)(r + m + 1))`.
///
/// `S+ |r,m> = alpha_m |r,m+1>` and `S- |r,m> = alpha_{m-1} |r,m-1>`.
/// `R = 0` is accepted and yields a vanishing ladder.
pub fn ladder_element(r: HalfInt, m: HalfInt, deformation: f64) -> Result<LadderElement> {
    if r.doubled() < 0 {
        return Err(invalid(format!("total spin {r} is negative")));
    }
    if r.integer_gap(m).is_none() {
        return Err(invalid(format!("r - m = {} is not an integer", r - m)));
    }
    if m < -r || m > r {
        return Err(invalid(format!("moment {m} outside [-{r}, {r}]")));
    }
    if !(deformation.is_finite() && deformation >= 0.0) {
        return Err(invalid(format!("deformation {deformation} must be >= 0")));
    }
    Ok(LadderElement {
        total_spin: r,
        moment: m,
        deformation,
        value: ladder_value(r, m, deformation),
    })
}

/// Unchecked ladder value; zero outside the ladder.
pub(crate) fn ladder_value(r: HalfInt, m: HalfInt, deformation: f64) -> f64 {
    let up = f64::from((r - m).doubled()) / 2.0;
    let down = f64::from((r + m).doubled()) / 2.0 + 1.0;
    if up <= 0.0 || down <= 0.0 {
        return 0.0;
    }
    (deformation * up * down).sqrt()
}

/// `h(m) = R (m^2 + m)`, the `S_z` part of the deformed Casimir operator.
pub fn casimir_h(m: f64, deformation: f64) -> Result<f64> {
    check_deformation(deformation)?;
    Ok(deformation * (m * m + m))
}

/// Metric `(1, 1, R)` of the Bloch ellipsoid.
pub fn bloch_metric(deformation: f64) -> [f64; 3] {
    [1.0, 1.0, deformation]
}

pub fn h_curve(deformation: f64, m_min: f64, m_max: f64, steps: usize) -> Result<Vec<(f64, f64)>> {
    check_deformation(deformation)?;
    if steps < 2 {
        return Err(invalid("curve needs at least two steps"));
    }
    if !(m_min.is_finite() && m_max.is_finite() && m_max > m_min) {
        return Err(invalid(format!("empty moment range [{m_min}, {m_max}]")));
    }
    Ok((0..steps)
        .map(|i| {
            let m = linspace_point(m_min, m_max, steps, i);
            (m, deformation * (m * m + m))
        })
        .collect())
}
