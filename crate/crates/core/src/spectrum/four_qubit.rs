//! Special-case formulas for the one-excitation ladder of four qubits
//! (`u = 1`, `r = 2`).

use serde::Serialize;

use super::dressed::solve_dressed;
use super::polynomial::Polynomial;
use super::subspace::subspace;
use super::LadderParams;
use crate::error::{invalid, Error, Result};
use crate::half::HalfInt;

fn table_ladder() -> super::ExcitationSubspace {
    subspace(HalfInt::from_int(1), HalfInt::from_int(2)).expect("u = 1, r = 2 is a valid ladder")
}

/// Quartic with every `eta` term dropped except `-36 R eta^2 detuning^2`:
/// `v^4 - 6 d v^3 + 11 d^2 v^2 - 6 d^3 v - 36 R eta^2 d^2`.
pub fn truncated_quartic(deformation: f64, detuning: f64, coupling: f64) -> Polynomial {
    let d = detuning;
    Polynomial::new(vec![
        -36.0 * deformation * coupling * coupling * d * d,
        -6.0 * d * d * d,
        11.0 * d * d,
        -6.0 * d,
        1.0,
    ])
}

/// The general quartic with the printed constant term
/// `-36 R eta^2 (d^2 + 2 R eta^2)`. Kept for comparison reports; its roots
/// are not the ladder spectrum, see [`super::characteristic_polynomial`].
pub fn printed_quartic(deformation: f64, detuning: f64, coupling: f64) -> Polynomial {
    let d = detuning;
    let re2 = deformation * coupling * coupling;
    Polynomial::new(vec![
        -36.0 * re2 * (d * d + 2.0 * re2),
        -6.0 * (d * d * d - 13.0 * d * re2),
        11.0 * d * d - 30.0 * re2,
        -6.0 * d,
        1.0,
    ])
}

/// Weak-coupling level energies
/// `wq + 3d/2 +- (1/2) sqrt(5 d^2 +- 4 d sqrt(d^2 + 36 R eta^2))`, ascending.
/// They are the exact roots of [`truncated_quartic`], shifted by `wq`.
pub fn weak_coupling_energies(
    deformation: f64,
    detuning: f64,
    coupling: f64,
    qubit_freq: f64,
) -> Result<[f64; 4]> {
    LadderParams::new(deformation, detuning, coupling)?;
    if detuning == 0.0 {
        return Err(invalid("weak-coupling levels need nonzero detuning"));
    }
    let d = detuning;
    let inner = (d * d + 36.0 * deformation * coupling * coupling).sqrt();
    let mut out = [0.0; 4];
    let mut k = 0;
    for (branch, sign) in [("inner +", 1.0), ("inner -", -1.0)] {
        let radicand = 5.0 * d * d + sign * 4.0 * d * inner;
        if radicand < 0.0 {
            return Err(Error::NegativeRadicand { branch, radicand });
        }
        let half_root = 0.5 * radicand.sqrt();
        for outer in [1.0, -1.0] {
            out[k] = qubit_freq + 1.5 * d + outer * half_root;
            k += 1;
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Resonant (`detuning = 0`) interaction eigenvalues of the four-qubit
/// ladder next to the printed closed form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResonantComparison {
    /// Eigenvalues of `H1`, ascending.
    pub canonical: Vec<f64>,
    /// `+- sqrt((15 + 3 sqrt 33) R) eta`, ascending.
    pub printed: Vec<f64>,
}

pub fn resonant_energies(deformation: f64, coupling: f64) -> Result<ResonantComparison> {
    let params = LadderParams::new(deformation, 0.0, coupling)?;
    let canonical = solve_dressed(&table_ladder(), &params, 0.0)?
        .into_iter()
        .map(|s| s.interaction_eigenvalue)
        .collect();
    let printed_root = ((15.0 + 3.0 * 33f64.sqrt()) * deformation).sqrt() * coupling;
    Ok(ResonantComparison {
        canonical,
        printed: vec![-printed_root, printed_root],
    })
}

/// `+- sqrt((15 +- 3 sqrt 17) R) eta`, the roots of
/// `v^4 - 30 R eta^2 v^2 + 72 R^2 eta^4`, ascending.
pub fn resonant_roots_from_recursion(deformation: f64, coupling: f64) -> [f64; 4] {
    let big = ((15.0 + 3.0 * 17f64.sqrt()) * deformation).sqrt() * coupling;
    let small = ((15.0 - 3.0 * 17f64.sqrt()) * deformation).sqrt() * coupling;
    [-big, -small, small, big]
}
