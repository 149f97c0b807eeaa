//! Expansion coefficients `c_n` of a dressed state with `c_0 = 1`.
//!
//! Writing `c_n = C_n / (sqrt(n!) prod_{j=1..n} alpha_{u-j})` turns the
//! eigenvalue equation into
//! `C_{n+1} = v~_n C_n - n alpha_{u-n}^2 C_{n-1}` with `v~_n = (v - detuning n) / eta`.
//! Unrolling it gives a sum over sets of non-adjacent "pair removals", which
//! is the closed form evaluated by [`coefficients_closed`].

use super::subspace::ExcitationSubspace;
use super::LadderParams;
use crate::algebra::ladder_value;
use crate::error::{invalid, Error, Result};

fn check_vacuum_ladder(sub: &ExcitationSubspace, params: &LadderParams) -> Result<()> {
    params.validate()?;
    if !sub.contains_vacuum() {
        return Err(invalid("coefficient recursion needs n = 0 in the ladder"));
    }
    if params.coupling == 0.0 {
        return Err(invalid("coefficient recursion needs eta > 0"));
    }
    Ok(())
}

/// `v~_n = (v - detuning n) / eta` for `n = 0 ..= n_max`.
pub fn reduced_energies(v: f64, sub: &ExcitationSubspace, params: &LadderParams) -> Vec<f64> {
    (0..=sub.n_max)
        .map(|n| (v - params.detuning * n as f64) / params.coupling)
        .collect()
}

fn alpha(sub: &ExcitationSubspace, j: usize, deformation: f64) -> f64 {
    ladder_value(sub.total_spin, sub.total_excitation - j as i32, deformation)
}

/// `C_0 ..= C_{n_max + 1}`.
fn transformed(v: f64, sub: &ExcitationSubspace, params: &LadderParams) -> Vec<f64> {
    let vt = reduced_energies(v, sub, params);
    let mut c = Vec::with_capacity(sub.n_max + 2);
    c.push(1.0);
    c.push(vt[0]);
    for n in 1..=sub.n_max {
        let a = alpha(sub, n, params.deformation);
        let next = vt[n] * c[n] - n as f64 * a * a * c[n - 1];
        c.push(next);
    }
    c
}

pub fn coefficients_recursive(
    v: f64,
    sub: &ExcitationSubspace,
    params: &LadderParams,
) -> Result<Vec<f64>> {
    check_vacuum_ladder(sub, params)?;
    let big_c = transformed(v, sub, params);
    let mut out = Vec::with_capacity(sub.n_max + 1);
    out.push(1.0);
    let mut denom = 1.0;
    for (n, big) in big_c.iter().enumerate().take(sub.n_max + 1).skip(1) {
        let a = alpha(sub, n, params.deformation);
        if a == 0.0 {
            return Err(Error::DegenerateLadder { photon_number: n });
        }
        denom *= (n as f64).sqrt() * a;
        out.push(big / denom);
    }
    Ok(out)
}

/// `|C_{n_max+1}|` relative to the two terms that produce it; zero when `v`
/// is an exact eigenvalue.
pub fn termination_residual(
    v: f64,
    sub: &ExcitationSubspace,
    params: &LadderParams,
) -> Result<f64> {
    check_vacuum_ladder(sub, params)?;
    let c = transformed(v, sub, params);
    let n = sub.n_max;
    let vt = (v - params.detuning * n as f64) / params.coupling;
    let a = alpha(sub, n, params.deformation);
    let prev = if n == 0 { 0.0 } else { c[n - 1] };
    let scale = (vt * c[n]).abs().max((n as f64 * a * a * prev).abs());
    let last = c[n + 1].abs();
    Ok(if scale == 0.0 { last } else { last / scale })
}

fn check_poles(vt: &[f64], upto: usize, v: f64, eta: f64) -> Result<()> {
    let tol = 1e-12 * (v.abs() / eta).max(1.0);
    match vt[..upto].iter().position(|x| x.abs() < tol) {
        Some(photon_number) => Err(Error::Pole { photon_number }),
        None => Ok(()),
    }
}

/// Sum over descending index sets `j_1 > j_2 > ... > j_p` with gaps of at
/// least two, `j_1 <= top`, of `prod_k weights[j_k]`.
fn descending_pair_sum(weights: &[f64], top: i64, p: usize) -> f64 {
    if p == 0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut j = top;
    while j >= 0 {
        sum += weights[j as usize] * descending_pair_sum(weights, j - 2, p - 1);
        j -= 1;
    }
    sum
}

struct ClosedFormTerms {
    /// `P_n / sqrt(n!)` for every `n`.
    prefactor: Vec<f64>,
    /// `(j+1) abar_{u-(j+1)}^2 / (v~_j v~_{j+1})` with undeformed `abar`.
    weights: Vec<f64>,
}

fn closed_form_terms(
    v: f64,
    sub: &ExcitationSubspace,
    params: &LadderParams,
) -> Result<ClosedFormTerms> {
    check_vacuum_ladder(sub, params)?;
    let vt = reduced_energies(v, sub, params);
    check_poles(&vt, sub.n_max, v, params.coupling)?;
    let mut prefactor = Vec::with_capacity(sub.n_max + 1);
    let mut p = 1.0;
    let mut fact = 1.0;
    prefactor.push(1.0);
    for n in 1..=sub.n_max {
        let abar = alpha(sub, n, 1.0);
        if abar == 0.0 {
            return Err(Error::DegenerateLadder { photon_number: n });
        }
        p *= vt[n - 1] / abar;
        fact *= n as f64;
        prefactor.push(p / fact.sqrt());
    }
    let weights = (0..sub.n_max.saturating_sub(1))
        .map(|j| {
            let abar = alpha(sub, j + 1, 1.0);
            (j + 1) as f64 * abar * abar / (vt[j] * vt[j + 1])
        })
        .collect();
    Ok(ClosedFormTerms { prefactor, weights })
}

/// Contribution `C_{n,p}` of the index sets with `p` removed pairs to the
/// `n`-photon amplitude.
pub fn amplitude_contribution(
    n: usize,
    p: usize,
    v: f64,
    sub: &ExcitationSubspace,
    params: &LadderParams,
) -> Result<f64> {
    if n > sub.n_max || 2 * p > n {
        return Err(invalid(format!(
            "no contribution C_{{{n},{p}}} in this ladder"
        )));
    }
    let terms = closed_form_terms(v, sub, params)?;
    Ok(terms.prefactor[n] * descending_pair_sum(&terms.weights, n as i64 - 2, p))
}

/// `c_n = sum_p (-1)^p R^{p - n/2} C_{n,p}`.
pub fn coefficients_closed(
    v: f64,
    sub: &ExcitationSubspace,
    params: &LadderParams,
) -> Result<Vec<f64>> {
    let terms = closed_form_terms(v, sub, params)?;
    let r = params.deformation;
    if r == 0.0 {
        return Err(Error::DegenerateLadder {
            photon_number: 1.min(sub.n_max),
        });
    }
    Ok((0..=sub.n_max)
        .map(|n| {
            (0..=n / 2)
                .map(|p| {
                    let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                    let contrib =
                        terms.prefactor[n] * descending_pair_sum(&terms.weights, n as i64 - 2, p);
                    sign * r.powf(p as f64 - n as f64 / 2.0) * contrib
                })
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::half::HalfInt;
    use crate::spectrum::{solve_dressed, subspace, Normalization};

    const R: f64 = 0.625;

    fn table() -> ExcitationSubspace {
        subspace(HalfInt::from_int(1), HalfInt::from_int(2)).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    /// Table entries for the four-qubit, one-excitation ladder.
    fn table_formulas(vt: &[f64]) -> [f64; 4] {
        let s2 = 2f64.sqrt();
        let s6 = 6f64.sqrt();
        [
            1.0,
            vt[0] / (6.0 * R).sqrt(),
            vt[0] * vt[1] / (6.0 * s2 * R) - 1.0 / s2,
            vt[0] * vt[1] * vt[2] / (12.0 * s6 * R.powf(1.5))
                - (s6 * vt[2] + 2.0 * s6 * vt[0]) / (12.0 * R.sqrt()),
        ]
    }

    #[test]
    fn table_amplitudes_from_recursion_and_closed_form() {
        for &(v, det, eta) in &[(0.37, 0.0, 1.0), (-1.3, 0.25, 0.6), (2.2, -0.5, 1.5)] {
            let params = LadderParams::new(R, det, eta).unwrap();
            let vt = reduced_energies(v, &table(), &params);
            let expected = table_formulas(&vt);
            let rec = coefficients_recursive(v, &table(), &params).unwrap();
            let closed = coefficients_closed(v, &table(), &params).unwrap();
            for n in 0..4 {
                assert!(
                    close(rec[n], expected[n], 1e-10),
                    "n={n}: {} vs {}",
                    rec[n],
                    expected[n]
                );
                assert!(close(closed[n], expected[n], 1e-10));
            }
        }
    }

    #[test]
    fn first_amplitude_is_single_contribution() {
        let params = LadderParams::new(R, 0.1, 1.0).unwrap();
        let v = 0.8;
        let c10 = amplitude_contribution(1, 0, v, &table(), &params).unwrap();
        let c1 = coefficients_closed(v, &table(), &params).unwrap()[1];
        assert!((c1 - c10 / R.sqrt()).abs() < 1e-15);
        assert!((c1 - v / (6.0 * R).sqrt()).abs() < 1e-14);
        assert!(amplitude_contribution(1, 1, v, &table(), &params).is_err());
    }

    #[test]
    fn eigenvector_matches_recursion() {
        let params = LadderParams::new(R, -0.3, 0.45).unwrap();
        for state in solve_dressed(&table(), &params, 1.0).unwrap() {
            let v = state.interaction_eigenvalue;
            let rescaled = state.with_normalization(Normalization::C0IsOne).unwrap();
            let rec = coefficients_recursive(v, &table(), &params).unwrap();
            for (a, b) in rescaled.coefficients.iter().zip(&rec) {
                assert!(close(*a, *b, 1e-8), "{a} vs {b}");
            }
            assert!(termination_residual(v, &table(), &params).unwrap() < 1e-8);
        }
        assert!(termination_residual(0.123, &table(), &params).unwrap() > 1e-3);
    }

    #[test]
    fn pole_is_reported() {
        let params = LadderParams::new(R, 0.5, 1.0).unwrap();
        // v~_1 = 0 at v = detuning
        assert_eq!(
            coefficients_closed(0.5, &table(), &params).unwrap_err(),
            Error::Pole { photon_number: 1 }
        );
        assert!(coefficients_recursive(0.5, &table(), &params).is_ok());
    }

    #[test]
    fn degenerate_ladder_is_reported() {
        let params = LadderParams::new(0.0, 0.5, 1.0).unwrap();
        assert_eq!(
            coefficients_recursive(0.3, &table(), &params).unwrap_err(),
            Error::DegenerateLadder { photon_number: 1 }
        );
    }

    #[test]
    fn preconditions() {
        let params = LadderParams::new(R, 0.5, 1.0).unwrap();
        let no_vacuum = subspace(HalfInt::from_int(3), HalfInt::from_int(1)).unwrap();
        assert!(coefficients_recursive(0.3, &no_vacuum, &params).is_err());
        let decoupled = LadderParams::new(R, 0.5, 0.0).unwrap();
        assert!(coefficients_recursive(0.3, &table(), &decoupled).is_err());
    }

    #[test]
    fn pair_sum_counts_index_sets() {
        // With unit weights the sum counts non-adjacent index sets.
        let w = vec![1.0; 6];
        assert_eq!(descending_pair_sum(&w, 5, 0), 1.0);
        assert_eq!(descending_pair_sum(&w, 5, 1), 6.0);
        // pairs from {0..5} with gap >= 2: C(5, 2) = 10
        assert_eq!(descending_pair_sum(&w, 5, 2), 10.0);
        assert_eq!(descending_pair_sum(&w, 5, 3), 4.0);
        assert_eq!(descending_pair_sum(&w, -1, 1), 0.0);
    }
}
