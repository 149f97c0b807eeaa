use num_complex::Complex64;
use serde::Serialize;

use super::subspace::ExcitationSubspace;
use super::LadderParams;
use crate::algebra::ladder_value;
use crate::error::Result;

/// Real polynomial, coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// `(x - shift) * self - scale * other`.
    fn shifted_step(&self, shift: f64, scale: f64, other: &Polynomial) -> Polynomial {
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= shift * c;
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            out[k] -= scale * c;
        }
        Polynomial::new(out)
    }

    /// All complex roots, by Aberth-Ehrlich iteration followed by Newton
    /// polishing. Sorted by real part.
    pub fn roots(&self) -> Vec<Complex64> {
        let deg = self.degree();
        if deg == 0 {
            return Vec::new();
        }
        let lead = self.coeffs[deg];
        let monic = Polynomial::new(self.coeffs.iter().map(|c| c / lead).collect());
        let dmonic = monic.derivative();
        // Cauchy bound
        let radius = 1.0
            + monic.coeffs[..deg]
                .iter()
                .map(|c| c.abs())
                .fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..deg)
            .map(|k| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
                Complex64::from_polar(0.5 * radius, angle)
            })
            .collect();
        for _ in 0..500 {
            let mut max_step: f64 = 0.0;
            for i in 0..deg {
                let p = monic.eval_complex(z[i]);
                let dp = dmonic.eval_complex(z[i]);
                if p.norm() == 0.0 {
                    continue;
                }
                let ratio = p / dp;
                let repulsion: Complex64 = (0..deg)
                    .filter(|&j| j != i)
                    .map(|j| 1.0 / (z[i] - z[j]))
                    .sum();
                let step = ratio / (1.0 - ratio * repulsion);
                if step.is_finite() {
                    z[i] -= step;
                    max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
                }
            }
            if max_step < 1e-15 {
                break;
            }
        }
        for zi in z.iter_mut() {
            for _ in 0..3 {
                let dp = dmonic.eval_complex(*zi);
                if dp.norm() == 0.0 {
                    break;
                }
                let step = monic.eval_complex(*zi) / dp;
                if !step.is_finite() {
                    break;
                }
                *zi -= step;
            }
        }
        z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        z
    }
}

/// `det(v - H1)` as a polynomial in `v`, built with the same three-term
/// recurrence that fixes the coefficients `c_n`, scaled by `eta` so it stays
/// monic and well defined at `eta = 0`.
pub fn characteristic_polynomial(
    sub: &ExcitationSubspace,
    params: &LadderParams,
) -> Result<Polynomial> {
    params.validate()?;
    let u = sub.total_excitation;
    let r = sub.total_spin;
    let eta2 = params.coupling * params.coupling;
    let mut prev = Polynomial::new(vec![0.0]);
    let mut cur = Polynomial::new(vec![1.0]);
    for n in sub.photon_numbers() {
        let a = ladder_value(r, u - n as i32, params.deformation);
        let next = cur.shifted_step(params.detuning * n as f64, eta2 * n as f64 * a * a, &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
