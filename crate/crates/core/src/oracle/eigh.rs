//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies a real Givens rotation, so the whole update is a
//! single 2x2 unitary acting on rows and columns `p`, `q`.

use num_complex::Complex64;

use super::matrix::OperatorMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Eigenvector components below this magnitude are not "significant" when
/// fixing phases and ordering degenerate clusters.
const SIGNIFICANT: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// `vectors[i]` belongs to `values[i]`; unit norm, first significant
    /// component real and positive.
    pub vectors: Vec<Vec<Complex64>>,
}

pub fn eigh(matrix: &OperatorMatrix) -> Result<Eigen> {
    if !matrix.is_hermitian() {
        return Err(Error::NotHermitian(matrix.hermitian_defect()));
    }
    if matrix.entries().iter().all(|z| z.im == 0.0) {
        let real: Vec<f64> = matrix.entries().iter().map(|z| z.re).collect();
        return eigh_real_symmetric(matrix.dim(), &real);
    }
    jacobi(matrix.dim(), matrix.entries().to_vec())
}

/// Real symmetric input, e.g. the tridiagonal interaction matrix or a
/// Hamiltonian with real couplings. Same rotations and stopping rule as the
/// complex path with every phase equal to one.
pub(crate) fn eigh_real_symmetric(dim: usize, entries: &[f64]) -> Result<Eigen> {
    let n = dim;
    let mut a = entries.to_vec();
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = avg;
            a[j * n + i] = avg;
        }
    }
    // Row j of `vt` is eigenvector j.
    let mut vt = vec![0.0; n * n];
    for i in 0..n {
        vt[i * n + i] = 1.0;
    }
    let fnorm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let off_mass = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut converged = fnorm == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let b = a[p * n + q];
                if b.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * b);
                let t = if tau.abs() > 1e150 {
                    0.5 / tau
                } else {
                    let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
                    sign / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                rotate_rows(&mut a, n, p, q, c, s);
                // Columns p, q follow from symmetry.
                for k in 0..n {
                    a[k * n + p] = a[p * n + k];
                    a[k * n + q] = a[q * n + k];
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                a[p * n + p] = app - t * b;
                a[q * n + q] = aqq + t * b;
                rotate_rows(&mut vt, n, p, q, c, s);
            }
        }
        converged = off_mass(&a) <= OFF_DIAGONAL_TOL * fnorm;
    }
    if !converged {
        return Err(Error::NoConvergence(off_mass(&a)));
    }
    let pairs = (0..n)
        .map(|j| {
            let col = vt[j * n..(j + 1) * n]
                .iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect();
            (a[j * n + j], col)
        })
        .collect();
    Ok(finish(pairs, fnorm))
}

/// `row_p <- c row_p - s row_q`, `row_q <- s row_p + c row_q`.
fn rotate_rows(m: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    let (head, tail) = m.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let (xp, yq) = (*x, *y);
        *x = c * xp - s * yq;
        *y = s * xp + c * yq;
    }
}

fn jacobi(n: usize, mut a: Vec<Complex64>) -> Result<Eigen> {
    let zero = Complex64::new(0.0, 0.0);
    for i in 0..n {
        a[i * n + i] = Complex64::new(a[i * n + i].re, 0.0);
        for j in i + 1..n {
            let avg = (a[i * n + j] + a[j * n + i].conj()) * 0.5;
            a[i * n + j] = avg;
            a[j * n + i] = avg.conj();
        }
    }
    let mut v = vec![zero; n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }

    let fnorm = a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let off_mass = |a: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = fnorm == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let b = a[p * n + q];
                let abs_b = b.norm();
                if abs_b <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase_conj = b.conj() / abs_b;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (2.0 * abs_b);
                let t = if tau.abs() > 1e150 {
                    0.5 / tau
                } else {
                    let sign = if tau >= 0.0 { 1.0 } else { -1.0 };
                    sign / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let w_pp = Complex64::new(c, 0.0);
                let w_pq = Complex64::new(s, 0.0);
                let w_qp = phase_conj * (-s);
                let w_qq = phase_conj * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * w_pp + akq * w_qp;
                    a[k * n + q] = akp * w_pq + akq * w_qq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = w_pp.conj() * apk + w_qp.conj() * aqk;
                    a[q * n + k] = w_pq.conj() * apk + w_qq.conj() * aqk;
                }
                a[p * n + q] = zero;
                a[q * n + p] = zero;
                a[p * n + p] = Complex64::new(app - t * abs_b, 0.0);
                a[q * n + q] = Complex64::new(aqq + t * abs_b, 0.0);

                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * w_pp + vkq * w_qp;
                    v[k * n + q] = vkp * w_pq + vkq * w_qq;
                }
            }
        }
        converged = off_mass(&a) <= OFF_DIAGONAL_TOL * fnorm;
    }
    if !converged {
        return Err(Error::NoConvergence(off_mass(&a)));
    }

    let pairs = (0..n)
        .map(|j| (a[j * n + j].re, (0..n).map(|k| v[k * n + j]).collect()))
        .collect();
    Ok(finish(pairs, fnorm))
}

/// Phase fixing and deterministic ordering shared by both paths.
fn finish(mut pairs: Vec<(f64, Vec<Complex64>)>, fnorm: f64) -> Eigen {
    for (_, col) in pairs.iter_mut() {
        fix_phase(col);
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));

    // Degenerate clusters: order by first significant component.
    let cluster_tol = 1e-10 * (1.0 + fnorm);
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && pairs[end].0 - pairs[end - 1].0 <= cluster_tol {
            end += 1;
        }
        if end - start > 1 {
            pairs[start..end].sort_by_key(|(_, vec)| first_significant(vec));
        }
        start = end;
    }

    let (values, vectors) = pairs.into_iter().unzip();
    Eigen { values, vectors }
}

fn first_significant(vec: &[Complex64]) -> usize {
    vec.iter()
        .position(|x| x.norm() > SIGNIFICANT)
        .unwrap_or(vec.len())
}

fn fix_phase(vec: &mut [Complex64]) {
    let idx = first_significant(vec);
    if let Some(&pivot) = vec.get(idx) {
        let rot = pivot.conj() / pivot.norm();
        vec.iter_mut().for_each(|x| *x *= rot);
        // Exactly real pivot.
        vec[idx] = Complex64::new(vec[idx].norm(), 0.0);
    }
}
