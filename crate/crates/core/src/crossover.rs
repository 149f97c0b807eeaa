//! Extrema of `R(N, l)` and the Frenkel/Wannier crossover spacing.
//!
//! `dR/dl = 0` is `tan((2N-1) pi l) = (2N-1) tan(pi l)`. The tangent form has
//! poles, so roots are bracketed on the cross-multiplied residual
//! `g(l) = sin((2N-1) pi l) cos(pi l) - (2N-1) cos((2N-1) pi l) sin(pi l)`,
//! which equals `-sin^2(pi l) dD/dl / pi` for the Dirichlet-kernel term `D`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::algebra::deformation_factor;
use crate::error::{invalid, Result};
use crate::exec::{linspace_point, Execution};

fn check_n(n_qubits: usize) -> Result<()> {
    if n_qubits < 2 {
        return Err(invalid("R is constant for a single qubit; need N >= 2"));
    }
    Ok(())
}

fn residual_unchecked(n_qubits: usize, spacing: f64) -> f64 {
    let order = (2 * n_qubits - 1) as f64;
    let theta = PI * spacing;
    (order * theta).sin() * theta.cos() - order * (order * theta).cos() * theta.sin()
}

pub fn stationarity_residual(n_qubits: usize, spacing: f64) -> Result<f64> {
    check_n(n_qubits)?;
    Ok(residual_unchecked(n_qubits, spacing))
}

/// `T_k(x)` by the three-term recurrence.
pub fn chebyshev_t(k: usize, x: f64) -> f64 {
    chebyshev(k, x, 1.0, x)
}

/// `U_k(x)` by the three-term recurrence.
pub fn chebyshev_u(k: usize, x: f64) -> f64 {
    chebyshev(k, x, 1.0, 2.0 * x)
}

fn chebyshev(k: usize, x: f64, p0: f64, p1: f64) -> f64 {
    if k == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..k {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `U_{2N-1}(x) - 2N T_{2N-1}(x)` at `x = cos(pi l)`.
pub fn chebyshev_residual(n_qubits: usize, spacing: f64) -> Result<f64> {
    check_n(n_qubits)?;
    let x = (PI * spacing).cos();
    let k = 2 * n_qubits - 1;
    Ok(chebyshev_u(k, x) - 2.0 * n_qubits as f64 * chebyshev_t(k, x))
}

/// Central finite difference of `R(N, l)` in `l`.
pub fn deformation_slope(n_qubits: usize, spacing: f64, step: f64) -> Result<f64> {
    let up = deformation_factor(n_qubits, spacing + step)?.value;
    let down = deformation_factor(n_qubits, spacing - step)?.value;
    Ok((up - down) / (2.0 * step))
}

const BRACKET_TOL: f64 = 1e-12;
const DEDUP_TOL: f64 = 1e-10;

/// Bisects a sign change of `f` on `[a, b]` until the bracket stops shrinking,
/// which is never looser than `BRACKET_TOL`. Returns whichever end has the
/// smaller residual.
pub(crate) fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    let mut fb = fb;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    debug_assert!(b - a <= BRACKET_TOL);
    if fa.abs() <= fb.abs() {
        a
    } else {
        b
    }
}

/// Zeros of `f` on `[lo, hi]`: sign changes between `points` uniform samples,
/// each refined by bisection. Ascending, deduplicated within `1e-10`.
pub fn bracket_roots<F>(f: F, lo: f64, hi: f64, points: usize, exec: Execution) -> Vec<f64>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    let grid: Vec<(f64, f64)> = exec.map_indexed(points, |i| {
        let l = linspace_point(lo, hi, points, i);
        (l, f(l))
    });
    let brackets: Vec<(f64, f64)> = grid
        .windows(2)
        .filter_map(|w| {
            let (a, fa) = w[0];
            let (b, fb) = w[1];
            if fa == 0.0 {
                Some((a, a))
            } else if (fa < 0.0) != (fb < 0.0) && fb != 0.0 {
                Some((a, b))
            } else {
                None
            }
        })
        .chain(grid.last().filter(|p| p.1 == 0.0).map(|p| (p.0, p.0)))
        .collect();
    let mut roots = exec.map_indexed(brackets.len(), |k| {
        let (a, b) = brackets[k];
        if a == b {
            a
        } else {
            bisect(&f, a, b)
        }
    });
    roots.dedup_by(|b, a| (*b - *a).abs() <= DEDUP_TOL);
    roots
}

/// Stationary points of `R(N, l)` in `[l_min, l_max]`, ascending.
pub fn find_stationary_points(n_qubits: usize, l_min: f64, l_max: f64) -> Result<Vec<f64>> {
    find_stationary_points_with(n_qubits, l_min, l_max, Execution::default())
}

pub fn find_stationary_points_with(
    n_qubits: usize,
    l_min: f64,
    l_max: f64,
    exec: Execution,
) -> Result<Vec<f64>> {
    check_n(n_qubits)?;
    if !(l_min > 0.0 && l_max.is_finite() && l_max > l_min) {
        return Err(invalid(format!("bad scan interval [{l_min}, {l_max}]")));
    }
    // step <= 1 / (20 (2N - 1))
    let per_unit = 20.0 * (2 * n_qubits - 1) as f64;
    let points = ((l_max - l_min) * per_unit).ceil() as usize + 1;
    Ok(bracket_roots(
        |l| residual_unchecked(n_qubits, l),
        l_min,
        l_max,
        points.max(2),
        exec,
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossoverReport {
    pub n_qubits: usize,
    pub crossover_spacing: f64,
    pub deformation_at_crossover: f64,
    /// `2 / l*`.
    pub spins_per_wavelength: f64,
    /// Stationary points in `(0, 1/2]`, ascending.
    pub stationary_points: Vec<f64>,
}

/// Global minimizer of `R` over its stationary points in `(0, 1/2]`.
pub fn crossover_point(n_qubits: usize) -> Result<CrossoverReport> {
    crossover_point_with(n_qubits, Execution::default())
}

pub fn crossover_point_with(n_qubits: usize, exec: Execution) -> Result<CrossoverReport> {
    check_n(n_qubits)?;
    let order = (2 * n_qubits - 1) as f64;
    // The first extremum sits near 1.43 / (2N - 1); start well below it and
    // run one grid step past 1/2 so the symmetric root there is bracketed.
    let lo = 0.1 / order;
    let hi = 0.5 + 1.0 / (20.0 * order);
    let stationary_points: Vec<f64> = find_stationary_points_with(n_qubits, lo, hi, exec)?
        .into_iter()
        .filter(|&l| l <= 0.5 + DEDUP_TOL)
        .collect();
    let values = exec.map_indexed(stationary_points.len(), |k| {
        deformation_factor(n_qubits, stationary_points[k]).map(|d| d.value)
    });
    let mut best: Option<(f64, f64)> = None;
    for (&l, value) in stationary_points.iter().zip(values) {
        let value = value?;
        if best.is_none_or(|(_, v)| value < v) {
            best = Some((l, value));
        }
    }
    let (crossover_spacing, deformation_at_crossover) =
        best.ok_or_else(|| invalid("no stationary point found in (0, 1/2]"))?;
    Ok(CrossoverReport {
        n_qubits,
        crossover_spacing,
        deformation_at_crossover,
        spins_per_wavelength: 2.0 / crossover_spacing,
        stationary_points,
    })
}
