use proptest::prelude::*;

use sqc_core::algebra::{deformation_factor, deformation_sweep, ChainConfig};
use sqc_core::crossover::{
    chebyshev_residual, crossover_point_with, deformation_slope, find_stationary_points_with,
    stationarity_residual,
};
use sqc_core::oracle::{eigh, sector_basis, sector_hamiltonian};
use sqc_core::spectrum::{
    build_h1_matrix, characteristic_polynomial, solve_dressed, subspace, LadderParams,
    Normalization,
};
use sqc_core::{Execution, HalfInt};

fn ladder() -> impl Strategy<Value = (i32, i32)> {
    (0i32..=12).prop_flat_map(|r2| {
        let us: Vec<i32> = (-r2..=12 - r2).filter(|u2| (u2 + r2) % 2 == 0).collect();
        (Just(r2), proptest::sample::select(us))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dressed_states_are_orthonormal_eigenvectors(
        (r2, u2) in ladder(),
        big_r in 0.05f64..=1.0,
        det in -2.0f64..2.0,
        eta in 0.0f64..2.0,
    ) {
        let sub = subspace(HalfInt::from_doubled(u2), HalfInt::from_doubled(r2)).unwrap();
        let params = LadderParams::new(big_r, det, eta).unwrap();
        let h1 = build_h1_matrix(&sub, &params).unwrap();
        let dense = h1.to_dense();
        let d = h1.dim();
        let states = solve_dressed(&sub, &params, 0.7).unwrap();
        prop_assert_eq!(states.len(), d);
        for w in states.windows(2) {
            prop_assert!(w[0].interaction_eigenvalue <= w[1].interaction_eigenvalue);
        }
        for (i, s) in states.iter().enumerate() {
            let c = &s.coefficients;
            for row in 0..d {
                let hv: f64 = (0..d).map(|k| dense[row * d + k] * c[k]).sum();
                prop_assert!((hv - s.interaction_eigenvalue * c[row]).abs() < 1e-10);
            }
            for t in &states[i..] {
                let dot: f64 = c.iter().zip(&t.coefficients).map(|(a, b)| a * b).sum();
                let expected = if std::ptr::eq(s, t) { 1.0 } else { 0.0 };
                prop_assert!((dot - expected).abs() < 1e-10);
            }
            prop_assert!((s.total_energy - 0.7 * f64::from(u2) / 2.0 - s.interaction_eigenvalue).abs() < 1e-12);
        }
    }

    #[test]
    fn characteristic_polynomial_vanishes_on_spectrum(
        (r2, u2) in ladder(),
        big_r in 0.05f64..=1.0,
        det in -1.0f64..1.0,
        eta in 0.1f64..1.5,
    ) {
        let sub = subspace(HalfInt::from_doubled(u2), HalfInt::from_doubled(r2)).unwrap();
        let params = LadderParams::new(big_r, det, eta).unwrap();
        let p = characteristic_polynomial(&sub, &params).unwrap();
        prop_assert_eq!(p.degree(), sub.dim());
        for s in solve_dressed(&sub, &params, 0.0).unwrap() {
            let v = s.interaction_eigenvalue;
            let scale: f64 = p.coeffs().iter().enumerate()
                .map(|(k, c)| (c * v.powi(k as i32)).abs()).sum();
            prop_assert!(p.eval(v).abs() <= 1e-10 * scale.max(1.0));
        }
    }

    #[test]
    fn c0_normalization_round_trips(
        big_r in 0.2f64..=1.0,
        det in -1.0f64..1.0,
        eta in 0.2f64..1.5,
    ) {
        let sub = subspace(HalfInt::from_int(1), HalfInt::from_int(2)).unwrap();
        let params = LadderParams::new(big_r, det, eta).unwrap();
        for s in solve_dressed(&sub, &params, 0.0).unwrap() {
            if s.coefficients[0].abs() < 1e-6 {
                continue;
            }
            let c0 = s.with_normalization(Normalization::C0IsOne).unwrap();
            prop_assert!((c0.coefficients[0] - 1.0).abs() < 1e-14);
            let back = c0.with_normalization(Normalization::UnitNorm).unwrap();
            let norm: f64 = back.coefficients.iter().map(|x| x * x).sum();
            prop_assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn stationary_points_satisfy_all_residuals(n in 2usize..40) {
        let roots = find_stationary_points_with(n, 0.001, 0.999, Execution::Sequential).unwrap();
        let k = 2 * n - 1;
        prop_assert_eq!(roots.len(), 2 * n - 3);
        for &l in &roots {
            prop_assert!(stationarity_residual(n, l).unwrap().abs() <= 1e-10 * k as f64);
            prop_assert!(chebyshev_residual(n, l).unwrap().abs() <= 1e-8 * 2f64.powi(k as i32));
            prop_assert!(deformation_slope(n, l, 1e-6).unwrap().abs() <= 1e-5 * 2.0 * n as f64);
        }
    }
}

#[test]
fn sector_hamiltonian_is_hermitian_and_block_sized() {
    let config = ChainConfig::new(5, 0.3, 1.0, 0.9, 0.2).unwrap();
    for u2 in [-5, -3, -1, 1, 3] {
        let u = HalfInt::from_doubled(u2);
        let h = sector_hamiltonian(&config, u).unwrap();
        assert_eq!(h.dim(), sector_basis(5, u).unwrap().len());
        assert!(h.hermitian_defect() < 1e-15);
        let eig = eigh(&h).unwrap();
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn policies_agree_bit_for_bit() {
    let seq = deformation_sweep(30, 0.001, 0.999, 4001, Execution::Sequential).unwrap();
    let par = deformation_sweep(30, 0.001, 0.999, 4001, Execution::Parallel).unwrap();
    assert_eq!(seq, par);
    let a = crossover_point_with(200, Execution::Sequential).unwrap();
    let b = crossover_point_with(200, Execution::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn crossover_tracks_first_lobe() {
    // l* (2N - 1) pi tends to the first positive root of tan x = x.
    for n in [100, 400, 1000] {
        let rep = crossover_point_with(n, Execution::default()).unwrap();
        let x = rep.crossover_spacing * (2 * n - 1) as f64 * std::f64::consts::PI;
        assert!((x - 4.493409457909064).abs() < 1e-2, "N={n}: {x}");
        let at = deformation_factor(n, rep.crossover_spacing).unwrap().value;
        assert_eq!(at, rep.deformation_at_crossover);
    }
}
