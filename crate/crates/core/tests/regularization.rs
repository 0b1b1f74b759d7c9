use casimir_core::regular::{
    eps_c_zero_regularized, g_p_deriv_form, g_p_exact, g_p_numeric, richardson_limit, CutoffParam,
};
use casimir_core::specialfn::ExactRational;
use casimir_core::thermo::eps_c_zero;
use casimir_core::SeriesControl;

fn alphas(values: &[f64]) -> Vec<CutoffParam> {
    values
        .iter()
        .map(|&a| CutoffParam::new(a).unwrap())
        .collect()
}

#[test]
fn even_moments_vanish_exactly() {
    for p in (0..=20).step_by(2) {
        assert!(g_p_exact(p).is_zero(), "p={p}");
    }
    assert_eq!(g_p_exact(1), ExactRational::new(-1, 360).unwrap());
    assert_eq!(g_p_exact(1).to_f64(), eps_c_zero());
}

#[test]
fn closed_form_matches_derivative_form() {
    let ctl = SeriesControl::default();
    for p in 0..=3 {
        for a in alphas(&[1.0, 0.5, 0.25]) {
            let n = g_p_numeric(p, a, ctl).unwrap();
            let d = g_p_deriv_form(p, a).unwrap();
            assert!((n - d).abs() < 1e-9, "p={p} alpha={}: {n} vs {d}", a.get());
        }
    }
}

#[test]
fn extrapolation_recovers_exact_limits() {
    let ctl = SeriesControl::default();
    let default = alphas(&[0.5, 0.25, 0.125]);
    let e0 = richardson_limit(1, &default, ctl).unwrap();
    assert!((e0 + 1.0 / 360.0).abs() < 1e-6);
    for p in 0..=8 {
        let g = richardson_limit(p, &default, ctl).unwrap();
        let exact = g_p_exact(p).to_f64();
        assert!((g - exact).abs() < 1e-6, "p={p}: {g} vs {exact}");
    }
}

#[test]
fn mode_count_is_separation_independent() {
    let ctl = SeriesControl::default();
    let g0 = richardson_limit(0, &alphas(&[0.25, 0.125, 0.0625]), ctl).unwrap();
    assert!(g0.abs() < 1e-8, "{g0:e}");
}

#[test]
fn regularized_energy_approaches_limit() {
    let ctl = SeriesControl::default();
    let mut previous = f64::INFINITY;
    for a in alphas(&[1.0, 0.5, 0.25, 0.125]) {
        let gap = (eps_c_zero_regularized(a, ctl).unwrap() - eps_c_zero()).abs();
        assert!(gap < previous);
        previous = gap;
    }
}
