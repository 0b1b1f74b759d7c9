use core::f64::consts::PI;

use casimir_core::specialfn::zeta_int;
use casimir_core::thermo::{curve, eps_c, eps_c_zero, evaluate, phi_c, sigma_c, sigma_classical};
use casimir_core::{DimlessTemp, SeriesControl};

fn temp(t: f64) -> DimlessTemp {
    DimlessTemp::new(t).unwrap()
}

fn phi(t: f64) -> f64 {
    phi_c(temp(t), SeriesControl::default()).unwrap()
}

#[test]
fn finite_difference_identities() {
    let ctl = SeriesControl::default();
    let h = 1e-4;
    for &t in &[0.2, 0.5, 1.0, 2.0, 5.0] {
        let dphi = (phi(t + h) - phi(t - h)) / (2.0 * h);
        let p = evaluate(temp(t), ctl).unwrap();
        assert!((p.sigma_c + dphi).abs() < 1e-8, "sigma at t={t}");
        assert!(
            (p.eps_c - (p.phi_c - t * dphi)).abs() < 1e-8,
            "eps at t={t}"
        );
    }
}

#[test]
fn low_temperature_expansion() {
    let ctl = SeriesControl::default();
    let z3 = zeta_int(3).unwrap();
    let t: f64 = 0.1;
    let want = -1.0 / 360.0 + 2.0 * z3 * t.powi(3) / PI.powi(3) - 2.0 * t.powi(4) / 15.0;
    assert!((eps_c(temp(t), ctl).unwrap() - want).abs() < 5e-13);

    let t = 1e-3;
    assert!((eps_c(temp(t), ctl).unwrap() + 1.0 / 360.0).abs() < 1e-9);
    assert!((phi_c(temp(t), ctl).unwrap() + 1.0 / 360.0).abs() < 1e-9);
}

#[test]
fn brute_force_reference_values() {
    // 40-digit direct summation of Σ 4t³ coth(y) csch²(y)/(2πm).
    let ctl = SeriesControl::default();
    assert!((eps_c(temp(0.1), ctl).unwrap() + 2.7135748e-3).abs() < 1e-8);
    assert!((eps_c(temp(1.0), ctl).unwrap() + 8.8811e-6).abs() < 2e-9);
    assert!((eps_c(temp(0.1), ctl).unwrap() + 2.713574751903737e-3).abs() < 1e-14);
    assert!((eps_c(temp(1.0), ctl).unwrap() + 8.880583750092741e-6).abs() < 1e-14);
}

#[test]
fn classical_limit() {
    let ctl = SeriesControl::default();
    let limit = zeta_int(3).unwrap() / (4.0 * PI.powi(3));
    assert!((sigma_classical() - limit).abs() < 1e-17);
    assert!(eps_c(temp(5.0), ctl).unwrap().abs() < 1e-20);
    assert!((sigma_c(temp(5.0), ctl).unwrap() - limit).abs() < 1e-12);
    for &t in &[5.0, 7.5, 12.0] {
        assert!(
            (phi_c(temp(t), ctl).unwrap() + t * limit).abs() < 1e-15 * t.max(1.0),
            "t={t}"
        );
    }
    assert!((phi_c(temp(5.0), ctl).unwrap() / 5.0 + limit).abs() < 1e-12);
}

#[test]
fn figure_curves_are_monotone() {
    let ctl = SeriesControl::default();
    let points = curve(0.0, 5.0, 501, ctl).unwrap();
    assert_eq!(points[0].eps_c, eps_c_zero());
    for w in points.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        assert!(b.satisfies_invariants());
        assert!(b.eps_c >= a.eps_c, "eps at t={}", b.t.get());
        assert!(b.phi_c < a.phi_c, "phi at t={}", b.t.get());
        assert!(b.sigma_c >= a.sigma_c, "sigma at t={}", b.t.get());
    }
}
