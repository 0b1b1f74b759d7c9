use core::f64::consts::PI;

use casimir_core::physical::{
    casimir_force_zero_t, characteristic_temperature, report, PlateConfig,
};
use casimir_core::specialfn::zeta_int;
use casimir_core::SeriesControl;

const D: f64 = 1e-6;
const L: f64 = 1e-2;

fn at_t(t: f64) -> PlateConfig {
    let base = PlateConfig::new(D, L, 0.0).unwrap();
    base.at_temperature(t * characteristic_temperature(&base) / PI)
        .unwrap()
}

fn free_energy_per_area(cfg: &PlateConfig, d: f64) -> f64 {
    let moved = cfg.at_separation(d).unwrap();
    report(&moved, SeriesControl::default())
        .unwrap()
        .free_energy
        / (L * L)
}

#[test]
fn pressure_is_minus_free_energy_gradient() {
    for &t in &[0.0, 0.5, 1.0, 5.0] {
        let cfg = at_t(t);
        let p = report(&cfg, SeriesControl::default()).unwrap().pressure;
        let h = D * 1e-5;
        let fd =
            -(free_energy_per_area(&cfg, D + h) - free_energy_per_area(&cfg, D - h)) / (2.0 * h);
        assert!(((p - fd) / p).abs() < 1e-6, "t={t}: {p} vs {fd}");
    }
}

#[test]
fn zero_temperature_force_is_energy_gradient() {
    let cfg = PlateConfig::new(D, L, 0.0).unwrap();
    let energy = |d: f64| {
        report(&cfg.at_separation(d).unwrap(), SeriesControl::default())
            .unwrap()
            .energy
    };
    let h = D * 1e-6;
    let fd = -(energy(D + h) - energy(D - h)) / (2.0 * h);
    let f = casimir_force_zero_t(&cfg).total;
    assert!(((f - fd) / f).abs() < 1e-8, "{f} vs {fd}");
}

#[test]
fn high_temperature_is_entropic() {
    let z3 = zeta_int(3).unwrap();
    let kb = 1.380649e-23;
    for &t in &[5.0, 8.0] {
        let r = report(&at_t(t), SeriesControl::default()).unwrap();
        let ratio = r.entropy * 8.0 * PI * D * D / (kb * z3 * L * L);
        assert!((ratio - 1.0).abs() < 1e-10, "t={t}: {ratio}");
        let temperature = t * r.t_c / PI;
        assert!(((r.free_energy + temperature * r.entropy) / r.free_energy).abs() < 1e-10);
    }
    let r = report(&at_t(5.0), SeriesControl::default()).unwrap();
    assert!((r.entropy - 6.603e-17).abs() < 1e-20);
}

#[test]
fn hot_plates_pressure() {
    let cfg = PlateConfig::new(D, L, 30000.0).unwrap();
    let r = report(&cfg, SeriesControl::default()).unwrap();
    assert!((r.pressure + 3.962e-2).abs() < 1e-5);
    let kb = 1.380649e-23;
    let classical = -kb * 30000.0 * zeta_int(3).unwrap() / (4.0 * PI * D * D * D);
    assert!(((r.pressure - classical) / classical).abs() < 1e-12);
}

#[test]
fn pressure_grows_with_temperature() {
    let base = PlateConfig::new(D, L, 0.0).unwrap();
    let top = 10.0 * characteristic_temperature(&base) / PI;
    let mut previous = 0.0;
    for i in 0..=200 {
        let cfg = base.at_temperature(top * i as f64 / 200.0).unwrap();
        let r = report(&cfg, SeriesControl::default()).unwrap();
        assert!(r.pressure < 0.0 && r.entropy >= 0.0);
        assert_eq!(r.t, PI * cfg.temperature() / r.t_c);
        if i > 0 {
            assert!(r.pressure <= previous, "step {i}");
        }
        previous = r.pressure;
    }
}
