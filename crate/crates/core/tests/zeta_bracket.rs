use casimir_core::specialfn::zeta_int;

/// `Σ_{n≤N} n^{−s}` plus the integral bounds on the tail:
/// `∫_{N+1}^∞ < tail < ∫_N^∞`.
fn bracket(s: i32, n: u32) -> (f64, f64) {
    // Smallest terms first.
    let partial: f64 = (1..=n).rev().map(|k| (k as f64).powi(-s)).sum();
    let lower = partial + (n as f64 + 1.0).powi(1 - s) / (s - 1) as f64;
    let upper = partial + (n as f64).powi(1 - s) / (s - 1) as f64;
    (lower, upper)
}

#[test]
fn zeta_values_lie_in_direct_summation_brackets() {
    for &(s, n) in &[(3, 20_000u32), (4, 2_000), (5, 500), (7, 100)] {
        let (lo, hi) = bracket(s, n);
        let z = zeta_int(s as u32).unwrap();
        let slack = 4.0 * f64::EPSILON;
        assert!(
            lo - slack <= z && z <= hi + slack,
            "s={s}: {lo} <= {z} <= {hi}"
        );
        assert!(hi - lo < 1e-11);
    }
}

#[test]
fn zeta3_to_full_precision() {
    assert_eq!(zeta_int(3).unwrap(), 1.2020569031595942);
}
