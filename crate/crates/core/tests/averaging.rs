use std::f64::consts::PI;

use coulomb_wavepacket::averaging::{average_with, integrate_impact_plane, ImpactEvaluator, KernelChoice};
use coulomb_wavepacket::*;

const ETA: f64 = 22.8;
const EPS: f64 = 0.001;

fn evaluator(theta: f64) -> ImpactEvaluator<f64> {
    let q = QuadratureSpecF64::default();
    ImpactEvaluator::new(theta, ETA, EPS, q.beta_max, q.kernel, &q.truncation).unwrap()
}

#[test]
fn gaussian_normalization() {
    for a in [1.0, 2.5e-9] {
        let v = integrate_impact_plane(10.0_f64, 64, 16, |b, _| a * (-b * b).exp()).unwrap();
        assert!((v / a - 1.0).abs() < 1e-10);
    }
}

#[test]
fn small_angle_averages_match_rutherford() {
    let q = QuadratureSpecF64::default();
    for theta in [0.10, 0.15, 0.20] {
        let ev = evaluator(theta);
        assert!(ev.uses_small_angle_kernel());
        let avg = average_with(&ev, &q).unwrap().result.value;
        let ratio = avg / rutherford_probability(theta, ETA, EPS).unwrap();
        assert!((ratio - 1.0).abs() < 0.01, "θ = {theta}: {ratio}");

        let doubled = average_with(&ev, &QuadratureSpec { n_beta: 64, ..q }).unwrap().result.value;
        assert!(((avg - doubled) / doubled).abs() < 1e-6, "θ = {theta}");
    }
}

#[test]
fn azimuthal_rule_is_exact() {
    let ev = evaluator(0.12);
    let q = QuadratureSpec { n_beta: 12, delta_policy: DeltaPolicy::Fixed(0.3), ..QuadratureSpecF64::default() };
    let a = average_with(&ev, &q).unwrap().result.value;
    let b = average_with(&ev, &QuadratureSpec { n_phi: 32, ..q }).unwrap().result.value;
    assert!(((a - b) / b).abs() < 1e-12);
}

#[test]
fn integrand_even_in_phi() {
    let ev = evaluator(0.15);
    let n = 16;
    let full: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
    let half: Vec<f64> = (0..=n / 2).map(|j| PI * j as f64 / (n / 2) as f64).collect();
    for beta in [0.4, 1.3, 2.7] {
        let pf: f64 = ev.series_at(beta, &full).unwrap().iter().map(|s| s.evaluate(0.3)).sum::<f64>() / n as f64;
        // trapezoid on [0, π], exact for the degree-8 cosine series
        let ph = ev.series_at(beta, &half).unwrap();
        let inner: f64 = ph[1..n / 2].iter().map(|s| s.evaluate(0.3)).sum();
        let ends = 0.5 * (ph[0].evaluate(0.3) + ph[n / 2].evaluate(0.3));
        let pm = (inner + ends) / (n / 2) as f64;
        assert!(((pf - pm) / pf).abs() < 1e-12, "β = {beta}");
        for (j, &phi) in full.iter().enumerate().skip(1) {
            let a = ev.series_at(beta, &[phi]).unwrap()[0].evaluate(0.3);
            let b = ev.series_at(beta, &[2.0 * PI - phi]).unwrap()[0].evaluate(0.3);
            assert!(((a - b) / a).abs() < 1e-12, "β = {beta}, j = {j}");
        }
    }
}

#[test]
fn delta_policies_are_recorded() {
    let ev = evaluator(0.15);
    let base = QuadratureSpec { n_beta: 8, ..QuadratureSpecF64::default() };
    let zero = average_with(&ev, &QuadratureSpec { delta_policy: DeltaPolicy::Zero, ..base }).unwrap();
    assert_eq!(zero.result.delta_used, 0.0);
    let origin = average_with(&ev, &base).unwrap();
    assert!(origin.nodes.iter().all(|n| n.delta == origin.result.delta_used));
    assert!(origin.result.value > zero.result.value);
    assert_eq!(origin.nodes.len(), 8 * 16);
}

#[test]
fn identity_at_right_angle() {
    let r = averaging_identity_check(ETA, EPS).unwrap();
    assert!(r.average_within(0.05), "{}", r.average_ratio);
    assert!(r.fit_within_bounds(), "A/P = {}, c = {}", r.amplitude_ratio, r.exponent);
}

#[test]
fn general_kernel_is_used_at_large_angle() {
    let q = QuadratureSpecF64::default();
    let ev = ImpactEvaluator::new(1.0, ETA, EPS, q.beta_max, KernelChoice::Auto, &q.truncation).unwrap();
    assert!(!ev.uses_small_angle_kernel());
    assert!(ImpactEvaluator::new(0.1, ETA, EPS, 3.5, KernelChoice::SmallAngle, &q.truncation).unwrap_err().is_regime());
}

#[test]
fn quadrature_spec_guards() {
    let q = QuadratureSpecF64::default();
    assert!(average_over_impact(0.1, ETA, EPS, &QuadratureSpec { n_phi: 8, ..q }).is_err());
    assert!(average_over_impact(0.1, ETA, EPS, &QuadratureSpec { beta_max: 40.0, ..q }).is_err());
}
