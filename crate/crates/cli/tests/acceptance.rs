//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::f64::consts::PI;
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use coulomb_wavepacket::partialwave::probability_small_angle_with;
use coulomb_wavepacket::specfun::{mu_asymptotic, mu_exact, wigner_d_m0_uniform};
use coulomb_wavepacket::*;
use cwp_cli::{execute, Command, ScanArgs};

const ETA: f64 = 22.8;
const EPS: f64 = 0.001;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn rel(a: f64, b: f64) -> f64 {
    (a / b - 1.0).abs()
}

fn physical_mapping() -> Outcome {
    let p = PhysicalParams { z1: 79, z2: 2, kinetic_energy: 4.8, projectile_mass: 3727.379, eps: EPS };
    let m = scenario_from_physical(&p).unwrap();
    let (e, sx, r) = (rel(m.scenario.eta(), 22.8), rel(m.sigma_x, 0.0052), rel(m.r, 0.16));
    outcome(
        e < 0.01 && sx < 0.02 && r < 0.03,
        format!(
            "eta = {:.4} ({:.2}% / 1%), sigma_x = {:.5} A ({:.2}% / 2%), R = {:.4} A ({:.2}% / 3%)",
            m.scenario.eta(),
            100.0 * e,
            m.sigma_x,
            100.0 * sx,
            m.r,
            100.0 * r
        ),
    )
}

fn uniform_wigner() -> Outcome {
    let l = 2000;
    let mut worst = 0.0_f64;
    for k in 0..100 {
        let theta = 0.2 * k as f64 / 99.0;
        let x = theta.cos();
        let (mut p0, mut p1) = (1.0, x);
        for n in 1..l {
            let p2 = ((2 * n + 1) as f64 * x * p1 - n as f64 * p0) / (n + 1) as f64;
            p0 = p1;
            p1 = p2;
        }
        worst = worst.max((wigner_d_m0_uniform(l, 0, theta).unwrap() - p1).abs());
    }
    outcome(worst < 5e-10, format!("max |error| = {worst:.3e} (bound 5e-10)"))
}

fn appendix_sum() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for z in [50.0, 100.0, 500.0] {
        let s: f64 = (-2000i32..=2000).map(|m| mu_asymptotic::<f64>(m.unsigned_abs(), z).powi(2)).sum();
        let err = (s * (4.0 * PI * z).sqrt() - 1.0).abs();
        let exact: f64 = (-2000i32..=2000).map(|m| mu_exact::<f64>(m.unsigned_abs(), z).powi(2)).sum();
        let err_exact = (exact * (4.0 * PI * z).sqrt() - 1.0).abs();
        pass &= err < 0.0013;
        parts.push(format!("z = {z}: {err:.2e} (exact mu: {err_exact:.2e})"));
    }
    outcome(pass, format!("{} (bound 1.3e-3)", parts.join(", ")))
}

fn averaged_agreement() -> Outcome {
    let q = QuadratureSpecF64::default();
    let mut pass = true;
    let mut parts = Vec::new();
    for theta in [0.10, 0.15, 0.20] {
        let avg = average_over_impact(theta, ETA, EPS, &q).unwrap().value;
        let d = rel(avg, rutherford_probability(theta, ETA, EPS).unwrap());
        pass &= d < 0.01;
        parts.push(format!("theta = {theta}: {:.3}%", 100.0 * d));
    }
    outcome(pass, format!("{} (bound 1%)", parts.join(", ")))
}

fn right_angle_identity() -> Outcome {
    let r = averaging_identity_check(ETA, EPS).unwrap();
    let exponent = -r.exponent;
    let pass = r.average_within(0.05) && (exponent + 1.0).abs() < 0.05;
    outcome(
        pass,
        format!(
            "average / P_Ruth = {:.5} (bound 5%), fitted exponent = {:.4} (bound -1 +/- 5%), A / P_Ruth = {:.4}",
            r.average_ratio, exponent, r.amplitude_ratio
        ),
    )
}

fn forward_flux() -> Outcome {
    let betas = [10.0, 50.0, 100.0, 150.0, 200.0, 250.0];
    let ps: Vec<f64> = betas.iter().map(|&b| probability_forward(ETA, b, EPS, 0.0).unwrap().value).collect();
    let monotone = ps.windows(2).all(|w| w[1] >= w[0]);
    let last = ps[ps.len() - 1];
    let vals: Vec<String> = ps.iter().map(|p| format!("{p:.4}")).collect();
    outcome(
        monotone && (0.95..=1.02).contains(&last),
        format!("P = [{}], monotone = {monotone}, P(250) in [0.95, 1.02]", vals.join(", ")),
    )
}

fn shadow_zone() -> Outcome {
    let dir = std::env::temp_dir().join(format!("cwp-acceptance-{}", std::process::id()));
    let out = dir.join("shadow.csv");
    let args = ScanArgs {
        out: Some(out.to_string_lossy().into_owned()),
        lo: Some("0.005".into()),
        hi: Some("0.5".into()),
        steps: Some("100".into()),
        ..ScanArgs::default()
    };
    execute(Command::ShadowZone, &args).unwrap();
    let text = fs::read_to_string(&out).unwrap();
    let _ = fs::remove_dir_all(&dir);
    let rows: Vec<Vec<f64>> =
        text.lines().skip(1).map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    let below = rows.iter().filter(|r| r[0] <= 0.05).all(|r| r[1] < r[2]);
    let (worst_theta, worst) = rows
        .iter()
        .filter(|r| r[0] >= 0.25)
        .map(|r| (r[0], (r[3] - 1.0).abs()))
        .fold((0.0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    let first_ok = rows.iter().find(|r| (r[3] - 1.0).abs() < 0.05).map_or(f64::NAN, |r| r[0]);
    outcome(
        below && worst < 0.05,
        format!(
            "P < P_Ruth for theta <= 0.05: {below}; max |P/P_Ruth - 1| on [0.25, 0.5] = {:.2}% at theta = {worst_theta:.3} \
             (bound 5%); within 5% from theta = {first_ok:.3}",
            100.0 * worst
        ),
    )
}

fn constants() -> Outcome {
    let t1 = theta_one(ETA, EPS);
    let td = theta_deviation(ETA, EPS);
    outcome(
        (t1 - 0.014).abs() <= 0.0005 && (td - 0.0912).abs() <= 1e-4,
        format!("theta_1 = {t1:.6} (0.014 +/- 5e-4), theta_D = {td:.6} (0.0912 +/- 1e-4)"),
    )
}

fn oracle_equivalences() -> Outcome {
    let policy = TruncationPolicy { m_cut: Some(2), ..TruncationPolicy::default() };
    let table = build_phase_table(ETA, EPS, 3.0, &policy).unwrap();
    let mut state = 0x853c_49e6_748f_ea9b_u64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let scenario = |theta: f64, beta: f64, phi: f64, delta: f64| {
        Scenario::new(ETA, EPS)
            .unwrap()
            .with_theta(theta)
            .unwrap()
            .with_beta(beta)
            .unwrap()
            .with_phi(phi)
            .unwrap()
            .with_delta(delta)
            .unwrap()
    };
    let mut worst_small = 0.0_f64;
    for _ in 0..20 {
        let s = scenario(0.05 + 0.25 * next(), 3.0 * next(), 2.0 * PI * next(), -1.0 + 2.0 * next());
        let a = probability_small_angle_with(&s, &table, &policy).unwrap().value;
        let b = probability_general(&s, &table, &policy, WignerSource::SmallAngle).unwrap().value;
        worst_small = worst_small.max(rel(a, b));
    }
    let head_on_table = build_phase_table(ETA, EPS, 0.0, &TruncationPolicy::default()).unwrap();
    let mut worst_reduction = 0.0_f64;
    for _ in 0..20 {
        let s = scenario(0.05 + (PI - 0.1) * next(), 0.0, 0.0, -3.0 + 6.0 * next());
        let p = TruncationPolicy::default();
        let g = probability_general(&s, &head_on_table, &p, WignerSource::Exact).unwrap().value;
        let h = probability_head_on(&s, &head_on_table, &p, WignerSource::Exact).unwrap().value;
        worst_reduction = worst_reduction.max(rel(g, h));
    }
    let mut worst_norm = 0.0_f64;
    for beta in [0.0, 1.0, 3.0, 10.0] {
        let s = Scenario::new(ETA, EPS).unwrap().with_beta(beta).unwrap();
        worst_norm = worst_norm.max((lm_density(&s, &TruncationPolicy::default()).unwrap().total() - 1.0).abs());
    }
    outcome(
        worst_small < 1e-6 && worst_reduction < 1e-12 && worst_norm < 0.05,
        format!(
            "small-angle vs general {worst_small:.2e} (1e-6), beta = 0 reduction {worst_reduction:.2e} (1e-12), \
             normalization {:.2}% (5%)",
            100.0 * worst_norm
        ),
    )
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("cwp-determinism-{}", std::process::id()));
    let mut bodies = Vec::new();
    for threads in ["1", "2", "4", "0"] {
        let out = dir.join(format!("profile_{threads}.csv"));
        let args = ScanArgs {
            out: Some(out.to_string_lossy().into_owned()),
            steps: Some("13".into()),
            threads: Some(threads.into()),
            ..ScanArgs::default()
        };
        execute(Command::BetaPhiProfile, &args).unwrap();
        bodies.push(fs::read(&out).unwrap());
    }
    let _ = fs::remove_dir_all(&dir);
    let same = bodies.windows(2).all(|w| w[0] == w[1]);
    outcome(same, format!("beta_phi_profile CSV at 1, 2, 4 and all threads byte-identical: {same}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("physical mapping", physical_mapping),
        ("uniform Wigner approximation", uniform_wigner),
        ("asymptotic mu sum", appendix_sum),
        ("averaged Rutherford agreement", averaged_agreement),
        ("right-angle averaging identity", right_angle_identity),
        ("forward flux", forward_flux),
        ("shadow zone", shadow_zone),
        ("constants", constants),
        ("oracle equivalences", oracle_equivalences),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        failed += usize::from(!o.pass);
        println!(
            "{} {:>2} {name}: {} [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
