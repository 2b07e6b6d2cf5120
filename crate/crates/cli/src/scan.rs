//! Per-command grid evaluation.

use std::f64::consts::PI;

use coulomb_wavepacket::averaging::{average_with, ImpactEvaluator};
use coulomb_wavepacket::partialwave::{
    forward_series, free_amplitude, head_on_series, AmplitudeModel, PartialWaveSeries,
};
use coulomb_wavepacket::{
    rutherford_probability, scenario_from_physical, theta_deviation, theta_one, DeltaPolicy, PhaseShiftTable,
    QuadratureSpec, Scenario, WignerSource,
};
use rayon::prelude::*;

use crate::config::{Command, DeltaChoice, Grid, ScanSpec};
use crate::svg::{self, Series};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
}

impl Cell {
    pub fn as_f64(self) -> f64 {
        match self {
            Cell::Int(v) => v as f64,
            Cell::Real(v) => v,
        }
    }
}

/// Rows in grid order plus whatever the command reports besides the table.
#[derive(Debug, Clone)]
pub struct ScanOutput {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<String>,
    /// Lines echoed to stdout.
    pub summary: Vec<String>,
    pub svg: Option<String>,
}

pub fn run_scan(spec: &ScanSpec) -> Result<ScanOutput, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.threads)
        .build()
        .map_err(|e| CliError::Config(format!("threads: {e}")))?;
    let mut out = pool.install(|| match spec.command {
        Command::ShadowZone => shadow_zone(spec),
        Command::ForwardVsBeta => forward_vs_beta(spec),
        Command::LmDensity => lm_density(spec),
        Command::BetaPhiProfile => beta_phi_profile(spec),
        Command::AveragedPoints => averaged_points(spec),
        Command::PhysicalMap => physical_map(spec),
    })?;
    if spec.format == crate::config::Format::Csv {
        out.svg = None;
    }
    Ok(out)
}

fn grid(spec: &ScanSpec) -> Grid {
    spec.grid.expect("command has a grid")
}

/// `δ` and the resulting value for one series under a per-point policy.
fn pick(series: &PartialWaveSeries<f64>, spec: &ScanSpec, origin: Option<f64>) -> Result<(f64, f64, f64), CliError> {
    let r = match (spec.delta, origin) {
        (_, Some(d)) => series.result(d),
        (DeltaChoice::Zero, _) => series.result(0.0),
        (DeltaChoice::Fixed(d), _) => series.result(d),
        (DeltaChoice::Maximize, _) => series.maximize(&spec.delta_search)?.1,
        (DeltaChoice::MaximizeAtOrigin, None) => unreachable!("origin δ is resolved before the grid"),
    };
    Ok((r.value, r.delta_used, r.truncation_estimate))
}

fn shadow_zone(spec: &ScanSpec) -> Result<ScanOutput, CliError> {
    let table = PhaseShiftTable::for_beta_range(spec.eta, spec.eps, 0.0, &spec.truncation)?;
    let base = Scenario::new(spec.eta, spec.eps)?;
    let thetas = grid(spec).points();
    let rows = thetas
        .par_iter()
        .map(|&theta| {
            let s = base.with_theta(theta)?;
            let series = head_on_series(&s, &table, &spec.truncation, spec.source)?;
            let (p, delta, trunc) = pick(&series, spec, None)?;
            let p_ruth = rutherford_probability(theta, spec.eta, spec.eps)?;
            Ok(vec![
                Cell::Real(theta),
                Cell::Real(p),
                Cell::Real(p_ruth),
                Cell::Real(p / p_ruth),
                Cell::Real(delta),
                Cell::Real(trunc),
            ])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let svg = svg::line_plot(
        "Head-on probability vs Rutherford",
        "theta (deg)",
        "P",
        &[
            Series::new("P model", column_pairs(&rows, 0, 1, true)),
            Series::new("P Rutherford", column_pairs(&rows, 0, 2, true)),
        ],
        true,
    );
    Ok(ScanOutput {
        columns: vec!["theta", "p_model", "p_ruth", "ratio", "delta_used", "truncation_estimate"],
        rows,
        notes: vec![format!("beta = 0; Wigner source {}", source_name(spec.source))],
        summary: Vec::new(),
        svg: Some(svg),
    })
}

fn forward_vs_beta(spec: &ScanSpec) -> Result<ScanOutput, CliError> {
    let g = grid(spec);
    let table = PhaseShiftTable::for_beta_range(spec.eta, spec.eps, g.hi, &spec.truncation)?;
    let rows = g
        .points()
        .par_iter()
        .map(|&beta| {
            let series = forward_series(&table, beta, &spec.truncation)?;
            let (p, delta, trunc) = pick(&series, spec, None)?;
            Ok(vec![Cell::Real(beta), Cell::Real(p), Cell::Real(delta), Cell::Real(trunc)])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let svg = svg::line_plot(
        "Forward scattering probability",
        "beta",
        "P(theta = 0)",
        &[Series::new("P forward", column_pairs(&rows, 0, 1, false))],
        false,
    );
    Ok(ScanOutput {
        columns: vec!["beta", "p_forward", "delta_used", "truncation_estimate"],
        rows,
        notes: vec!["theta = 0, Stirling-reduced amplitude".into()],
        summary: Vec::new(),
        svg: Some(svg),
    })
}

fn lm_density(spec: &ScanSpec) -> Result<ScanOutput, CliError> {
    let s = Scenario::new(0.0, spec.eps)?.with_beta(spec.beta)?;
    let m_cut = spec.truncation.m_cut_for(spec.beta) as i64;
    let g = grid(spec);
    let (lo, hi) = if g.lo.is_nan() {
        let half = 2.0 / spec.eps;
        ((s.bp() - half).max(0.0).floor(), (s.bp() + half).ceil())
    } else {
        (g.lo, g.hi)
    };
    let ls: Vec<u32> = Grid { lo, hi, steps: g.steps }.points().iter().map(|&l| l.round() as u32).collect();
    if ls.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::Config(format!("steps: {} points do not fit into integer l from {lo} to {hi}", g.steps)));
    }
    let rows: Vec<Vec<Cell>> = ls
        .par_iter()
        .flat_map_iter(|&l| {
            (-m_cut..=m_cut).map(move |m| {
                let a = if m.unsigned_abs() > l as u64 {
                    0.0
                } else {
                    free_amplitude(l, m as i32, spec.eps, spec.beta, AmplitudeModel::Full).0
                };
                vec![Cell::Int(l as i64), Cell::Int(m), Cell::Real(a * a)]
            })
        })
        .collect();
    let xs: Vec<f64> = ls.iter().map(|&l| l as f64).collect();
    let ys: Vec<f64> = (-m_cut..=m_cut).map(|m| m as f64).collect();
    let values: Vec<f64> = rows.iter().map(|r| r[2].as_f64()).collect();
    let svg = svg::heatmap("Free-packet density |Phi(l, m)|^2", "l", "m", &xs, &ys, &values);
    Ok(ScanOutput {
        columns: vec!["l", "m", "density"],
        rows,
        notes: vec![format!("l range [{lo}, {hi}], |m| <= {m_cut}")],
        summary: Vec::new(),
        svg: Some(svg),
    })
}

fn beta_phi_profile(spec: &ScanSpec) -> Result<ScanOutput, CliError> {
    let g = grid(spec);
    let ev = ImpactEvaluator::new(spec.theta, spec.eta, spec.eps, g.hi, spec.kernel, &spec.truncation)?;
    let origin = match spec.delta {
        DeltaChoice::MaximizeAtOrigin => Some(ev.origin_delta(&spec.delta_search)?),
        _ => None,
    };
    let phis: Vec<f64> = (0..spec.phi_steps).map(|j| 2.0 * PI * j as f64 / spec.phi_steps as f64).collect();
    let p_ruth = rutherford_probability(spec.theta, spec.eta, spec.eps)?;
    let betas = g.points();
    let blocks = betas
        .par_iter()
        .map(|&beta| {
            ev.series_at(beta, &phis)?
                .iter()
                .zip(&phis)
                .map(|(series, &phi)| {
                    let (p, delta, _) = pick(series, spec, origin)?;
                    let gauss = p_ruth * (-beta * beta).exp();
                    Ok(vec![
                        Cell::Real(beta),
                        Cell::Real(phi),
                        Cell::Real(p),
                        Cell::Real(p_ruth),
                        Cell::Real(gauss),
                        Cell::Real(delta),
                    ])
                })
                .collect::<Result<Vec<_>, CliError>>()
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let rows: Vec<Vec<Cell>> = blocks.into_iter().flatten().collect();
    let ys: Vec<f64> = phis.iter().map(|p| p.to_degrees()).collect();
    // heatmap rows run over φ, columns over β
    let mut values = vec![0.0; betas.len() * phis.len()];
    for (k, r) in rows.iter().enumerate() {
        values[(k % phis.len()) * betas.len() + k / phis.len()] = r[2].as_f64() / p_ruth;
    }
    let svg = svg::heatmap("P / P_Ruth over the impact plane", "beta", "phi (deg)", &betas, &ys, &values);
    let mut notes = vec![format!(
        "theta = {}; kernel {}",
        spec.theta,
        if ev.uses_small_angle_kernel() { "small-angle closed form" } else { "general partial-wave sum" }
    )];
    if let Some(d) = origin {
        notes.push(format!("delta held at {d:.16e}"));
    }
    Ok(ScanOutput {
        columns: vec!["beta", "phi", "p_model", "p_ruth", "p_ruth_gauss", "delta_used"],
        rows,
        notes,
        summary: Vec::new(),
        svg: Some(svg),
    })
}

pub fn quadrature_of(spec: &ScanSpec) -> QuadratureSpec<f64> {
    QuadratureSpec {
        beta_max: spec.beta_max,
        n_beta: spec.n_beta,
        n_phi: spec.n_phi,
        delta_policy: match spec.delta {
            DeltaChoice::Zero => DeltaPolicy::Zero,
            DeltaChoice::Maximize => DeltaPolicy::MaximizePerPoint,
            DeltaChoice::MaximizeAtOrigin => DeltaPolicy::MaximizeAtOrigin,
            DeltaChoice::Fixed(d) => DeltaPolicy::Fixed(d),
        },
        kernel: spec.kernel,
        truncation: spec.truncation,
        delta_search: spec.delta_search,
    }
}

fn averaged_points(spec: &ScanSpec) -> Result<ScanOutput, CliError> {
    let quad = quadrature_of(spec);
    quad.validate(spec.eps)?;
    let rows = grid(spec)
        .points()
        .par_iter()
        .map(|&theta| {
            let ev = ImpactEvaluator::new(theta, spec.eta, spec.eps, quad.beta_max, quad.kernel, &quad.truncation)?;
            let r = average_with(&ev, &quad)?.result;
            let p_ruth = rutherford_probability(theta, spec.eta, spec.eps)?;
            Ok(vec![
                Cell::Real(theta),
                Cell::Real(r.value),
                Cell::Real(p_ruth),
                Cell::Real(r.value / p_ruth),
                Cell::Real(r.delta_used),
                Cell::Real(r.truncation_estimate),
            ])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let svg = svg::line_plot(
        "Impact-averaged probability / Rutherford",
        "theta (deg)",
        "P_avg / P_Ruth",
        &[Series::new("ratio", column_pairs(&rows, 0, 3, true))],
        false,
    );
    Ok(ScanOutput {
        columns: vec!["theta", "p_avg", "p_ruth", "ratio", "delta_used", "truncation_estimate"],
        rows,
        notes: vec![format!("beta_max = {}, {} x {} nodes", quad.beta_max, quad.n_beta, quad.n_phi)],
        summary: Vec::new(),
        svg: Some(svg),
    })
}

fn physical_map(spec: &ScanSpec) -> Result<ScanOutput, CliError> {
    let p = spec.physical;
    let m = scenario_from_physical(&p)?;
    let eta = m.scenario.eta();
    let td = theta_deviation(eta, p.eps);
    let t1 = theta_one(eta, p.eps);
    let summary = vec![
        format!("eta = {eta:.4}"),
        format!("sigma_x = {:.4e} angstrom", m.sigma_x),
        format!("R = {:.4} angstrom", m.r),
        format!("theta_D = {td:.4} rad"),
        format!("theta_1 = {t1:.4} rad"),
    ];
    let row = vec![
        Cell::Int(p.z1 as i64),
        Cell::Int(p.z2 as i64),
        Cell::Real(p.kinetic_energy),
        Cell::Real(p.projectile_mass),
        Cell::Real(p.eps),
        Cell::Real(eta),
        Cell::Real(m.p_momentum),
        Cell::Real(m.sigma_p),
        Cell::Real(m.sigma_x),
        Cell::Real(m.r),
        Cell::Real(td),
        Cell::Real(t1),
    ];
    Ok(ScanOutput {
        columns: vec![
            "z1",
            "z2",
            "energy_mev",
            "mass_mev",
            "eps",
            "eta",
            "p_mev",
            "sigma_p_mev",
            "sigma_x_angstrom",
            "r_angstrom",
            "theta_d",
            "theta_1",
        ],
        rows: vec![row],
        notes: Vec::new(),
        summary,
        svg: None,
    })
}

fn column_pairs(rows: &[Vec<Cell>], x: usize, y: usize, degrees: bool) -> Vec<(f64, f64)> {
    rows.iter()
        .map(|r| {
            let xv = r[x].as_f64();
            (if degrees { xv.to_degrees() } else { xv }, r[y].as_f64())
        })
        .collect()
}

/// Reference Wigner source name used in metadata.
pub fn source_name(s: WignerSource) -> &'static str {
    match s {
        WignerSource::Exact => "exact",
        WignerSource::SmallAngle => "small_angle",
        WignerSource::UniformM0 => "uniform_m0",
    }
}
