//! Integration of the probability over the impact-parameter plane,
//! `(1/π) ∫_0^{β_max} β dβ ∫_0^{2π} dφ P(θ, β, φ)`.

use crate::optimize::DeltaSearch;
use crate::partialwave::{
    rutherford_probability, GeneralKernel, PartialWaveSeries, PhaseShiftTable, ProbabilityResult, SmallAngleKernel,
    TruncationPolicy, WignerSource, SMALL_ANGLE_BETA_MAX,
};
use crate::quadrature::GaussLegendre;
use crate::summation::CompensatedSum;
use crate::{Error, Real, Result};

/// How `δ` is chosen at each quadrature node.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum DeltaPolicy<F> {
    Zero,
    /// Maximize at `β = 0, φ = 0` and hold that `δ` across the grid.
    #[default]
    MaximizeAtOrigin,
    MaximizePerPoint,
    Fixed(F),
}

/// Which probability kernel the integrand uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelChoice {
    /// Small-angle closed form for `0 < θ ≤ 0.5` and `β_max ≤ 3`, exact
    /// general kernel otherwise.
    #[default]
    Auto,
    SmallAngle,
    General(WignerSource),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec<F> {
    pub beta_max: F,
    /// Gauss-Legendre nodes on `[0, β_max]`.
    pub n_beta: usize,
    /// Uniform azimuthal nodes; at least 9, which integrates trigonometric
    /// polynomials of degree 8 exactly.
    pub n_phi: usize,
    pub delta_policy: DeltaPolicy<F>,
    pub kernel: KernelChoice,
    pub truncation: TruncationPolicy<F>,
    pub delta_search: DeltaSearch<F>,
}

impl<F: Real> Default for QuadratureSpec<F> {
    fn default() -> Self {
        Self {
            beta_max: F::lit(3.0),
            n_beta: 32,
            n_phi: 16,
            delta_policy: DeltaPolicy::default(),
            kernel: KernelChoice::default(),
            truncation: TruncationPolicy::default(),
            delta_search: DeltaSearch::default(),
        }
    }
}

impl<F: Real> QuadratureSpec<F> {
    pub fn validate(&self, eps: F) -> Result<()> {
        if self.n_phi < 9 {
            return Err(Error::param("n_phi", format!("must be at least 9, got {}", self.n_phi)));
        }
        if self.n_beta == 0 {
            return Err(Error::param("n_beta", "must be at least 1"));
        }
        if !(self.beta_max > F::zero()) {
            return Err(Error::param("beta_max", format!("must be positive, got {}", self.beta_max)));
        }
        let bound = eps.sqrt().recip();
        if self.beta_max > bound {
            return Err(Error::param("beta_max", format!("{} exceeds 1/√ε = {bound}", self.beta_max)));
        }
        self.truncation.validate()?;
        self.delta_search.validate()
    }

    /// Azimuthal nodes `2πj/n_phi`.
    pub fn phi_nodes(&self) -> Vec<F> {
        (0..self.n_phi).map(|j| F::TAU() * F::from_count(j) / F::from_count(self.n_phi)).collect()
    }
}

/// Probability series over the `(β, φ)` plane at one scattering angle,
/// sharing one phase table and one rotation-matrix table.
#[derive(Debug, Clone)]
pub struct ImpactEvaluator<F> {
    theta: F,
    table: PhaseShiftTable<F>,
    policy: TruncationPolicy<F>,
    kernel: Kernel<F>,
}

#[derive(Debug, Clone)]
enum Kernel<F> {
    Small(SmallAngleKernel<F>),
    General(GeneralKernel<F>),
}

impl<F: Real> ImpactEvaluator<F> {
    pub fn new(
        theta: F,
        eta: F,
        eps: F,
        beta_max: F,
        choice: KernelChoice,
        policy: &TruncationPolicy<F>,
    ) -> Result<Self> {
        let table = PhaseShiftTable::for_beta_range(eta, eps, beta_max, policy)?;
        let l_max = table.l_hi();
        let small_ok = theta > F::zero() && theta <= F::lit(0.5) && beta_max <= F::lit(SMALL_ANGLE_BETA_MAX);
        let kernel = match choice {
            KernelChoice::Auto if small_ok => Kernel::Small(SmallAngleKernel::new(theta, l_max)?),
            KernelChoice::SmallAngle => {
                if beta_max > F::lit(SMALL_ANGLE_BETA_MAX) {
                    return Err(Error::regime(
                        "average_over_impact",
                        format!("β_max = {beta_max} exceeds the small-angle kernel's {SMALL_ANGLE_BETA_MAX}"),
                    ));
                }
                Kernel::Small(SmallAngleKernel::new(theta, l_max)?)
            }
            KernelChoice::Auto => {
                Kernel::General(GeneralKernel::new(theta, WignerSource::Exact, policy.m_cut_for(beta_max), l_max)?)
            }
            KernelChoice::General(src) => {
                let m = if src == WignerSource::UniformM0 { 0 } else { policy.m_cut_for(beta_max) };
                Kernel::General(GeneralKernel::new(theta, src, m, l_max)?)
            }
        };
        Ok(Self { theta, table, policy: *policy, kernel })
    }

    pub fn theta(&self) -> F {
        self.theta
    }

    pub fn table(&self) -> &PhaseShiftTable<F> {
        &self.table
    }

    pub fn uses_small_angle_kernel(&self) -> bool {
        matches!(self.kernel, Kernel::Small(_))
    }

    /// One series per azimuth in `phis`, all at impact parameter `β`.
    pub fn series_at(&self, beta: F, phis: &[F]) -> Result<Vec<PartialWaveSeries<F>>> {
        match &self.kernel {
            Kernel::Small(k) => phis.iter().map(|&p| k.series(beta, p, &self.table, &self.policy)).collect(),
            Kernel::General(k) => {
                let h = k.harmonics(beta, &self.table, &self.policy)?;
                Ok(phis.iter().map(|&p| h.series(p)).collect())
            }
        }
    }

    /// `δ` maximizing the head-on (`β = 0, φ = 0`) probability.
    pub fn origin_delta(&self, search: &DeltaSearch<F>) -> Result<F> {
        let s = self.series_at(F::zero(), &[F::zero()])?;
        Ok(s[0].maximize(search)?.0.delta_max)
    }
}

/// One `(β, φ)` node of the impact-plane quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpactNode<F> {
    pub beta: F,
    pub phi: F,
    /// Full quadrature weight, including `β` and the `1/π` normalization.
    pub weight: F,
    pub value: F,
    pub delta: F,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImpactAverage<F> {
    pub result: ProbabilityResult<F>,
    pub nodes: Vec<ImpactNode<F>>,
}

/// Applies the impact-plane rule to an arbitrary integrand `f(β, φ)`.
pub fn integrate_impact_plane<F: Real, G: FnMut(F, F) -> F>(
    beta_max: F,
    n_beta: usize,
    n_phi: usize,
    mut f: G,
) -> Result<F> {
    let rule = GaussLegendre::on_interval(n_beta, F::zero(), beta_max)?;
    let dphi = F::TAU() / F::from_count(n_phi);
    let mut acc = CompensatedSum::new();
    for (&b, &w) in rule.nodes.iter().zip(&rule.weights) {
        for j in 0..n_phi {
            let phi = dphi * F::from_count(j);
            acc.add(w * b * dphi * f(b, phi));
        }
    }
    Ok(acc.value() / F::PI())
}

/// Impact-plane average with every node reported.
pub fn average_over_impact_detailed<F: Real>(
    theta: F,
    eta: F,
    eps: F,
    quad: &QuadratureSpec<F>,
) -> Result<ImpactAverage<F>> {
    quad.validate(eps)?;
    let ev = ImpactEvaluator::new(theta, eta, eps, quad.beta_max, quad.kernel, &quad.truncation)?;
    average_with(&ev, quad)
}

/// Impact-plane average using a prebuilt evaluator.
pub fn average_with<F: Real>(ev: &ImpactEvaluator<F>, quad: &QuadratureSpec<F>) -> Result<ImpactAverage<F>> {
    quad.validate(ev.table().eps())?;
    let fixed = match quad.delta_policy {
        DeltaPolicy::Zero => Some(F::zero()),
        DeltaPolicy::Fixed(v) => Some(v),
        DeltaPolicy::MaximizeAtOrigin => Some(ev.origin_delta(&quad.delta_search)?),
        DeltaPolicy::MaximizePerPoint => None,
    };
    let rule = GaussLegendre::on_interval(quad.n_beta, F::zero(), quad.beta_max)?;
    let phis = quad.phi_nodes();
    let dphi = F::TAU() / F::from_count(quad.n_phi);
    let mut nodes = Vec::with_capacity(quad.n_beta * quad.n_phi);
    let mut total = CompensatedSum::new();
    let mut trunc = CompensatedSum::new();
    let mut delta_moment = CompensatedSum::new();
    let mut m_cut = 0;
    let mut asym = false;
    let mut window = (u32::MAX, 0);
    for (&b, &w) in rule.nodes.iter().zip(&rule.weights) {
        let weight = w * b * dphi / F::PI();
        for (series, &phi) in ev.series_at(b, &phis)?.iter().zip(&phis) {
            let r = match fixed {
                Some(d) => series.result(d),
                None => series.maximize(&quad.delta_search)?.1,
            };
            total.add(weight * r.value);
            trunc.add(weight * r.truncation_estimate);
            delta_moment.add(weight * r.value * r.delta_used);
            m_cut = m_cut.max(r.m_cut_used);
            asym |= r.mu_asymptotic_used;
            window = (window.0.min(r.l_window.0), window.1.max(r.l_window.1));
            nodes.push(ImpactNode { beta: b, phi, weight, value: r.value, delta: r.delta_used });
        }
    }
    let value = total.value();
    // per-point maximization reports the probability-weighted mean δ
    let delta_used = fixed.unwrap_or_else(|| if value > F::zero() { delta_moment.value() / value } else { F::zero() });
    Ok(ImpactAverage {
        result: ProbabilityResult {
            value,
            delta_used,
            l_window: window,
            m_cut_used: m_cut,
            truncation_estimate: trunc.value(),
            mu_asymptotic_used: asym,
        },
        nodes,
    })
}

/// Impact-plane average of the probability at scattering angle `θ`.
pub fn average_over_impact<F: Real>(
    theta: F,
    eta: F,
    eps: F,
    quad: &QuadratureSpec<F>,
) -> Result<ProbabilityResult<F>> {
    Ok(average_over_impact_detailed(theta, eta, eps, quad)?.result)
}

/// Least-squares fit of `ln P = ln A - c β²`; returns `(A, c)`.
pub fn fit_gaussian_profile<F: Real>(points: &[(F, F)]) -> Result<(F, F)> {
    if points.len() < 2 {
        return Err(Error::FitFailure(format!("need at least two points, got {}", points.len())));
    }
    if let Some(&(b, p)) = points.iter().find(|&&(b, p)| !(p > F::zero()) || !p.is_finite() || !b.is_finite()) {
        return Err(Error::FitFailure(format!("non-positive or non-finite probability {p} at β = {b}")));
    }
    let n = F::from_count(points.len());
    let xs: Vec<F> = points.iter().map(|&(b, _)| b * b).collect();
    let ys: Vec<F> = points.iter().map(|&(_, p)| p.ln()).collect();
    let mx = xs.iter().copied().sum::<F>() / n;
    let my = ys.iter().copied().sum::<F>() / n;
    let sxx: F = xs.iter().map(|&x| (x - mx) * (x - mx)).sum();
    let sxy: F = xs.iter().zip(&ys).map(|(&x, &y)| (x - mx) * (y - my)).sum();
    if !(sxx > F::zero()) {
        return Err(Error::FitFailure("all β values coincide".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    Ok((intercept.exp(), -slope))
}

/// Result of [`averaging_identity_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport<F> {
    pub p_ruth: F,
    /// Impact-plane average at θ = π/2.
    pub average: F,
    pub average_ratio: F,
    /// `A` and `c` of the fit `A e^{-cβ²}` to the φ-averaged profile.
    pub amplitude: F,
    pub exponent: F,
    pub amplitude_ratio: F,
    /// `(β, φ-averaged P)` points the fit used.
    pub profile: Vec<(F, F)>,
}

impl<F: Real> IdentityReport<F> {
    /// `A/P_Ruth` and `c` both within `[0.95, 1.05]`.
    pub fn fit_within_bounds(&self) -> bool {
        let band = |x: F| x >= F::lit(0.95) && x <= F::lit(1.05);
        band(self.amplitude_ratio) && band(self.exponent)
    }

    pub fn average_within(&self, tol: F) -> bool {
        (self.average_ratio - F::one()).abs() < tol
    }
}

/// Profile `β` values the identity fit uses.
pub const IDENTITY_PROFILE_BETAS: [f64; 4] = [0.5, 1.0, 1.5, 2.0];

/// Checks at θ = π/2 that the averaged probability returns the Rutherford
/// value and that the β-profile falls as `e^{-β²}`. `δ` is maximized at every
/// node.
pub fn averaging_identity_check<F: Real>(eta: F, eps: F) -> Result<IdentityReport<F>> {
    let theta = F::FRAC_PI_2();
    let quad = QuadratureSpec { delta_policy: DeltaPolicy::MaximizePerPoint, ..QuadratureSpec::default() };
    quad.validate(eps)?;
    let ev = ImpactEvaluator::new(theta, eta, eps, quad.beta_max, quad.kernel, &quad.truncation)?;
    let average = average_with(&ev, &quad)?.result.value;
    let phis = quad.phi_nodes();
    let mut profile = Vec::new();
    for &b in IDENTITY_PROFILE_BETAS.iter() {
        let b = F::lit(b);
        let mut acc = CompensatedSum::new();
        for s in ev.series_at(b, &phis)? {
            acc.add(s.maximize(&quad.delta_search)?.1.value);
        }
        profile.push((b, acc.value() / F::from_count(phis.len())));
    }
    let (amplitude, exponent) = fit_gaussian_profile(&profile)?;
    let p_ruth = rutherford_probability(theta, eta, eps)?;
    Ok(IdentityReport {
        p_ruth,
        average,
        average_ratio: average / p_ruth,
        amplitude,
        exponent,
        amplitude_ratio: amplitude / p_ruth,
        profile,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_integrand_is_recovered() {
        let a = 0.37;
        let v = integrate_impact_plane(3.0_f64, 32, 16, |b, _| a * (-b * b).exp()).unwrap();
        assert!((v - a * (1.0 - (-9.0_f64).exp())).abs() < 1e-10 * a);
        let v = integrate_impact_plane(8.0_f64, 64, 16, |b, _| a * (-b * b).exp()).unwrap();
        assert!((v - a).abs() < 1e-10 * a);
    }

    #[test]
    fn trigonometric_integrands_exact() {
        // degree ≤ 8 in φ integrates exactly with 9 or more nodes
        let f = |b: f64, p: f64| (-b * b).exp() * (1.0 + 0.3 * (8.0 * p).cos() + 0.2 * (3.0 * p).sin());
        let a = integrate_impact_plane(8.0, 64, 9, f).unwrap();
        let b = integrate_impact_plane(8.0, 64, 32, f).unwrap();
        assert!((a - b).abs() < 1e-13);
        assert!((a - 1.0).abs() < 1e-10);
    }

    #[test]
    fn spec_validation() {
        let q = QuadratureSpec::<f64>::default();
        assert!(q.validate(0.001).is_ok());
        assert!(QuadratureSpec { n_phi: 8, ..q }.validate(0.001).is_err());
        assert!(QuadratureSpec { n_beta: 0, ..q }.validate(0.001).is_err());
        assert!(QuadratureSpec { beta_max: 40.0, ..q }.validate(0.001).is_err());
    }

    #[test]
    fn fit_recovers_exact_gaussian() {
        let pts: Vec<(f64, f64)> = [0.5_f64, 1.0, 1.5, 2.0].iter().map(|&b| (b, 2.5 * (-0.8 * b * b).exp())).collect();
        let (a, c) = fit_gaussian_profile(&pts).unwrap();
        assert!((a - 2.5).abs() < 1e-12 && (c - 0.8).abs() < 1e-12);
    }

    #[test]
    fn fit_failure_is_reported() {
        assert!(matches!(fit_gaussian_profile(&[(0.5, 1.0), (1.0, 0.0)]), Err(Error::FitFailure(_))));
        assert!(matches!(fit_gaussian_profile(&[(0.5_f64, 1.0)]), Err(Error::FitFailure(_))));
        assert!(matches!(fit_gaussian_profile(&[(1.0, 1.0), (1.0_f64, 0.5)]), Err(Error::FitFailure(_))));
    }
}
