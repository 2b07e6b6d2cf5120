//! Full coherent sum over `l`, `m_i`, `m_f`.
//!
//! The `φ_b` dependence enters only through `e^{i n (π/2 - φ_b)}` with
//! `n = m_i - m_f`, so per impact parameter the sum is stored as harmonics
//! `c_n(l) = e^{2iσ_l} Σ_{m_i - m_f = n} Φ(m_f) Φ(m_i) d^l_{m_i m_f}(θ)` and
//! recombined cheaply for each azimuth.

use num_complex::Complex;

use super::amplitude::{amplitude_row, free_amplitude, AmplitudeModel};
use super::{PartialWaveSeries, PhaseShiftTable, ProbabilityResult, SeriesTerm, TruncationPolicy};
use crate::real::parity_sign;
use crate::specfun::{bessel_j_seq, wigner_d_exact_seq, wigner_d_m0_uniform, wigner_d_small_angle, WIGNER_EXACT_MAX_L};
use crate::{Error, Real, Result, Scenario};

/// Source of the rotation-matrix elements in [`probability_general`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WignerSource {
    /// Exact recursion; any θ, `l ≤ WIGNER_EXACT_MAX_L`. Uses the full amplitude.
    Exact,
    /// `(-1)^n (θ/sin θ)^{1/2} J_n(lθ)` for `0 < θ ≤ 0.5`, paired with the
    /// small-angle amplitude reduction.
    SmallAngle,
    /// Uniform `m = 0` form for `θ ≤ 0.5`; head-on packets only.
    UniformM0,
}

impl WignerSource {
    pub fn amplitude_model(self) -> AmplitudeModel {
        match self {
            WignerSource::SmallAngle => AmplitudeModel::SmallAngle,
            WignerSource::Exact | WignerSource::UniformM0 => AmplitudeModel::Full,
        }
    }

    fn check_theta<F: Real>(self, theta: F) -> Result<()> {
        let ok = match self {
            WignerSource::Exact => theta >= F::zero() && theta <= F::PI(),
            WignerSource::SmallAngle => theta > F::zero() && theta <= F::lit(0.5),
            WignerSource::UniformM0 => theta >= F::zero() && theta <= F::lit(0.5),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::regime("probability_general", format!("θ = {theta} outside the range of the {self:?} source")))
        }
    }
}

#[derive(Debug, Clone)]
enum DTable<F> {
    /// `d^l_{m_i m_f}` for every pair, index `(m_i + M)(2M + 1) + (m_f + M)`.
    Pairs(Vec<Vec<F>>),
    /// Small-angle values depend only on `n = m_i - m_f`; index `n + 2M`.
    ByDifference(Vec<Vec<F>>),
    Uniform(Vec<F>),
}

/// Rotation-matrix table for one scattering angle, reusable across `β`, `φ_b`, `δ`.
#[derive(Debug, Clone)]
pub struct GeneralKernel<F> {
    theta: F,
    source: WignerSource,
    m_max: u32,
    l_max: u32,
    d: DTable<F>,
}

impl<F: Real> GeneralKernel<F> {
    pub fn new(theta: F, source: WignerSource, m_max: u32, l_max: u32) -> Result<Self> {
        source.check_theta(theta)?;
        let mm = m_max as i32;
        let d = match source {
            WignerSource::Exact => {
                if l_max > WIGNER_EXACT_MAX_L {
                    return Err(Error::regime(
                        "probability_general",
                        format!("l-window reaches {l_max}, above the exact recursion's range {WIGNER_EXACT_MAX_L}"),
                    ));
                }
                let mut pairs = Vec::with_capacity(((2 * mm + 1) * (2 * mm + 1)) as usize);
                for mi in -mm..=mm {
                    for mf in -mm..=mm {
                        pairs.push(wigner_d_exact_seq(l_max, mi, mf, theta)?);
                    }
                }
                DTable::Pairs(pairs)
            }
            WignerSource::SmallAngle => {
                let nmax = 2 * m_max;
                let sq = wigner_d_small_angle(0, 0, 0, theta)?;
                let mut by_n = vec![Vec::with_capacity(l_max as usize + 1); (2 * nmax + 1) as usize];
                for l in 0..=l_max {
                    let j = bessel_j_seq(nmax, F::from_int(l as i64) * theta);
                    for n in -(nmax as i32)..=(nmax as i32) {
                        let sign = if n >= 0 { parity_sign::<F>(n as i64) } else { F::one() };
                        by_n[(n + nmax as i32) as usize].push(sign * sq * j[n.unsigned_abs() as usize]);
                    }
                }
                DTable::ByDifference(by_n)
            }
            WignerSource::UniformM0 => {
                if m_max > 0 {
                    return Err(Error::regime("probability_general", "the uniform m = 0 source covers only β = 0"));
                }
                DTable::Uniform((0..=l_max).map(|l| wigner_d_m0_uniform(l, 0, theta)).collect::<Result<_>>()?)
            }
        };
        Ok(Self { theta, source, m_max, l_max, d })
    }

    pub fn theta(&self) -> F {
        self.theta
    }
    pub fn source(&self) -> WignerSource {
        self.source
    }
    pub fn m_max(&self) -> u32 {
        self.m_max
    }
    pub fn l_max(&self) -> u32 {
        self.l_max
    }

    #[inline]
    fn d(&self, l: u32, mi: i32, mf: i32) -> F {
        let mm = self.m_max as i32;
        match &self.d {
            DTable::Pairs(p) => p[((mi + mm) * (2 * mm + 1) + (mf + mm)) as usize][l as usize],
            DTable::ByDifference(t) => t[(mi - mf + 2 * mm) as usize][l as usize],
            DTable::Uniform(t) => t[l as usize],
        }
    }

    /// Harmonic decomposition in `φ_b` at impact parameter `β`.
    pub fn harmonics(
        &self,
        beta: F,
        table: &PhaseShiftTable<F>,
        policy: &TruncationPolicy<F>,
    ) -> Result<AzimuthalHarmonics<F>> {
        policy.validate()?;
        let eps = table.eps();
        let m_cut = policy.m_cut_for(beta);
        // every m ≠ 0 amplitude vanishes identically for a head-on packet
        let m_eff = if beta == F::zero() { 0 } else { m_cut };
        if m_eff > self.m_max {
            return Err(Error::param(
                "m_cut",
                format!("β = {beta} needs |m| ≤ {m_eff} but the kernel was built for |m| ≤ {}", self.m_max),
            ));
        }
        let (lo, hi) = policy.window(eps, beta);
        if hi > self.l_max {
            return Err(Error::param(
                "l_window",
                format!("window end {hi} exceeds the kernel's l_max = {}", self.l_max),
            ));
        }
        table.require(lo, hi)?;

        let model = self.source.amplitude_model();
        let bp = beta / (F::lit(2.0) * eps);
        let n_max = 2 * m_eff as i32;
        let width = (2 * n_max + 1) as usize;
        let mut ls = Vec::new();
        let mut xis = Vec::new();
        let mut coeffs = Vec::new();
        let mut dropped = F::zero();
        let mut asym = false;
        let mut row = Vec::with_capacity(m_eff as usize + 1);
        let mut w = vec![F::zero(); width];
        let m = m_eff as i32;
        for l in lo..=hi {
            let env = model.envelope(l, eps, bp);
            if env < policy.term_floor {
                dropped = dropped + four_eps2_l(eps, l) * env * F::from_count(width);
                continue;
            }
            asym |= amplitude_row(l, m_eff, eps, beta, model, &mut row);
            for v in w.iter_mut() {
                *v = F::zero();
            }
            for mi in -m..=m {
                let ai = row[mi.unsigned_abs() as usize];
                if ai == F::zero() {
                    continue;
                }
                for mf in -m..=m {
                    let af = row[mf.unsigned_abs() as usize];
                    if af == F::zero() {
                        continue;
                    }
                    let idx = (mi - mf + n_max) as usize;
                    w[idx] = w[idx] + af * ai * self.d(l, mi, mf);
                }
            }
            let ph = table.phase(l);
            ls.push(l);
            xis.push(table.xi(l));
            coeffs.extend(w.iter().map(|&x| ph.scale(x)));
        }
        let tail = window_tail(eps, policy.half_width(eps), bp) * F::from_count(width);
        Ok(AzimuthalHarmonics {
            n_max,
            ls,
            xis,
            coeffs,
            l_window: (lo, hi),
            m_cut_used: m_eff,
            dropped_amplitude: dropped + tail,
            mu_asymptotic_used: asym,
        })
    }
}

fn four_eps2_l<F: Real>(eps: F, l: u32) -> F {
    F::lit(4.0) * eps * eps * (F::from_int(l as i64) + F::lit(0.5))
}

/// Bound on `Σ 4ε²(l+½) e^{-2ε²(l-bp)²}` over `|l - bp| > hw`.
pub(crate) fn window_tail<F: Real>(eps: F, hw: F, bp: F) -> F {
    let e2 = eps * eps;
    let edge = (F::lit(-2.0) * e2 * hw * hw).exp();
    let geometric = F::one() + (F::lit(4.0) * e2 * hw).recip();
    F::lit(2.0) * F::lit(4.0) * e2 * (bp + hw + geometric) * edge * geometric
}

/// Per-`l` harmonics `c_n(l)`, `|n| ≤ n_max`, for one `(θ, β)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AzimuthalHarmonics<F> {
    n_max: i32,
    ls: Vec<u32>,
    xis: Vec<F>,
    coeffs: Vec<Complex<F>>,
    l_window: (u32, u32),
    m_cut_used: u32,
    dropped_amplitude: F,
    mu_asymptotic_used: bool,
}

impl<F: Real> AzimuthalHarmonics<F> {
    pub fn n_max(&self) -> i32 {
        self.n_max
    }

    /// `c_n(l)` for the stored `l`s, ascending.
    pub fn harmonic(&self, n: i32) -> Vec<(u32, Complex<F>)> {
        let width = (2 * self.n_max + 1) as usize;
        self.ls.iter().enumerate().map(|(k, &l)| (l, self.coeffs[k * width + (n + self.n_max) as usize])).collect()
    }

    /// Series at azimuth `φ_b`.
    pub fn series(&self, phi: F) -> PartialWaveSeries<F> {
        let width = (2 * self.n_max + 1) as usize;
        // e^{i n (π/2 - φ)} = i^n e^{-i n φ}
        let rot: Vec<Complex<F>> = (-self.n_max..=self.n_max)
            .map(|n| {
                let i_pow = match n.rem_euclid(4) {
                    0 => Complex::new(F::one(), F::zero()),
                    1 => Complex::new(F::zero(), F::one()),
                    2 => Complex::new(-F::one(), F::zero()),
                    _ => Complex::new(F::zero(), -F::one()),
                };
                i_pow * Complex::from_polar(F::one(), -F::from_int(n as i64) * phi)
            })
            .collect();
        let terms = self
            .ls
            .iter()
            .enumerate()
            .map(|(k, &l)| {
                let c = &self.coeffs[k * width..(k + 1) * width];
                let mut coeff = c[self.n_max as usize];
                for (j, (&cn, &r)) in c.iter().zip(&rot).enumerate() {
                    if j != self.n_max as usize {
                        coeff = coeff + cn * r;
                    }
                }
                SeriesTerm { l, xi: self.xis[k], coeff }
            })
            .collect();
        PartialWaveSeries {
            terms,
            prefactor: F::one(),
            l_window: self.l_window,
            m_cut_used: self.m_cut_used,
            dropped_amplitude: self.dropped_amplitude,
            mu_asymptotic_used: self.mu_asymptotic_used,
        }
    }
}

/// Coherent sum over the `l`-window and `|m_i|, |m_f| ≤ m_cut` at the
/// scenario's `(θ, β, φ_b, δ)`.
pub fn probability_general<F: Real>(
    s: &Scenario<F>,
    table: &PhaseShiftTable<F>,
    policy: &TruncationPolicy<F>,
    source: WignerSource,
) -> Result<ProbabilityResult<F>> {
    policy.validate()?;
    let m_cut = if s.beta() == F::zero() { 0 } else { policy.m_cut_for(s.beta()) };
    let (_, hi) = policy.window(table.eps(), s.beta());
    let kernel = GeneralKernel::new(s.theta(), source, m_cut, hi)?;
    Ok(kernel.harmonics(s.beta(), table, policy)?.series(s.phi_b()).result(s.delta()))
}

/// Head-on series (`β = 0`, only `m_i = m_f = 0` survives), built directly.
pub fn head_on_series<F: Real>(
    s: &Scenario<F>,
    table: &PhaseShiftTable<F>,
    policy: &TruncationPolicy<F>,
    source: WignerSource,
) -> Result<PartialWaveSeries<F>> {
    policy.validate()?;
    if s.beta() != F::zero() {
        return Err(Error::param("beta", "the head-on path requires β = 0"));
    }
    source.check_theta(s.theta())?;
    let eps = table.eps();
    let (lo, hi) = policy.window(eps, F::zero());
    table.require(lo, hi)?;
    let theta = s.theta();
    let d00: Vec<F> = match source {
        WignerSource::Exact => {
            if hi > WIGNER_EXACT_MAX_L {
                return Err(Error::regime("probability_head_on", format!("l-window reaches {hi}")));
            }
            wigner_d_exact_seq(hi, 0, 0, theta)?
        }
        WignerSource::SmallAngle => (0..=hi).map(|l| wigner_d_small_angle(l, 0, 0, theta)).collect::<Result<_>>()?,
        WignerSource::UniformM0 => (0..=hi).map(|l| wigner_d_m0_uniform(l, 0, theta)).collect::<Result<_>>()?,
    };
    let model = source.amplitude_model();
    let mut terms = Vec::new();
    let mut dropped = F::zero();
    for l in lo..=hi {
        let env = model.envelope(l, eps, F::zero());
        if env < policy.term_floor {
            dropped = dropped + four_eps2_l(eps, l) * env;
            continue;
        }
        let (a0, _) = free_amplitude(l, 0, eps, F::zero(), model);
        let w = a0 * a0 * d00[l as usize];
        terms.push(SeriesTerm { l, xi: table.xi(l), coeff: table.phase(l).scale(w) });
    }
    Ok(PartialWaveSeries {
        terms,
        prefactor: F::one(),
        l_window: (lo, hi),
        m_cut_used: 0,
        dropped_amplitude: dropped + window_tail(eps, policy.half_width(eps), F::zero()),
        mu_asymptotic_used: false,
    })
}

/// Dedicated `β = 0` evaluation at the scenario's `(θ, δ)`.
pub fn probability_head_on<F: Real>(
    s: &Scenario<F>,
    table: &PhaseShiftTable<F>,
    policy: &TruncationPolicy<F>,
    source: WignerSource,
) -> Result<ProbabilityResult<F>> {
    Ok(head_on_series(s, table, policy, source)?.result(s.delta()))
}
