use num_complex::Complex;

use crate::scenario::ln_2pr_eps;
use crate::specfun::{coulomb_phase, coulomb_phase_deriv};
use crate::{Error, Real, Result};

/// How far the `l` and `m` sums extend.
///
/// The `l`-window is centred on `bp = β/(2ε)` with half-width
/// `window_sigmas / ε`; the product of two amplitudes falls off as
/// `e^{-2ε²Δl²}`, so the default 6 leaves `e^{-72}` at the edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy<F> {
    pub window_sigmas: F,
    /// `None` selects `max(2, ceil(4β/√2))`.
    pub m_cut: Option<u32>,
    /// Terms whose Gaussian weight falls below this are skipped.
    pub term_floor: F,
}

impl<F: Real> Default for TruncationPolicy<F> {
    fn default() -> Self {
        Self { window_sigmas: F::lit(6.0), m_cut: None, term_floor: F::lit(1e-14) }
    }
}

impl<F: Real> TruncationPolicy<F> {
    pub fn validate(&self) -> Result<()> {
        if !(self.window_sigmas >= F::lit(4.0)) || !self.window_sigmas.is_finite() {
            return Err(Error::param("window_sigmas", format!("must be at least 4, got {}", self.window_sigmas)));
        }
        if !(self.term_floor >= F::zero() && self.term_floor < F::one()) {
            return Err(Error::param("term_floor", format!("must lie in [0, 1), got {}", self.term_floor)));
        }
        Ok(())
    }

    pub fn m_cut_for(&self, beta: F) -> u32 {
        self.m_cut.unwrap_or_else(|| {
            let four_widths = (F::lit(4.0) * beta / F::SQRT_2()).ceil().to_u32().unwrap_or(u32::MAX);
            four_widths.max(2)
        })
    }

    pub fn half_width(&self, eps: F) -> F {
        self.window_sigmas / eps
    }

    /// `[l_lo, l_hi]` for impact parameter `β`.
    pub fn window(&self, eps: F, beta: F) -> (u32, u32) {
        let bp = beta / (F::lit(2.0) * eps);
        let hw = self.half_width(eps);
        let lo = (bp - hw).floor().max(F::zero()).to_u32().unwrap_or(0);
        let hi = (bp + hw).ceil().to_u32().unwrap_or(u32::MAX);
        (lo, hi)
    }
}

/// Coulomb phases `σ_l`, the unit phasors `e^{2iσ_l}`, and time shifts
/// `ξ_l = 4εη(ln 2pR - 1 - Re ψ(l+1+iη))` over a dense `l` range.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseShiftTable<F> {
    eta: F,
    eps: F,
    l_lo: u32,
    l_hi: u32,
    sigma: Vec<F>,
    xi: Vec<F>,
    phase: Vec<Complex<F>>,
}

impl<F: Real> PhaseShiftTable<F> {
    pub fn new(eta: F, eps: F, l_lo: u32, l_hi: u32) -> Result<Self> {
        if l_lo > l_hi {
            return Err(Error::param("l_window", format!("l_lo = {l_lo} exceeds l_hi = {l_hi}")));
        }
        if !(eps > F::zero()) {
            return Err(Error::param("eps", format!("must be positive, got {eps}")));
        }
        let ln2pr = ln_2pr_eps(eps);
        let scale = F::lit(4.0) * eps * eta;
        let n = (l_hi - l_lo) as usize + 1;
        let mut sigma = Vec::with_capacity(n);
        let mut xi = Vec::with_capacity(n);
        let mut phase = Vec::with_capacity(n);
        for l in l_lo..=l_hi {
            let s = coulomb_phase(l, eta);
            sigma.push(s);
            xi.push(scale * (ln2pr - F::one() - coulomb_phase_deriv(l, eta)));
            phase.push(Complex::from_polar(F::one(), s + s));
        }
        Ok(Self { eta, eps, l_lo, l_hi, sigma, xi, phase })
    }

    /// Table covering the windows of every `β` in `[0, beta_max]`.
    pub fn for_beta_range(eta: F, eps: F, beta_max: F, policy: &TruncationPolicy<F>) -> Result<Self> {
        policy.validate()?;
        let (lo, _) = policy.window(eps, F::zero());
        let (_, hi) = policy.window(eps, beta_max);
        Self::new(eta, eps, lo, hi)
    }

    pub fn eta(&self) -> F {
        self.eta
    }
    pub fn eps(&self) -> F {
        self.eps
    }
    pub fn l_lo(&self) -> u32 {
        self.l_lo
    }
    pub fn l_hi(&self) -> u32 {
        self.l_hi
    }
    pub fn sigma_l(&self) -> &[F] {
        &self.sigma
    }
    pub fn xi_l(&self) -> &[F] {
        &self.xi
    }

    pub fn covers(&self, lo: u32, hi: u32) -> bool {
        lo >= self.l_lo && hi <= self.l_hi
    }

    pub(crate) fn require(&self, lo: u32, hi: u32) -> Result<()> {
        if self.covers(lo, hi) {
            Ok(())
        } else {
            Err(Error::param(
                "table",
                format!("phase table [{}, {}] does not cover the l-window [{lo}, {hi}]", self.l_lo, self.l_hi),
            ))
        }
    }

    #[inline]
    fn idx(&self, l: u32) -> usize {
        debug_assert!(l >= self.l_lo && l <= self.l_hi);
        (l - self.l_lo) as usize
    }

    #[inline]
    pub fn sigma(&self, l: u32) -> F {
        self.sigma[self.idx(l)]
    }

    #[inline]
    pub fn xi(&self, l: u32) -> F {
        self.xi[self.idx(l)]
    }

    /// `e^{2iσ_l}`.
    #[inline]
    pub fn phase(&self, l: u32) -> Complex<F> {
        self.phase[self.idx(l)]
    }
}

/// Phase table over the window `policy` assigns to impact parameter `β`.
pub fn build_phase_table<F: Real>(eta: F, eps: F, beta: F, policy: &TruncationPolicy<F>) -> Result<PhaseShiftTable<F>> {
    policy.validate()?;
    let (lo, hi) = policy.window(eps, beta);
    PhaseShiftTable::new(eta, eps, lo, hi)
}
