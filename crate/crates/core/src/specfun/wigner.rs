//! Wigner rotation matrices `d^l_{m1 m2}(θ)`.
//!
//! Phase convention: `d^1_{1,0}(θ) = -sin θ / √2`, so that
//! `d^l_{m,0} = √((l-m)!/(l+m)!) P_l^m(cos θ)` with the Condon-Shortley phase.

use super::{bessel_j, ln_gamma_real};
use crate::real::parity_sign;
use crate::{Error, Real, Result};

/// Largest `l` for which [`wigner_d_exact`] has been validated.
pub const WIGNER_EXACT_MAX_L: u32 = 8000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WignerIndex {
    pub l: u32,
    pub m1: i32,
    pub m2: i32,
}

impl WignerIndex {
    pub fn new(l: u32, m1: i32, m2: i32) -> Result<Self> {
        if m1.unsigned_abs() > l || m2.unsigned_abs() > l {
            return Err(Error::domain("wigner", format!("need |m1|, |m2| ≤ l, got l = {l}, m1 = {m1}, m2 = {m2}")));
        }
        Ok(Self { l, m1, m2 })
    }
}

/// Bessel-argument scale and leading sign of the uniform small-angle form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaPhi<F> {
    pub lambda: F,
    pub phi_sign: F,
}

impl<F: Real> LambdaPhi<F> {
    pub fn new(l: u32, m: i32) -> Self {
        let lh = F::from_int(l as i64) + F::lit(0.5);
        let mf = F::from_int(m as i64);
        let lambda = (lh * lh - mf * mf / F::lit(3.0) + F::lit(1.0 / 12.0)).sqrt();
        let phi_sign = if m >= 0 { parity_sign(m as i64) } else { F::one() };
        Self { lambda, phi_sign }
    }
}

/// `ln[(l+|m|)!/(l-|m|)!]`; a direct log sum for small `|m|`, log-gamma otherwise.
pub fn ln_factorial_ratio<F: Real>(l: u32, m: i32) -> F {
    let a = m.unsigned_abs();
    debug_assert!(a <= l);
    if a <= 32 {
        let mut acc = crate::summation::CompensatedSum::new();
        for k in (l - a + 1)..=(l + a) {
            acc.add(F::from_int(k as i64).ln());
        }
        acc.value()
    } else {
        let hi = ln_gamma_real(F::from_int((l + a) as i64 + 1)).expect("positive");
        let lo = ln_gamma_real(F::from_int((l - a) as i64 + 1)).expect("positive");
        hi - lo
    }
}

fn sqrt_theta_over_sin<F: Real>(theta: F) -> F {
    if theta == F::zero() {
        F::one()
    } else {
        (theta / theta.sin()).sqrt()
    }
}

/// Uniform low-angle approximation of `d^l_{m,0}(θ)`:
/// `Φ(m) [(l+|m|)!/(l-|m|)!]^{1/2} Λ^{-|m|} (θ/sin θ)^{1/2} J_{|m|}(Λθ)`.
pub fn wigner_d_m0_uniform<F: Real>(l: u32, m: i32, theta: F) -> Result<F> {
    WignerIndex::new(l, m, 0)?;
    if !(theta >= F::zero() && theta <= F::lit(0.5)) {
        return Err(Error::domain("wigner_d_m0_uniform", format!("θ = {theta} outside [0, 0.5]")));
    }
    let lp = LambdaPhi::<F>::new(l, m);
    let a = m.unsigned_abs();
    let amp = if a == 0 {
        F::one()
    } else {
        (F::lit(0.5) * ln_factorial_ratio::<F>(l, m) - F::from_int(a as i64) * lp.lambda.ln()).exp()
    };
    Ok(lp.phi_sign * amp * sqrt_theta_over_sin(theta) * bessel_j(a, lp.lambda * theta))
}

/// Small-angle form `(-1)^{m_i-m_f} (θ/sin θ)^{1/2} J_{m_i-m_f}(lθ)` for
/// `m_i ≥ m_f`, extended by `d_{m_i m_f} = (-1)^{m_i-m_f} d_{m_f m_i}`.
pub fn wigner_d_small_angle<F: Real>(l: u32, m_i: i32, m_f: i32, theta: F) -> Result<F> {
    WignerIndex::new(l, m_i, m_f)?;
    if !(theta > F::zero() && theta <= F::lit(0.5)) {
        return Err(Error::domain("wigner_d_small_angle", format!("θ = {theta} outside (0, 0.5]")));
    }
    let n = m_i - m_f;
    let j = bessel_j(n.unsigned_abs(), F::from_int(l as i64) * theta);
    let sign = if n >= 0 { parity_sign(n as i64) } else { F::one() };
    Ok(sign * sqrt_theta_over_sin(theta) * j)
}

/// Exact `d^l_{m1 m2}(θ)` by upward recursion in `l`.
pub fn wigner_d_exact<F: Real>(l: u32, m1: i32, m2: i32, theta: F) -> Result<F> {
    WignerIndex::new(l, m1, m2)?;
    Ok(wigner_d_exact_seq(l, m1, m2, theta)?[l as usize])
}

/// `[d^0_{m1 m2}(θ), …, d^{l_max}_{m1 m2}(θ)]`; entries with `l < max(|m1|, |m2|)`
/// are zero.
///
/// The three-term recursion is run on a rescaled sequence with the scale
/// carried in log form, so seeds that underflow (large `|m1 - m2|` at small θ)
/// still grow into the correct values at large `l`.
pub fn wigner_d_exact_seq<F: Real>(l_max: u32, m1: i32, m2: i32, theta: F) -> Result<Vec<F>> {
    if l_max > WIGNER_EXACT_MAX_L {
        return Err(Error::regime(
            "wigner_d_exact",
            format!("l = {l_max} above the validated range l ≤ {WIGNER_EXACT_MAX_L}"),
        ));
    }
    if !(theta >= F::zero() && theta <= F::PI()) {
        return Err(Error::domain("wigner_d_exact", format!("θ = {theta} outside [0, π]")));
    }
    let len = l_max as usize + 1;
    let mut out = vec![F::zero(); len];
    let l0 = m1.unsigned_abs().max(m2.unsigned_abs());
    if l0 > l_max {
        return Ok(out);
    }
    let (seed_sign, ln_seed) = match seed(l0, m1, m2, theta) {
        Some(s) => s,
        None => return Ok(out),
    };

    let cos = theta.cos();
    let fm1 = F::from_int(m1 as i64);
    let fm2 = F::from_int(m2 as i64);
    let m1m2 = fm1 * fm2;
    let big = F::max_value().sqrt().sqrt();
    let small = big.recip();

    let mut ln_scale = ln_seed;
    let mut prev = F::zero();
    let mut cur = seed_sign;
    out[l0 as usize] = cur * ln_scale.exp();
    let mut start = l0;
    if l0 == 0 {
        if l_max == 0 {
            return Ok(out);
        }
        prev = cur;
        cur = cos;
        out[1] = cur;
        start = 1;
    }
    for j in start..l_max {
        let jf = F::from_int(j as i64);
        let j1 = jf + F::one();
        let a = (F::lit(2.0) * jf + F::one()) * (jf * j1 * cos - m1m2);
        let b = j1 * ((jf * jf - fm1 * fm1) * (jf * jf - fm2 * fm2)).max(F::zero()).sqrt();
        let c = jf * ((j1 * j1 - fm1 * fm1) * (j1 * j1 - fm2 * fm2)).sqrt();
        let next = (a * cur - b * prev) / c;
        prev = cur;
        cur = next;
        let mag = cur.abs().max(prev.abs());
        if mag > big {
            cur = cur * small;
            prev = prev * small;
            ln_scale = ln_scale + big.ln();
        } else if mag < small && mag > F::zero() {
            cur = cur * big;
            prev = prev * big;
            ln_scale = ln_scale - big.ln();
        }
        out[j as usize + 1] = cur * ln_scale.exp();
    }
    Ok(out)
}

/// Sign and log-magnitude of `d^{l0}_{m1 m2}`, `l0 = max(|m1|, |m2|)`;
/// `None` when the seed is exactly zero.
fn seed<F: Real>(l0: u32, m1: i32, m2: i32, theta: F) -> Option<(F, F)> {
    // reduce to d^j_{j,m}: swap so |m1| is the larger, then reflect m1 = -j
    let (mut sign, a, b) = if m1.unsigned_abs() >= m2.unsigned_abs() {
        (F::one(), m1, m2)
    } else {
        (parity_sign::<F>((m1 - m2) as i64), m2, m1)
    };
    let j = l0 as i64;
    let m = if a >= 0 {
        b as i64
    } else {
        sign = sign * parity_sign::<F>(j + b as i64);
        -(b as i64)
    };
    let half = theta / F::lit(2.0);
    let (s, c) = (half.sin(), half.cos());
    let (pc, ps) = (j + m, j - m);
    if (pc > 0 && c <= F::zero()) || (ps > 0 && s <= F::zero()) {
        return None;
    }
    let lg = |n: i64| ln_gamma_real(F::from_int(n + 1)).expect("positive");
    let mut ln = F::lit(0.5) * (lg(2 * j) - lg(pc) - lg(ps));
    if pc > 0 {
        ln = ln + F::from_int(pc) * c.ln();
    }
    if ps > 0 {
        ln = ln + F::from_int(ps) * s.ln();
    }
    sign = sign * parity_sign::<F>(ps);
    Some((sign, ln))
}
