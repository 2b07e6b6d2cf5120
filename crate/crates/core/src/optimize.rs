//! Maximization of the probability over the time-shift coordinate δ.

use crate::{Error, Real, Result};

/// Search interval and coarse-grid spacing for [`find_delta_max`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaSearch<F> {
    pub lo: F,
    pub hi: F,
    pub coarse_step: F,
    /// Width at which golden-section refinement stops.
    pub tol: F,
}

impl<F: Real> Default for DeltaSearch<F> {
    fn default() -> Self {
        Self { lo: F::lit(-5.0), hi: F::lit(5.0), coarse_step: F::lit(0.1), tol: F::lit(1e-5) }
    }
}

impl<F: Real> DeltaSearch<F> {
    pub fn new(lo: F, hi: F, coarse_step: F) -> Result<Self> {
        let s = Self { lo, hi, coarse_step, ..Self::default() };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::param("delta_search", format!("need lo < hi, got [{}, {}]", self.lo, self.hi)));
        }
        if !(self.coarse_step > F::zero() && self.coarse_step <= self.hi - self.lo) {
            return Err(Error::param("coarse_step", format!("{} does not fit the interval", self.coarse_step)));
        }
        if !(self.tol > F::zero()) {
            return Err(Error::param("tol", "must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaMax<F> {
    pub delta_max: F,
    pub p_max: F,
    pub evaluations: usize,
}

/// Coarse scan of `[lo, hi]` followed by golden-section refinement around the
/// best grid point. Grid ties go to the smaller `|δ|`, and the grid point is
/// kept when refinement does not improve on it.
pub fn find_delta_max<F, E>(mut evaluator: E, search: &DeltaSearch<F>) -> Result<DeltaMax<F>>
where
    F: Real,
    E: FnMut(F) -> F,
{
    search.validate()?;
    let n = ((search.hi - search.lo) / search.coarse_step).round().to_usize().unwrap_or(0).max(1);
    let mut evaluations = 0usize;
    let mut best = (search.lo, F::neg_infinity());
    let mut min = F::infinity();
    for k in 0..=n {
        let d = if k == n { search.hi } else { search.lo + search.coarse_step * F::from_count(k) };
        let v = evaluator(d);
        evaluations += 1;
        if v.is_nan() {
            return Err(Error::domain("find_delta_max", format!("evaluator returned NaN at δ = {d}")));
        }
        min = min.min(v);
        if v > best.1 || (v == best.1 && d.abs() < best.0.abs()) {
            best = (d, v);
        }
    }
    let max = best.1;
    let flat = if min > F::zero() { max < min * (F::one() + F::lit(1e-12)) } else { max <= min };
    if flat {
        let ratio = if min > F::zero() { (max / min).to_f64_lossy() } else { f64::NAN };
        return Err(Error::FlatObjective { ratio });
    }

    let golden = F::lit(0.618_033_988_749_894_8);
    let mut a = (best.0 - search.coarse_step).max(search.lo);
    let mut b = (best.0 + search.coarse_step).min(search.hi);
    let mut c = b - golden * (b - a);
    let mut d = a + golden * (b - a);
    let mut fc = evaluator(c);
    let mut fd = evaluator(d);
    evaluations += 2;
    while (b - a) > search.tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - golden * (b - a);
            fc = evaluator(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + golden * (b - a);
            fd = evaluator(d);
        }
        evaluations += 1;
    }
    let x = (a + b) / F::lit(2.0);
    let fx = evaluator(x);
    evaluations += 1;
    let (delta_max, p_max) = if best.1 >= fx { best } else { (x, fx) };
    Ok(DeltaMax { delta_max, p_max, evaluations })
}
