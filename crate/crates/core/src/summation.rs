//! Compensated (Kahan-Babuska-Neumaier) accumulation for long oscillatory sums.

use num_complex::Complex;

use crate::Real;

#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum<F> {
    sum: F,
    compensation: F,
}

impl<F: Real> CompensatedSum<F> {
    pub fn new() -> Self {
        Self { sum: F::zero(), compensation: F::zero() }
    }

    #[inline]
    pub fn add(&mut self, value: F) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation = self.compensation + ((self.sum - t) + value);
        } else {
            self.compensation = self.compensation + ((value - t) + self.sum);
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> F {
        self.sum + self.compensation
    }
}

impl<F: Real> FromIterator<F> for CompensatedSum<F> {
    fn from_iter<I: IntoIterator<Item = F>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Complex accumulator; real and imaginary parts are compensated separately.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexCompensatedSum<F> {
    re: CompensatedSum<F>,
    im: CompensatedSum<F>,
}

impl<F: Real> ComplexCompensatedSum<F> {
    pub fn new() -> Self {
        Self { re: CompensatedSum::new(), im: CompensatedSum::new() }
    }

    #[inline]
    pub fn add(&mut self, value: Complex<F>) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex<F> {
        Complex::new(self.re.value(), self.im.value())
    }
}

/// Sums a slice with compensation, in slice order.
pub fn compensated_sum<F: Real>(values: &[F]) -> F {
    values.iter().copied().collect::<CompensatedSum<F>>().value()
}
