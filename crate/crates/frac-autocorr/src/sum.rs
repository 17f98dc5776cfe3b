//! Compensated summation.

use std::ops::{Add, AddAssign};

use num_complex::Complex;

use crate::scalar::Real;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Neumaier<T> {
    pub fn new() -> Self {
        Neumaier { sum: T::zero(), comp: T::zero() }
    }

    #[inline]
    pub fn push(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp = self.comp + ((self.sum - t) + x);
        } else {
            self.comp = self.comp + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.comp
    }
}

impl<T: Real> AddAssign<T> for Neumaier<T> {
    fn add_assign(&mut self, x: T) {
        self.push(x);
    }
}

impl<T: Real> Add for Neumaier<T> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self.push(o.sum);
        self.push(o.comp);
        self
    }
}

impl<T: Real> FromIterator<T> for Neumaier<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for x in iter {
            acc.push(x);
        }
        acc
    }
}

/// Compensated complex sum, component-wise.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexNeumaier<T> {
    re: Neumaier<T>,
    im: Neumaier<T>,
}

impl<T: Real> ComplexNeumaier<T> {
    pub fn new() -> Self {
        ComplexNeumaier { re: Neumaier::new(), im: Neumaier::new() }
    }

    #[inline]
    pub fn push(&mut self, z: Complex<T>) {
        self.re.push(z.re);
        self.im.push(z.im);
    }

    pub fn value(&self) -> Complex<T> {
        Complex::new(self.re.value(), self.im.value())
    }
}

pub fn neumaier_sum<T: Real, I: IntoIterator<Item = T>>(iter: I) -> T {
    iter.into_iter().collect::<Neumaier<T>>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_lost_low_bits() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(neumaier_sum(xs), 2.0);
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 0.0);
    }
}
