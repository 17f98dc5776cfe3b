use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// A value together with an absolute error radius: the true quantity lies
/// in `[value - err, value + err]` under the error model of whichever
/// routine produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertifiedReal {
    pub value: f64,
    pub err: f64,
}

impl CertifiedReal {
    pub fn new(value: f64, err: f64) -> Self {
        CertifiedReal { value, err: err.abs() }
    }

    pub fn exact(value: f64) -> Self {
        CertifiedReal { value, err: 0.0 }
    }

    pub fn lo(self) -> f64 {
        self.value - self.err
    }

    pub fn hi(self) -> f64 {
        self.value + self.err
    }

    pub fn contains(self, x: f64) -> bool {
        (x - self.value).abs() <= self.err
    }

    /// Whether the two enclosures can describe the same number, allowing
    /// an extra `slack`.
    pub fn overlaps(self, o: Self, slack: f64) -> bool {
        (self.value - o.value).abs() <= self.err + o.err + slack
    }

    pub fn widen(self, extra: f64) -> Self {
        CertifiedReal { value: self.value, err: self.err + extra.abs() }
    }
}

impl Add for CertifiedReal {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        CertifiedReal { value: self.value + o.value, err: self.err + o.err }
    }
}

impl Sub for CertifiedReal {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        CertifiedReal { value: self.value - o.value, err: self.err + o.err }
    }
}

impl Neg for CertifiedReal {
    type Output = Self;
    fn neg(self) -> Self {
        CertifiedReal { value: -self.value, err: self.err }
    }
}

impl Mul<f64> for CertifiedReal {
    type Output = Self;
    fn mul(self, c: f64) -> Self {
        CertifiedReal { value: self.value * c, err: self.err * c.abs() }
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:.1e}", crate::output::fmt_f64(self.value), self.err)
    }
}
