//! Exact real quadratic irrationals `(a + b√d)/c`, enough to take exact
//! floors of `mθ` and `n/θ` for irrational θ like √2 or the golden ratio.

use std::cmp::Ordering;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadSurd {
    a: i128,
    b: i128,
    c: i128,
    d: i128,
}

impl QuadSurd {
    /// `(a + b√d)/c`; `d` must be a positive non-square and `b ≠ 0`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if c == 0 {
            return Err(Error::ZeroDenominator);
        }
        if d <= 1 || (d as i128).sqrt().pow(2) == d as i128 || b == 0 {
            return Err(Error::Domain { what: "QuadSurd radicand (non-square, b != 0)", value: d as f64 });
        }
        Ok(QuadSurd::normalized(a as i128, b as i128, c as i128, d as i128))
    }

    pub fn sqrt2() -> Self {
        QuadSurd::new(0, 1, 1, 2).expect("valid surd")
    }

    pub fn golden_ratio() -> Self {
        QuadSurd::new(1, 1, 2, 5).expect("valid surd")
    }

    fn normalized(a: i128, b: i128, c: i128, d: i128) -> Self {
        let g = a.gcd(&b).gcd(&c);
        let s = if c < 0 { -g } else { g };
        QuadSurd { a: a / s, b: b / s, c: c / s, d }
    }

    pub fn to_f64(self) -> f64 {
        (self.a as f64 + self.b as f64 * (self.d as f64).sqrt()) / self.c as f64
    }

    pub fn scale(self, r: Rational) -> Self {
        let (n, m) = (r.num() as i128, r.den() as i128);
        QuadSurd::normalized(self.a * n, self.b * n, self.c * m, self.d)
    }

    /// 1/θ = c(a − b√d)/(a² − b²d).
    pub fn recip(self) -> Self {
        let norm = self.a * self.a - self.b * self.b * self.d;
        QuadSurd::normalized(self.c * self.a, -self.c * self.b, norm, self.d)
    }

    /// ⌊θ⌋, exact.
    pub fn floor(self) -> i128 {
        // b√d lies strictly between k and k+1 with k = ⌊b√d⌋
        let n = self.b * self.b * self.d;
        let r = n.sqrt();
        let k = if self.b > 0 { r } else { -r - 1 };
        // c > 0 after normalization, and no integer lies in (a+k, a+k+1)
        Integer::div_floor(&(self.a + k), &self.c)
    }

    pub fn is_positive(self) -> bool {
        self.cmp_rational(Rational::ZERO) == Ordering::Greater
    }

    /// Compare against a rational; never equal since θ is irrational.
    pub fn cmp_rational(self, r: Rational) -> Ordering {
        // θ − r = ((a c' − n c) + b c' √d)/(c c') with r = n/c'
        let (n, m) = (r.num() as i128, r.den() as i128);
        let shifted = QuadSurd::normalized(self.a * m - n * self.c, self.b * m, self.c * m, self.d);
        if shifted.floor() >= 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}
