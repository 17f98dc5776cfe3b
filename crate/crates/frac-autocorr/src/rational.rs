//! Exact rationals on checked 64-bit integers.
//!
//! Intermediate products go through `i128` and are reduced before being
//! narrowed, so overflow is only reported when the reduced result itself
//! does not fit.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::dd::DoubleDouble;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn narrow(num: i128, den: i128) -> Result<Rational> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    let g = num.gcd(&den);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(num), Ok(den)) => Ok(Rational { num, den }),
        _ => Err(Error::Overflow),
    }
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        narrow(num as i128, den as i128)
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn checked_add(self, o: Self) -> Result<Self> {
        let (a, b, c, d) = (self.num as i128, self.den as i128, o.num as i128, o.den as i128);
        narrow(a * d + c * b, b * d)
    }

    pub fn checked_sub(self, o: Self) -> Result<Self> {
        self.checked_add(-o)
    }

    pub fn checked_mul(self, o: Self) -> Result<Self> {
        narrow(self.num as i128 * o.num as i128, self.den as i128 * o.den as i128)
    }

    pub fn checked_div(self, o: Self) -> Result<Self> {
        narrow(self.num as i128 * o.den as i128, self.den as i128 * o.num as i128)
    }

    pub fn floor(self) -> i64 {
        self.num.div_euclid(self.den)
    }

    /// `{x}`, always in `[0, 1)`.
    pub fn fract(self) -> Self {
        Rational { num: self.num.rem_euclid(self.den), den: self.den }
    }

    pub fn recip(self) -> Result<Self> {
        Rational::new(self.den, self.num)
    }

    pub fn abs(self) -> Self {
        Rational { num: self.num.abs(), den: self.den }
    }

    pub fn signum(self) -> i64 {
        self.num.signum()
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_dd(self) -> DoubleDouble {
        DoubleDouble::from_ratio(self.num as i128, self.den as i128)
    }
}

/// `{x}`.
pub fn frac_rational(x: Rational) -> Rational {
    x.fract()
}

/// Reduced `num/den` with positive denominator.
pub fn reduce(num: i64, den: i64) -> Result<Rational> {
    Rational::new(num, den)
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

macro_rules! panicking_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                self.$checked(o).expect("rational arithmetic overflow")
            }
        }
    };
}
panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);
panicking_op!(Div, div, checked_div);

impl Ord for Rational {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.num as i128 * o.den as i128).cmp(&(o.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {0:?} as a rational (expected p/q or an integer)")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        Rational::new(n, d).map_err(|_| bad())
    }
}

/// Inverse of `p` modulo `q`, in `[1, q]`.
pub fn modular_inverse(p: i64, q: i64) -> Result<i64> {
    if q < 1 {
        return Err(Error::Domain { what: "modular_inverse modulus", value: q as f64 });
    }
    if q == 1 {
        return Ok(1);
    }
    let e = p.rem_euclid(q).extended_gcd(&q);
    if e.gcd != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let inv = e.x.rem_euclid(q);
    Ok(if inv == 0 { q } else { inv })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduction_and_signs() {
        assert_eq!(reduce(2, 4).unwrap(), r(1, 2));
        assert_eq!(reduce(-3, -9).unwrap(), r(1, 3));
        assert_eq!(reduce(0, 5).unwrap(), Rational::ZERO);
        assert_eq!(reduce(0, 5).unwrap().den(), 1);
        assert_eq!(reduce(3, -6).unwrap(), r(-1, 2));
        assert_eq!(reduce(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn fractional_parts() {
        assert_eq!(frac_rational(r(7, 3)), r(1, 3));
        assert_eq!(frac_rational(r(-1, 4)), r(3, 4));
        assert_eq!(frac_rational(r(5, 1)), Rational::ZERO);
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::integer(i64::MAX);
        assert_eq!(big.checked_add(Rational::ONE), Err(Error::Overflow));
        let a = r(i64::MAX, 3);
        assert_eq!(a.checked_mul(r(3, 1)).unwrap(), Rational::integer(i64::MAX));
    }

    #[test]
    fn inverses() {
        assert_eq!(modular_inverse(3, 7).unwrap(), 5);
        assert_eq!(modular_inverse(1, 9).unwrap(), 1);
        assert_eq!(modular_inverse(8, 9).unwrap(), 8);
        assert_eq!(modular_inverse(5, 1).unwrap(), 1);
        assert_eq!(modular_inverse(-2, 7).unwrap(), 3);
        assert!(matches!(modular_inverse(2, 4), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn parsing() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), r(1, 2));
        assert_eq!("-4".parse::<Rational>().unwrap(), Rational::integer(-4));
        assert!("1/0".parse::<Rational>().is_err());
    }
}
