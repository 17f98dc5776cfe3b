//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`s
//! giving roughly 106 bits of significand.
//!
//! Only what the rest of the crate needs is implemented carefully
//! (field operations, `sqrt`, `exp`, `ln`, `sin`, `cos`, `atan`). The
//! remaining `Float` methods are built from those.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};

#[derive(Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

macro_rules! dd_const {
    ($name:ident, $hi:expr, $lo:expr) => {
        pub const $name: DoubleDouble = DoubleDouble { hi: $hi, lo: $lo };
    };
}

impl DoubleDouble {
    dd_const!(PI, 3.141592653589793, 1.2246467991473532e-16);
    dd_const!(TAU, 6.283185307179586, 2.4492935982947064e-16);
    dd_const!(FRAC_PI_2, 1.5707963267948966, 6.123233995736766e-17);
    dd_const!(FRAC_PI_4, 0.7853981633974483, 3.061616997868383e-17);
    dd_const!(LN_2, 0.6931471805599453, 2.3190468138462996e-17);
    dd_const!(LN_10, 2.302585092994046, -2.1707562233822494e-16);
    dd_const!(E, 2.718281828459045, 1.4456468917292502e-16);
    dd_const!(EULER_GAMMA, 0.5772156649015329, -4.942915152430645e-18);
    dd_const!(LN_2PI, 1.8378770664093456, -7.756588316134483e-17);
    dd_const!(SQRT_2, 1.4142135623730951, -9.667293313452913e-17);
    dd_const!(FRAC_1_PI, 0.3183098861837907, -1.9678676675182486e-17);
    dd_const!(FRAC_2_PI, 0.6366197723675814, -3.935735335036497e-17);
    dd_const!(FRAC_PI_3, 1.0471975511965979, -1.072081766451091e-16);
    dd_const!(FRAC_PI_6, 0.5235987755982989, -5.360408832255455e-17);
    dd_const!(FRAC_PI_8, 0.39269908169872414, 1.5308084989341915e-17);
    dd_const!(FRAC_1_SQRT_2, 0.7071067811865476, -4.833646656726457e-17);
    dd_const!(FRAC_2_SQRT_PI, 1.1283791670955126, 1.533545961316588e-17);
    dd_const!(LOG2_E, 1.4426950408889634, 2.0355273740931033e-17);
    dd_const!(LOG10_E, 0.4342944819032518, 1.098319650216765e-17);
    dd_const!(LOG2_10, 3.321928094887362, 1.661617516973592e-16);
    dd_const!(LOG10_2, 0.3010299956639812, -2.8037281277851704e-18);

    pub const fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    /// Builds a normalized value from two arbitrary doubles.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = two_sum(hi, lo);
        DoubleDouble { hi: h, lo: l }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    /// Exact conversion of a 128-bit integer (to within one dd ulp).
    pub fn from_i128(n: i128) -> Self {
        let hi = n as f64;
        let rest = n - hi as i128;
        DoubleDouble::new(hi, rest as f64)
    }

    pub fn from_ratio(num: i128, den: i128) -> Self {
        DoubleDouble::from_i128(num) / DoubleDouble::from_i128(den)
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (h, l) = quick_two_sum(p, e + self.lo * b);
        DoubleDouble { hi: h, lo: l }
    }

    fn sqr(self) -> Self {
        self * self
    }

    fn ldexp(self, k: i32) -> Self {
        let f = 2f64.powi(k);
        DoubleDouble { hi: self.hi * f, lo: self.lo * f }
    }

    fn floor_dd(self) -> Self {
        let h = self.hi.floor();
        if h == self.hi {
            DoubleDouble::new(h, self.lo.floor())
        } else {
            DoubleDouble { hi: h, lo: 0.0 }
        }
    }

    /// sin and cos on |x| <= pi/4 by Taylor series.
    fn sin_cos_reduced(x: Self) -> (Self, Self) {
        let x2 = x.sqr();
        let mut term = x;
        let mut s = x;
        let mut k = 1.0;
        loop {
            term = -(term * x2) / DoubleDouble::from_f64((k + 1.0) * (k + 2.0));
            k += 2.0;
            s += term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        let c = (DoubleDouble::one() - s.sqr()).sqrt();
        (s, c)
    }

    fn sin_cos_dd(self) -> (Self, Self) {
        if !self.hi.is_finite() {
            return (Self::nan(), Self::nan());
        }
        let q = (self / Self::FRAC_PI_2).round();
        let r = self - q * Self::FRAC_PI_2;
        let (s, c) = Self::sin_cos_reduced(r);
        match (q.hi.rem_euclid(4.0)) as i64 {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn exp_dd(self) -> Self {
        if self.hi > 709.0 {
            return Self::infinity();
        }
        if self.hi < -745.0 {
            return Self::zero();
        }
        let k = (self.hi / Self::LN_2.hi).round();
        let r = (self - Self::LN_2 * DoubleDouble::from_f64(k)).ldexp(-10);
        let mut term = r;
        let mut s = r;
        let mut n = 1.0;
        while term.hi.abs() > 1e-36 {
            n += 1.0;
            term = term * r / DoubleDouble::from_f64(n);
            s += term;
        }
        // (1 + s)^(2^10) computed as repeated (2s + s^2)
        for _ in 0..10 {
            s = s.mul_f64(2.0) + s.sqr();
        }
        (s + DoubleDouble::one()).ldexp(k as i32)
    }

    fn ln_dd(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Self::neg_infinity() } else { Self::nan() };
        }
        let y = DoubleDouble::from_f64(self.hi.ln());
        y + self * (-y).exp_dd() - DoubleDouble::one()
    }

    fn atan_dd(self) -> Self {
        let y0 = DoubleDouble::from_f64(self.hi.atan());
        let (s, c) = y0.sin_cos_dd();
        y0 - (s - self * c) / (c + self * s)
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.hi, f)
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (h, l) = quick_two_sum(s, e + f);
        DoubleDouble { hi: h, lo: l }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (h, l) = quick_two_sum(p, e);
        DoubleDouble { hi: h, lo: l }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    #[inline]
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (h, l) = quick_two_sum(q1, q2);
        DoubleDouble { hi: h, lo: l } + DoubleDouble::from_f64(q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        self - (self / b).trunc() * b
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {$(
        impl $tr for DoubleDouble {
            #[inline]
            fn $m(&mut self, b: Self) { *self = *self $op b; }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /, RemAssign rem_assign %);

impl Sum for DoubleDouble {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble::from_f64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        DoubleDouble::from_f64(1.0)
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = num_traits::ParseFloatError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(DoubleDouble::from_f64)
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        t.hi.to_i64().and_then(|h| h.checked_add(t.lo as i64))
    }
    fn to_u64(&self) -> Option<u64> {
        self.to_i64().and_then(|v| u64::try_from(v).ok())
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
}

impl NumCast for DoubleDouble {
    fn from<N: ToPrimitive>(n: N) -> Option<Self> {
        if let Some(i) = n.to_i64() {
            if let Some(f) = n.to_f64() {
                if f == i as f64 {
                    return Some(DoubleDouble::from_i128(i as i128));
                }
                return Some(DoubleDouble::from_f64(f));
            }
        }
        n.to_f64().map(DoubleDouble::from_f64)
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        Some(DoubleDouble::from_i128(n as i128))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(DoubleDouble::from_i128(n as i128))
    }
    fn from_i128(n: i128) -> Option<Self> {
        Some(DoubleDouble::from_i128(n))
    }
    fn from_f64(n: f64) -> Option<Self> {
        Some(DoubleDouble::from_f64(n))
    }
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        DoubleDouble::from_f64(f64::NAN)
    }
    fn infinity() -> Self {
        DoubleDouble::from_f64(f64::INFINITY)
    }
    fn neg_infinity() -> Self {
        DoubleDouble::from_f64(f64::NEG_INFINITY)
    }
    fn neg_zero() -> Self {
        DoubleDouble::from_f64(-0.0)
    }
    fn min_value() -> Self {
        DoubleDouble::from_f64(f64::MIN)
    }
    fn min_positive_value() -> Self {
        DoubleDouble::from_f64(f64::MIN_POSITIVE)
    }
    fn epsilon() -> Self {
        DoubleDouble::from_f64(f64::EPSILON * f64::EPSILON * 0.5)
    }
    fn max_value() -> Self {
        DoubleDouble::from_f64(f64::MAX)
    }
    fn is_nan(self) -> bool {
        self.hi.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }
    fn floor(self) -> Self {
        self.floor_dd()
    }
    fn ceil(self) -> Self {
        -(-self).floor_dd()
    }
    fn round(self) -> Self {
        let f = self.floor_dd();
        let d = self - f;
        if d.hi >= 0.5 {
            f + Self::one()
        } else {
            f
        }
    }
    fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            self.ceil()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        DoubleDouble::from_f64(self.hi.signum())
    }
    fn is_sign_positive(self) -> bool {
        self.hi.is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.hi.is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Self::one() / self
    }
    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }
    fn powf(self, n: Self) -> Self {
        (n * self.ln_dd()).exp_dd()
    }
    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Self::zero() } else { Self::nan() };
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = DoubleDouble::from_f64(self.hi * x);
        ax + (self - ax.sqr()).mul_f64(x * 0.5)
    }
    fn exp(self) -> Self {
        self.exp_dd()
    }
    fn exp2(self) -> Self {
        (self * Self::LN_2).exp_dd()
    }
    fn ln(self) -> Self {
        self.ln_dd()
    }
    fn log(self, base: Self) -> Self {
        self.ln_dd() / base.ln_dd()
    }
    fn log2(self) -> Self {
        self.ln_dd() / Self::LN_2
    }
    fn log10(self) -> Self {
        self.ln_dd() / Self::LN_10
    }
    fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
    fn abs_sub(self, other: Self) -> Self {
        if self > other {
            self - other
        } else {
            Self::zero()
        }
    }
    fn cbrt(self) -> Self {
        if self.hi == 0.0 {
            return self;
        }
        let y = DoubleDouble::from_f64(self.hi.cbrt());
        y - (y.powi(3) - self) / (y.sqr().mul_f64(3.0))
    }
    fn hypot(self, other: Self) -> Self {
        (self.sqr() + other.sqr()).sqrt()
    }
    fn sin(self) -> Self {
        self.sin_cos_dd().0
    }
    fn cos(self) -> Self {
        self.sin_cos_dd().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos_dd();
        s / c
    }
    fn asin(self) -> Self {
        Float::atan2(self, (Self::one() - self.sqr()).sqrt())
    }
    fn acos(self) -> Self {
        Float::atan2((Self::one() - self.sqr()).sqrt(), self)
    }
    fn atan(self) -> Self {
        self.atan_dd()
    }
    fn atan2(self, other: Self) -> Self {
        if other.hi == 0.0 {
            return if self.hi > 0.0 {
                Self::FRAC_PI_2
            } else if self.hi < 0.0 {
                -Self::FRAC_PI_2
            } else {
                Self::zero()
            };
        }
        let base = (self / other).atan_dd();
        if other.hi > 0.0 {
            base
        } else if self.hi >= 0.0 {
            base + Self::PI
        } else {
            base - Self::PI
        }
    }
    fn sin_cos(self) -> (Self, Self) {
        self.sin_cos_dd()
    }
    fn exp_m1(self) -> Self {
        if self.hi.abs() < 1e-3 {
            let mut term = self;
            let mut s = self;
            let mut n = 1.0;
            while term.hi.abs() > 1e-36 * s.hi.abs().max(1e-300) {
                n += 1.0;
                term = term * self / DoubleDouble::from_f64(n);
                s += term;
            }
            s
        } else {
            self.exp_dd() - Self::one()
        }
    }
    fn ln_1p(self) -> Self {
        (Self::one() + self).ln_dd()
    }
    fn sinh(self) -> Self {
        let e = self.exp_dd();
        (e - e.recip()).mul_f64(0.5)
    }
    fn cosh(self) -> Self {
        let e = self.exp_dd();
        (e + e.recip()).mul_f64(0.5)
    }
    fn tanh(self) -> Self {
        self.sinh() / self.cosh()
    }
    fn asinh(self) -> Self {
        (self + (self.sqr() + Self::one()).sqrt()).ln_dd()
    }
    fn acosh(self) -> Self {
        (self + (self.sqr() - Self::one()).sqrt()).ln_dd()
    }
    fn atanh(self) -> Self {
        ((Self::one() + self) / (Self::one() - self)).ln_dd().mul_f64(0.5)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
}

impl FloatConst for DoubleDouble {
    fn E() -> Self {
        Self::E
    }
    fn FRAC_1_PI() -> Self {
        Self::FRAC_1_PI
    }
    fn FRAC_1_SQRT_2() -> Self {
        Self::FRAC_1_SQRT_2
    }
    fn FRAC_2_PI() -> Self {
        Self::FRAC_2_PI
    }
    fn FRAC_2_SQRT_PI() -> Self {
        Self::FRAC_2_SQRT_PI
    }
    fn FRAC_PI_2() -> Self {
        Self::FRAC_PI_2
    }
    fn FRAC_PI_3() -> Self {
        Self::FRAC_PI_3
    }
    fn FRAC_PI_4() -> Self {
        Self::FRAC_PI_4
    }
    fn FRAC_PI_6() -> Self {
        Self::FRAC_PI_6
    }
    fn FRAC_PI_8() -> Self {
        Self::FRAC_PI_8
    }
    fn LN_10() -> Self {
        Self::LN_10
    }
    fn LN_2() -> Self {
        Self::LN_2
    }
    fn LOG10_E() -> Self {
        Self::LOG10_E
    }
    fn LOG2_E() -> Self {
        Self::LOG2_E
    }
    fn PI() -> Self {
        Self::PI
    }
    fn SQRT_2() -> Self {
        Self::SQRT_2
    }
    fn TAU() -> Self {
        Self::TAU
    }
    fn LOG10_2() -> Self {
        Self::LOG10_2
    }
    fn LOG2_10() -> Self {
        Self::LOG2_10
    }
}
