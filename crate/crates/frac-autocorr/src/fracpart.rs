//! Bernoulli polynomials and functions, and the exact summation identities
//! for `⌊mθ⌋`, `{mθ}` and `B₁(mθ)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::piecewise::integrate_sawtooth_over_t2;
use crate::rational::Rational;
use crate::scalar::Real;
use crate::specfun::bernoulli_number;
use crate::sum::Neumaier;
use crate::surd::QuadSurd;

pub const MAX_POLY_DEGREE: usize = 20;

/// Index of a Bernoulli function B_n, n ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BernoulliFunctionId(usize);

impl BernoulliFunctionId {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_POLY_DEGREE {
            return Err(Error::TooLarge { what: "Bernoulli function index", got: n as u64, max: MAX_POLY_DEGREE as u64 });
        }
        Ok(BernoulliFunctionId(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    pub fn eval<T: Real>(self, x: T) -> T {
        bernoulli_fn(self.0, x).expect("index validated at construction")
    }
}

/// Coefficients of b_n, lowest power first, as exact rationals.
static POLY_COEFFS: Lazy<Vec<Vec<BigRational>>> = Lazy::new(|| {
    // b_n(x) = Σ_k C(n,k) B_k x^{n−k}, equivalently b_n′ = n b_{n−1} with zero mean
    (0..=MAX_POLY_DEGREE)
        .map(|n| {
            let mut binom = BigInt::one();
            let mut coeffs = vec![BigRational::zero(); n + 1];
            for k in 0..=n {
                coeffs[n - k] = BigRational::from_integer(binom.clone()) * bernoulli_number(k);
                binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
            }
            coeffs
        })
        .collect()
});

static POLY_COEFFS_I64: Lazy<Vec<Vec<(i64, i64)>>> = Lazy::new(|| {
    POLY_COEFFS
        .iter()
        .map(|c| c.iter().map(|r| (r.numer().to_i64().unwrap(), r.denom().to_i64().unwrap())).collect())
        .collect()
});

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_POLY_DEGREE {
        return Err(Error::TooLarge { what: "Bernoulli polynomial degree", got: n as u64, max: MAX_POLY_DEGREE as u64 });
    }
    Ok(())
}

/// Exact coefficients of b_n, lowest power first.
pub fn bernoulli_poly_coefficients(n: usize) -> Result<&'static [BigRational]> {
    check_degree(n)?;
    Ok(&POLY_COEFFS[n])
}

/// b_n(x) for n ≤ 20.
pub fn bernoulli_poly<T: Real>(n: usize, x: T) -> Result<T> {
    check_degree(n)?;
    let mut acc = T::zero();
    for &(num, den) in POLY_COEFFS_I64[n].iter().rev() {
        acc = acc * x + T::ratio(num, den);
    }
    Ok(acc)
}

/// b_n(x) in exact arithmetic.
pub fn bernoulli_poly_exact(n: usize, x: &BigRational) -> Result<BigRational> {
    check_degree(n)?;
    let mut acc = BigRational::zero();
    for c in POLY_COEFFS[n].iter().rev() {
        acc = acc * x + c;
    }
    Ok(acc)
}

/// B_n(x) = b_n({x}), with B₁ vanishing at the integers.
pub fn bernoulli_fn<T: Real>(n: usize, x: T) -> Result<T> {
    if n == 0 {
        return Err(Error::Domain { what: "Bernoulli function index", value: 0.0 });
    }
    let fl = x.floor();
    if n == 1 && x == fl {
        return Ok(T::zero());
    }
    bernoulli_poly(n, x - fl)
}

/// B₁(x) for rational x, exactly.
pub fn b1(x: Rational) -> Rational {
    if x.is_integer() {
        Rational::ZERO
    } else {
        x.fract() - Rational::new(1, 2).expect("nonzero")
    }
}

/// Truncated Fourier series of B_n(x): −n! Σ_{0<|k|≤M} e(kx)/(2πik)ⁿ.
pub fn bernoulli_fourier_partial(n: usize, x: f64, terms: usize) -> f64 {
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let tau = std::f64::consts::TAU;
    let mut acc = Neumaier::new();
    for k in 1..=terms {
        let arg = tau * (k as f64 * x).fract();
        let trig = if n % 2 == 0 { arg.cos() } else { arg.sin() };
        acc.push(trig / (tau * k as f64).powi(n as i32));
    }
    // i^{−n} pairs ±k into (−1)^{⌊n/2⌋}·2cos or ·2sin
    let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
    -2.0 * fact * sign * acc.value()
}

/// The slope θ of a Beatty-type sum: rational, exact quadratic irrational,
/// or a plain float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Theta {
    Rational(Rational),
    Surd(QuadSurd),
    Float(f64),
}

impl Theta {
    fn check_positive(self) -> Result<()> {
        let ok = match self {
            Theta::Rational(r) => r.signum() > 0,
            Theta::Surd(s) => s.is_positive(),
            Theta::Float(f) => f > 0.0 && f.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain { what: "theta must be positive", value: self.to_f64() })
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Theta::Rational(r) => r.to_f64(),
            Theta::Surd(s) => s.to_f64(),
            Theta::Float(f) => f,
        }
    }

    /// ⌊θ·x⌋.
    fn floor_mul(self, x: Rational) -> Result<i64> {
        Ok(match self {
            Theta::Rational(r) => r.checked_mul(x)?.floor(),
            Theta::Surd(s) => s.scale(x).floor() as i64,
            Theta::Float(f) => (f * x.to_f64()).floor() as i64,
        })
    }

    /// ⌊n/θ⌋.
    fn floor_div(self, n: i64) -> Result<i64> {
        Ok(match self {
            Theta::Rational(r) => Rational::integer(n).checked_div(r)?.floor(),
            Theta::Surd(s) => s.recip().scale(Rational::integer(n)).floor() as i64,
            Theta::Float(f) => (n as f64 / f).floor() as i64,
        })
    }
}

impl From<Rational> for Theta {
    fn from(r: Rational) -> Self {
        Theta::Rational(r)
    }
}

impl From<QuadSurd> for Theta {
    fn from(s: QuadSurd) -> Self {
        Theta::Surd(s)
    }
}

/// LHS − RHS of the Hardy–Littlewood symmetry
/// Σ_{m≤x} f(⌊mθ⌋)Δg(m) + Σ_{n≤θx} g(⌊n/θ⌋)Δf(n) = f(⌊θx⌋)g(⌊x⌋) [+ correction],
/// where the correction Σ_{k≤x/q} Δg(kq)Δf(kp) appears for θ = p/q.
pub fn hl_symmetry_residual<F, G>(theta: Theta, x: Rational, f: F, g: G) -> Result<i128>
where
    F: Fn(i64) -> i64,
    G: Fn(i64) -> i64,
{
    theta.check_positive()?;
    let (f, g) = (|n| f(n) as i128, |n| g(n) as i128);
    let xf = x.floor();
    let yf = theta.floor_mul(x)?;
    let mut lhs: i128 = 0;
    for m in 1..=xf {
        lhs += f(theta.floor_mul(Rational::integer(m))?) * (g(m) - g(m - 1));
    }
    for n in 1..=yf {
        lhs += g(theta.floor_div(n)?) * (f(n) - f(n - 1));
    }
    let mut rhs = f(yf) * g(xf);
    if let Theta::Rational(r) = theta {
        let (p, q) = (r.num(), r.den());
        for k in 1..=x.checked_div(Rational::integer(q))?.floor() {
            rhs += (g(k * q) - g(k * q - 1)) * (f(k * p) - f(k * p - 1));
        }
    }
    Ok(lhs - rhs)
}

/// Both sides of Σ_{m≤x}⌊mθ⌋ + Σ_{n≤θx}⌊n/θ⌋ = ⌊x⌋⌊θx⌋ (+ ⌊x/q⌋ for θ = p/q).
pub fn sylvester_sum_check(theta: Theta, x: Rational) -> Result<(i128, i128)> {
    theta.check_positive()?;
    if x.signum() <= 0 {
        return Err(Error::Domain { what: "x must be positive", value: x.to_f64() });
    }
    let xf = x.floor();
    let yf = theta.floor_mul(x)?;
    let mut lhs: i128 = 0;
    for m in 1..=xf {
        lhs += theta.floor_mul(Rational::integer(m))? as i128;
    }
    for n in 1..=yf {
        lhs += theta.floor_div(n)? as i128;
    }
    let mut rhs = xf as i128 * yf as i128;
    if let Theta::Rational(r) = theta {
        rhs += x.checked_div(Rational::integer(r.den()))?.floor() as i128;
    }
    Ok((lhs, rhs))
}

/// Both sides of Σ_{n≤x} n = x²/2 − x({x} − ½) + {x}²/2 − {x}/2.
pub fn integer_sum_check(x: Rational) -> Result<(Rational, Rational)> {
    if x.signum() < 0 {
        return Err(Error::Domain { what: "x must be non-negative", value: x.to_f64() });
    }
    let n = x.floor();
    let lhs = reduce_i128(n as i128 * (n as i128 + 1) / 2)?;
    let half = Rational::new(1, 2)?;
    let fx = x.fract();
    let rhs = x
        .checked_mul(x)?
        .checked_mul(half)?
        .checked_sub(x.checked_mul(fx.checked_sub(half)?)?)?
        .checked_add(fx.checked_mul(fx)?.checked_mul(half)?)?
        .checked_sub(fx.checked_mul(half)?)?;
    Ok((lhs, rhs))
}

fn reduce_i128(n: i128) -> Result<Rational> {
    i64::try_from(n).map(Rational::integer).map_err(|_| Error::Overflow)
}

/// Σ_{n≤N} sin(2πnx)/(πn).
pub fn gronwall_partial_sum(n_max: u64, x: f64) -> f64 {
    let mut acc = Neumaier::new();
    for n in 1..=n_max {
        let arg = std::f64::consts::TAU * (n as f64 * x).fract();
        acc.push(arg.sin() / (std::f64::consts::PI * n as f64));
    }
    acc.value()
}

/// Cesàro mean (1/N) Σ_{M≤N} S_M of the partial sums above.
pub fn gronwall_cesaro_mean(n_max: u64, x: f64) -> f64 {
    let mut partial = Neumaier::new();
    let mut mean = Neumaier::new();
    for n in 1..=n_max {
        let arg = std::f64::consts::TAU * (n as f64 * x).fract();
        partial.push(arg.sin() / (std::f64::consts::PI * n as f64));
        mean.push(partial.value());
    }
    mean.value() / n_max as f64
}

/// Largest and smallest partial sum over N ≤ `n_max` and x = j/`grid`
/// in (0, ½).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GronwallScan {
    pub sup: f64,
    pub inf: f64,
    pub argmax_n: u64,
    pub argmax_x: f64,
}

pub fn gronwall_scan(n_max: u64, grid: u64) -> GronwallScan {
    let table: Vec<f64> = (0..grid).map(|k| (std::f64::consts::TAU * k as f64 / grid as f64).sin()).collect();
    let mut scan = GronwallScan { sup: f64::NEG_INFINITY, inf: f64::INFINITY, argmax_n: 0, argmax_x: 0.0 };
    for j in 1..(grid + 1) / 2 {
        if 2 * j >= grid {
            break;
        }
        let mut acc = Neumaier::new();
        for n in 1..=n_max {
            let k = ((n as u128 * j as u128) % grid as u128) as usize;
            acc.push(table[k] / (std::f64::consts::PI * n as f64));
            let s = acc.value();
            if s > scan.sup {
                scan.sup = s;
                scan.argmax_n = n;
                scan.argmax_x = j as f64 / grid as f64;
            }
            scan.inf = scan.inf.min(s);
        }
    }
    scan
}

/// Breakpoints of {t} and {θt} in (lo, hi), sorted, with endpoints.
fn float_breakpoints(theta: f64, lo: f64, hi: f64) -> Vec<f64> {
    let mut pts = vec![lo, hi];
    let mut k = lo.floor() + 1.0;
    while k < hi {
        pts.push(k);
        k += 1.0;
    }
    let mut j = (lo * theta).floor() + 1.0;
    while j / theta < hi {
        pts.push(j / theta);
        j += 1.0;
    }
    pts.sort_by(|a, b| a.total_cmp(b));
    pts.dedup();
    pts
}

/// Checks ∫₀^x t⁻²({θt} − θ{t}) dt = θ log(1/θ) + θ∫_x^{θx} u⁻²{u} du piecewise
/// exactly and returns the residual, or an error if it exceeds `tol`.
pub fn frullani_integral_check(theta: f64, x: f64, tol: f64) -> Result<f64> {
    for (what, v) in [("theta", theta), ("x", x)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain { what, value: v });
        }
    }
    let mut lhs = Neumaier::new();
    for w in float_breakpoints(theta, 0.0, x).windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = 0.5 * (a + b);
        let (m, n) = (mid.floor(), (theta * mid).floor());
        let c = theta * m - n;
        if c != 0.0 {
            lhs.push(c * (b - a) / (a * b));
        }
    }
    let (lo, hi, sign) = if theta >= 1.0 { (x, theta * x, 1.0) } else { (theta * x, x, -1.0) };
    let mut inner = Neumaier::new();
    for w in float_breakpoints(1.0, lo, hi).windows(2) {
        let (a, b) = (w[0], w[1]);
        let m = (0.5 * (a + b)).floor();
        inner.push(((b - a) / a).ln_1p() - m * (b - a) / (a * b));
    }
    let rhs = theta * (1.0 / theta).ln() + sign * theta * inner.value();
    let residual = lhs.value() - rhs;
    if residual.abs() >= tol {
        return Err(Error::Unreachable { achieved: residual.abs(), tol });
    }
    Ok(residual)
}

/// D = {θx} − θ{x}.
fn frac_defect(theta: Rational, x: Rational) -> Result<Rational> {
    theta.checked_mul(x)?.fract().checked_sub(theta.checked_mul(x.fract())?)
}

/// Both sides of Σ_{n≤θx} B₁(n/θ) + Σ_{m≤x} B₁(mθ) = D²/(2θ) + (θ−1)D/(2θ).
pub fn b1_pair_sum_check(theta: Rational, x: Rational) -> Result<(Rational, Rational)> {
    if theta.signum() <= 0 || x.signum() <= 0 {
        return Err(Error::Domain { what: "theta and x must be positive", value: theta.min(x).to_f64() });
    }
    let mut lhs = Rational::ZERO;
    for n in 1..=theta.checked_mul(x)?.floor() {
        lhs = lhs.checked_add(b1(Rational::integer(n).checked_div(theta)?))?;
    }
    for m in 1..=x.floor() {
        lhs = lhs.checked_add(b1(Rational::integer(m).checked_mul(theta)?))?;
    }
    let d = frac_defect(theta, x)?;
    let two_theta = theta.checked_mul(Rational::integer(2))?;
    let rhs = d
        .checked_mul(d)?
        .checked_add(theta.checked_sub(Rational::ONE)?.checked_mul(d)?)?
        .checked_div(two_theta)?;
    Ok((lhs, rhs))
}

/// LHS − RHS of the weighted identity
/// Σ_{m≤x} B₁(mθ)/m + θ Σ_{n≤θx} B₁(n/θ)/n
///   = (θ/2)∫₀^x {t}²/t² + ½∫₀^{θx} {t}²/t² − ∫₀^x {t}{θt}/t² + ((θ−1)/2) log(1/θ)
///     + ((θ−1)/2)∫_x^{θx} {t}/t² + D²/(2θx) + (θ−1)D/(2θx).
pub fn weighted_b1_identity_residual(theta: Rational, x: Rational) -> Result<f64> {
    if theta.signum() <= 0 || x.signum() <= 0 {
        return Err(Error::Domain { what: "theta and x must be positive", value: theta.min(x).to_f64() });
    }
    let mut lhs = Neumaier::new();
    for m in 1..=x.floor() {
        lhs.push(b1(Rational::integer(m).checked_mul(theta)?).to_f64() / m as f64);
    }
    let th = theta.to_f64();
    let theta_x = theta.checked_mul(x)?;
    for n in 1..=theta_x.floor() {
        lhs.push(th * b1(Rational::integer(n).checked_div(theta)?).to_f64() / n as f64);
    }
    let one = Rational::ONE;
    let sq_x = integrate_sawtooth_over_t2(&[one, one], Rational::ZERO, x)?;
    let sq_tx = integrate_sawtooth_over_t2(&[one, one], Rational::ZERO, theta_x)?;
    let cross = integrate_sawtooth_over_t2(&[one, theta], Rational::ZERO, x)?;
    let lin = integrate_sawtooth_over_t2(&[one], x, theta_x)?;
    let d = frac_defect(theta, x)?.to_f64();
    let xf = x.to_f64();
    let mut rhs = Neumaier::new();
    rhs.push(0.5 * th * sq_x);
    rhs.push(0.5 * sq_tx);
    rhs.push(-cross);
    rhs.push(0.5 * (th - 1.0) * (1.0 / th).ln());
    rhs.push(0.5 * (th - 1.0) * lin);
    rhs.push(d * d / (2.0 * th * xf));
    rhs.push((th - 1.0) * d / (2.0 * th * xf));
    Ok(lhs.value() - rhs.value())
}

/// Exact rational conversion for tests and callers holding `Rational`s.
pub fn to_big(x: Rational) -> BigRational {
    BigRational::new(BigInt::from(x.num()), BigInt::from(x.den()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn polynomial_table() {
        assert!((bernoulli_poly(2, 0.0f64).unwrap() - 1.0 / 6.0).abs() < 1e-16);
        assert_eq!(bernoulli_poly(1, 0.5).unwrap(), 0.0);
        assert!((bernoulli_poly(4, 0.0f64).unwrap() + 1.0 / 30.0).abs() < 1e-16);
        // b₃ = x³ − 3x²/2 + x/2
        let c = bernoulli_poly_coefficients(3).unwrap();
        let want = [r(0, 1), r(1, 2), r(-3, 2), r(1, 1)];
        for (got, w) in c.iter().zip(want) {
            assert_eq!(*got, to_big(w));
        }
        assert!(bernoulli_poly(21, 0.3).is_err());
    }

    #[test]
    fn periodic_extension() {
        assert_eq!(bernoulli_fn(1, 3.0).unwrap(), 0.0);
        assert_eq!(bernoulli_fn(1, 0.25).unwrap(), -0.25);
        // b₂(3/4) = 9/16 − 3/4 + 1/6 = −1/48
        assert!((bernoulli_fn(2, 1.75f64).unwrap() + 1.0 / 48.0).abs() < 1e-15);
        assert_eq!(b1(r(7, 2)), Rational::ZERO);
        assert_eq!(b1(r(-1, 4)), r(1, 4));
    }

    #[test]
    fn fourier_series_converges() {
        for n in 1..=4 {
            let x = 0.3;
            let err = (bernoulli_fourier_partial(n, x, 4000) - bernoulli_fn(n, x).unwrap()).abs();
            assert!(err < 1e-3, "n = {n}: {err}");
        }
    }
}
