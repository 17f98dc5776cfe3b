//! log Γ, ψ and ψ′ by upward recurrence and the Stirling series.

use num_complex::Complex;

use super::bernoulli::bernoulli_real;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Shift target and number of Stirling terms for the precision of `T`.
fn asymptotic_params<T: Real>() -> (T, usize) {
    if T::epsilon() < T::from_f64(1e-20).unwrap() {
        (T::from_i(30), 22)
    } else {
        (T::from_i(10), 11)
    }
}

fn check_pole<T: Real>(z: Complex<T>) -> Result<()> {
    if z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round() {
        return Err(Error::Pole { re: z.re.to_f64_lossy(), im: 0.0 });
    }
    Ok(())
}

fn cot_complex<T: Real>(z: Complex<T>) -> Complex<T> {
    z.cos() / z.sin()
}

/// ψ(z) = Γ′(z)/Γ(z).
pub fn digamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_pole(z)?;
    let one = Complex::new(T::one(), T::zero());
    if z.re < T::half() {
        let pi = T::PI();
        return Ok(digamma(one - z)? - cot_complex(z * pi) * pi);
    }
    let (shift, terms) = asymptotic_params::<T>();
    let mut z = z;
    let mut acc = Complex::new(T::zero(), T::zero());
    while z.re < shift {
        acc = acc - z.inv();
        z = z + one;
    }
    let w = z.inv();
    let w2 = w * w;
    let mut pow = w2;
    let mut series = Complex::new(T::zero(), T::zero());
    for k in 1..=terms {
        let c = bernoulli_real::<T>(2 * k) / T::from_usize(2 * k).unwrap();
        series = series + pow * c;
        pow = pow * w2;
    }
    Ok(acc + z.ln() - w * T::half() - series)
}

pub fn digamma_real<T: Real>(x: T) -> Result<T> {
    digamma(Complex::new(x, T::zero())).map(|z| z.re)
}

/// Principal-branch log Γ accumulated through the recurrence: the result is
/// `log Γ(z + N) − Σ_{k<N} log(z + k)` with principal logarithms.
pub fn log_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_pole(z)?;
    let one = Complex::new(T::one(), T::zero());
    let (shift, terms) = asymptotic_params::<T>();
    let mut z = z;
    let mut acc = Complex::new(T::zero(), T::zero());
    while z.re < shift {
        acc = acc + z.ln();
        z = z + one;
    }
    let w = z.inv();
    let w2 = w * w;
    let mut pow = w;
    let mut series = Complex::new(T::zero(), T::zero());
    for k in 1..=terms {
        let c = bernoulli_real::<T>(2 * k) / T::from_usize(2 * k * (2 * k - 1)).unwrap();
        series = series + pow * c;
        pow = pow * w2;
    }
    Ok((z - one * T::half()) * z.ln() - z + one * (T::ln_2pi() * T::half()) + series - acc)
}

pub fn ln_gamma_real<T: Real>(x: T) -> Result<T> {
    log_gamma(Complex::new(x, T::zero())).map(|z| z.re)
}

pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    log_gamma(z).map(|l| l.exp())
}

/// ψ′(x) for real x > 0.
pub fn trigamma<T: Real>(x: T) -> Result<T> {
    if x <= T::zero() {
        return Err(Error::Domain { what: "trigamma", value: x.to_f64_lossy() });
    }
    let (shift, terms) = asymptotic_params::<T>();
    let mut x = x;
    let mut acc = T::zero();
    while x < shift {
        acc = acc + (x * x).recip();
        x = x + T::one();
    }
    let w = x.recip();
    let w2 = w * w;
    let mut pow = w2 * w;
    let mut series = w + w2 * T::half();
    for k in 1..=terms {
        series = series + pow * bernoulli_real::<T>(2 * k);
        pow = pow * w2;
    }
    Ok(acc + series)
}
