//! Hurwitz and Riemann zeta by Euler–Maclaurin summation.

use num_complex::Complex64;

use super::bernoulli::{bernoulli_f64, MAX_BERNOULLI};
use crate::error::{Error, Result};

/// `(N + a)^{-s}` for real base.
#[inline]
fn real_pow_neg(base: f64, s: Complex64) -> Complex64 {
    let modulus = base.powf(-s.re);
    if s.im == 0.0 {
        return Complex64::new(modulus, 0.0);
    }
    Complex64::from_polar(modulus, -s.im * base.ln())
}

/// `(e^w − 1)/w`, stable near 0.
fn expm1_over(w: Complex64) -> Complex64 {
    if w.norm() < 0.25 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut acc = term;
        for n in 2..40 {
            term = term * w / n as f64;
            acc += term;
            if term.norm() < 1e-18 * acc.norm() {
                break;
            }
        }
        acc
    } else {
        (w.exp() - 1.0) / w
    }
}

/// Shared Euler–Maclaurin evaluation. With `regularize` the polar term
/// `1/(s−1)` is removed analytically, which keeps the result finite at s = 1.
fn euler_maclaurin(s: Complex64, a: f64, regularize: bool) -> Complex64 {
    let n_terms = 7 + s.norm().ceil() as usize;
    let mut head = crate::sum::ComplexNeumaier::new();
    for n in 0..n_terms {
        head.push(real_pow_neg((n as f64) + a, s));
    }
    let x = n_terms as f64 + a;
    let lx = x.ln();
    let x_neg_s = real_pow_neg(x, s);
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let polar = if regularize {
        // ((N+a)^{1−s} − 1)/(s − 1) = −log(N+a)·(e^{(1−s)log(N+a)} − 1)/((1−s)log(N+a))
        -lx * expm1_over(one_minus_s * lx)
    } else {
        x_neg_s * x / (s - 1.0)
    };
    let mut tail = polar + x_neg_s * 0.5;
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
    let mut rising = s;
    let mut pow = x_neg_s / x;
    let mut fact = 2.0;
    let mut j = 1;
    while 2 * j <= MAX_BERNOULLI {
        let term = pow * rising * (bernoulli_f64(2 * j) / fact);
        tail += term;
        if term.norm() <= 1e-17 * (tail.norm() + head.value().norm()) {
            break;
        }
        rising = rising * (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        pow = pow / (x * x);
        fact *= ((2 * j + 1) * (2 * j + 2)) as f64;
        j += 1;
    }
    head.value() + tail
}

fn check_a(a: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain { what: "hurwitz_zeta parameter a", value: a });
    }
    Ok(())
}

/// ζ(s, a) = Σ_{n≥0} (n + a)^{−s}, continued to s ≠ 1.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    check_a(a)?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole { re: 1.0, im: 0.0 });
    }
    Ok(euler_maclaurin(s, a, false))
}

/// ζ(s, a) − 1/(s − 1); entire in s.
pub fn hurwitz_zeta_regularized(s: Complex64, a: f64) -> Result<Complex64> {
    check_a(a)?;
    Ok(euler_maclaurin(s, a, true))
}

pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

/// ζ(s, a) for real s > 1, the form used by the resummation formulas.
pub fn hurwitz_zeta_real(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta(Complex64::new(s, 0.0), a).map(|z| z.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::EULER_GAMMA;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn special_values() {
        assert!((hurwitz_zeta(c(0.0, 0.0), 0.25).unwrap() - 0.25).norm() < 1e-15);
        assert!((riemann_zeta(c(2.0, 0.0)).unwrap().re - PI * PI / 6.0).abs() < 1e-15);
        assert!((riemann_zeta(c(0.0, 0.0)).unwrap().re + 0.5).abs() < 1e-15);
        assert!((riemann_zeta(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-13);
        assert!(riemann_zeta(c(-2.0, 0.0)).unwrap().norm() < 1e-15);
        assert!((hurwitz_zeta_real(2.0, 0.5).unwrap() - PI * PI / 2.0).abs() < 1e-14);
        assert!(matches!(riemann_zeta(c(1.0, 0.0)), Err(Error::Pole { .. })));
    }

    #[test]
    fn regularized_constant_term_at_one() {
        // ζ(s,a) − 1/(s−1) → −ψ(a) at s = 1
        let v = hurwitz_zeta_regularized(c(1.0, 0.0), 1.0).unwrap();
        assert!((v.re - EULER_GAMMA).abs() < 1e-15 && v.im.abs() < 1e-16);
        let s = c(1.0 + 1e-3, 0.2);
        let direct = hurwitz_zeta(s, 0.3).unwrap() - 1.0 / (s - 1.0);
        assert!((direct - hurwitz_zeta_regularized(s, 0.3).unwrap()).norm() < 1e-11);
    }
}
