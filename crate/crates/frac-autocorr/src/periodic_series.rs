//! Lehmer's Euler constants for arithmetic progressions and Dirichlet
//! series with periodic coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::PI;
use crate::specfun::{digamma_real, j12};
use crate::sum::{ComplexNeumaier, Neumaier};
use crate::vasyunin::vasyunin_cot;

/// γ(r, q) = −(ψ(r/q) + log q)/q.
pub fn lehmer_gamma(r: i64, q: i64) -> Result<f64> {
    if q < 1 || r < 1 || r > q {
        return Err(Error::Domain { what: "lehmer_gamma needs 1 <= r <= q", value: r as f64 });
    }
    Ok(-(digamma_real(r as f64 / q as f64)? + (q as f64).ln()) / q as f64)
}

/// R(x, r, q) = (½ − {(x−r)/q})/x + (1/q) J₁,₂(r/q, (x−r)/q).
pub fn progression_remainder(x: f64, r: i64, q: i64) -> Result<f64> {
    let y = (x - r as f64) / q as f64;
    let j = j12(Complex64::new(r as f64 / q as f64, 0.0), y)?;
    Ok((0.5 - (y - y.floor())) / x + j.re / q as f64)
}

/// The direct sum Σ_{n≤x, n≡r (q)} 1/n and its prediction
/// (log x)/q + γ(r, q) + R(x, r, q).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProgressionSum {
    pub sum: f64,
    pub predicted: f64,
}

pub fn progression_partial_sum(x: f64, r: i64, q: i64) -> Result<ProgressionSum> {
    if !(x > r as f64) {
        return Err(Error::Domain { what: "progression_partial_sum needs x > r", value: x });
    }
    let mut acc = Neumaier::new();
    let mut n = r;
    while n as f64 <= x {
        acc.push(1.0 / n as f64);
        n += q;
    }
    let predicted = x.ln() / q as f64 + lehmer_gamma(r, q)? + progression_remainder(x, r, q)?;
    Ok(ProgressionSum { sum: acc.value(), predicted })
}

/// g(1), …, g(q) extended by periodicity; g(0) = g(q).
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicCoefficients {
    values: Vec<Complex64>,
    exact: Option<Vec<Rational>>,
}

impl PeriodicCoefficients {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain { what: "period", value: 0.0 });
        }
        Ok(PeriodicCoefficients { values, exact: None })
    }

    pub fn real(values: &[f64]) -> Result<Self> {
        PeriodicCoefficients::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Exact rational coefficients; the mean is then tested exactly.
    pub fn rational(values: &[Rational]) -> Result<Self> {
        let mut g = PeriodicCoefficients::new(values.iter().map(|v| Complex64::new(v.to_f64(), 0.0)).collect())?;
        g.exact = Some(values.to_vec());
        Ok(g)
    }

    pub fn period(&self) -> i64 {
        self.values.len() as i64
    }

    pub fn get(&self, n: i64) -> Complex64 {
        let q = self.period();
        self.values[((n - 1).rem_euclid(q)) as usize]
    }

    /// S(g) = (1/q) Σ g(r).
    pub fn mean(&self) -> Complex64 {
        let mut acc = ComplexNeumaier::new();
        for &v in &self.values {
            acc.push(v);
        }
        acc.value() / self.period() as f64
    }

    fn mean_is_zero(&self) -> Result<bool> {
        if let Some(exact) = &self.exact {
            let mut s = Rational::ZERO;
            for &v in exact {
                s = s.checked_add(v)?;
            }
            return Ok(s == Rational::ZERO);
        }
        let scale = self.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        Ok(self.mean().norm() <= 1e-13 * scale.max(1.0))
    }

    /// γ(g) = Σ_r g(r) γ(r, q).
    pub fn euler_constant(&self) -> Result<Complex64> {
        let q = self.period();
        let mut acc = ComplexNeumaier::new();
        for r in 1..=q {
            acc.push(self.get(r) * lehmer_gamma(r, q)?);
        }
        Ok(acc.value())
    }

    /// R(x, g) = Σ_r g(r) R(x, r, q), for x > q.
    pub fn remainder(&self, x: f64) -> Result<Complex64> {
        let q = self.period();
        let mut acc = ComplexNeumaier::new();
        for r in 1..=q {
            acc.push(self.get(r) * progression_remainder(x, r, q)?);
        }
        Ok(acc.value())
    }

    /// Σ_{n≤x} g(n)/n.
    pub fn partial_sum(&self, x: f64) -> Complex64 {
        let mut acc = ComplexNeumaier::new();
        let mut n = 1i64;
        while n as f64 <= x {
            acc.push(self.get(n) / n as f64);
            n += 1;
        }
        acc.value()
    }
}

/// Σ_{n≥1} g(n)/n = −(1/q) Σ_r g(r) ψ(r/q), defined only when S(g) = 0.
pub fn periodic_series_sum(g: &PeriodicCoefficients) -> Result<Complex64> {
    if !g.mean_is_zero()? {
        let s = g.mean();
        return Err(Error::Divergent { re: s.re, im: s.im });
    }
    let q = g.period();
    let mut acc = ComplexNeumaier::new();
    for r in 1..=q {
        acc.push(g.get(r) * digamma_real(r as f64 / q as f64)?);
    }
    Ok(-acc.value() / q as f64)
}

/// Σ_{n≥1} g(n)/(n(n+1)) = g(0) + (1/q) Σ_r (g(r−1) − g(r)) ψ(r/q).
pub fn shifted_series_sum(g: &PeriodicCoefficients) -> Result<Complex64> {
    let q = g.period();
    let mut acc = ComplexNeumaier::new();
    for r in 1..=q {
        acc.push((g.get(r - 1) - g.get(r)) * digamma_real(r as f64 / q as f64)?);
    }
    Ok(g.get(0) + acc.value() / q as f64)
}

/// Σ_{n≤N} g(n)/(n(n+1)) summed directly.
pub fn shifted_series_direct(g: &PeriodicCoefficients, terms: i64) -> Complex64 {
    let mut acc = ComplexNeumaier::new();
    for n in 1..=terms {
        let nf = n as f64;
        acc.push(g.get(n) / (nf * (nf + 1.0)));
    }
    acc.value()
}

/// Σ_{k≤K} B₁(kp/q)/k.
pub fn b1_series_partial(p: i64, q: i64, terms: u64) -> Result<f64> {
    crate::vasyunin::VasyuninInput::new(p, q)?;
    let p = p.rem_euclid(q);
    let mut acc = Neumaier::new();
    let mut r = 0i64;
    for k in 1..=terms {
        r = (r + p) % q;
        if r != 0 {
            acc.push((r as f64 / q as f64 - 0.5) / k as f64);
        }
    }
    Ok(acc.value())
}

/// lim_K Σ_{k≤K} B₁(kp/q)/k = π V(p, q)/(2q).
pub fn b1_series_limit(p: i64, q: i64) -> Result<f64> {
    Ok(PI * vasyunin_cot::<f64>(p, q)? / (2.0 * q as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::EULER_GAMMA;

    #[test]
    fn lehmer_values() {
        assert!((lehmer_gamma(1, 1).unwrap() - EULER_GAMMA).abs() < 1e-15);
        assert!((lehmer_gamma(1, 2).unwrap() - 0.635_181_422_8).abs() < 1e-10);
        assert!((lehmer_gamma(2, 2).unwrap() - (EULER_GAMMA - 2f64.ln()) / 2.0).abs() < 1e-15);
        assert!((lehmer_gamma(2, 2).unwrap() + 0.057_965_757_8).abs() < 1e-10);
        assert!(lehmer_gamma(3, 2).is_err());
    }

    #[test]
    fn alternating_harmonic() {
        let g = PeriodicCoefficients::real(&[1.0, -1.0]).unwrap();
        assert!((periodic_series_sum(&g).unwrap().re - 2f64.ln()).abs() < 1e-15);
        let ones = PeriodicCoefficients::rational(&[Rational::ONE, Rational::ONE]).unwrap();
        assert_eq!(periodic_series_sum(&ones), Err(Error::Divergent { re: 1.0, im: 0.0 }));
    }
}
