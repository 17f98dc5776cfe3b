//! Numeric Mellin transforms Mf(s) = ∫₀^∞ f(x) x^{s−1} dx on the strip
//! −1 < Re s < 0 for {x}, A and Δ_{p,q}.
//!
//! Every target reduces to integrals of a periodic Bernoulli function
//! against a power: exact on each breakpoint cell, with an Euler–Maclaurin
//! tail whose remainder is bounded explicitly. A is handled through
//! MA(s) = M{·}(s)·M{·}(−1−s) and Δ_{p,q} through its residue classes
//! mod q, so no pointwise value of A or φ₂ enters.

use std::fmt;
use std::io::Write;

use num_complex::Complex64;
use num_integer::Integer;
use rayon::prelude::*;

use crate::autocorr::QuadratureConfig;
use crate::error::{Error, Result};
use crate::estermann::{g1, EstermannPoint};
use crate::output::{fmt_f64, CsvWriter};
use crate::phi::bernoulli_sup;
use crate::rational::Rational;
use crate::scalar::PI;
use crate::specfun::{bernoulli_f64, hurwitz_zeta, riemann_zeta};
use crate::sum::ComplexNeumaier;

/// Largest |Im s| accepted; beyond it x^{iτ} oscillates too fast for the
/// cell counts used here.
pub const MAX_IMAG: f64 = 4.0;

/// Tolerance floor for A and Δ, whose transforms go through Hurwitz zeta.
pub const COMPOSITE_TOL: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MellinTarget {
    FracPart,
    Autocorr,
    Delta { p: i64, q: i64 },
}

impl MellinTarget {
    pub fn delta(p: i64, q: i64) -> Result<Self> {
        if q < 1 || p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(MellinTarget::Delta { p: p.rem_euclid(q), q })
    }

    /// The open strip of absolute convergence.
    pub fn strip(&self) -> (f64, f64) {
        (-1.0, 0.0)
    }

    fn check(&self, s: Complex64) -> Result<()> {
        let (lo, hi) = self.strip();
        if !(s.re > lo && s.re < hi) {
            return Err(Error::Strip { re: s.re, im: s.im, lo, hi });
        }
        if s.im.abs() > MAX_IMAG {
            return Err(Error::Domain { what: "mellin |Im s|", value: s.im });
        }
        Ok(())
    }
}

impl fmt::Display for MellinTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MellinTarget::FracPart => write!(f, "fracpart"),
            MellinTarget::Autocorr => write!(f, "autocorr"),
            MellinTarget::Delta { p, q } => write!(f, "delta({p}/{q})"),
        }
    }
}

/// A complex value with an absolute error radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinValue {
    pub value: Complex64,
    pub err: f64,
}

impl std::ops::Mul for MellinValue {
    type Output = MellinValue;

    fn mul(self, o: MellinValue) -> MellinValue {
        let err = self.value.norm() * o.err + o.value.norm() * self.err + self.err * o.err;
        MellinValue { value: self.value * o.value, err }
    }
}

fn pochhammer_down(s: Complex64, j: usize) -> Complex64 {
    (1..=j).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (s - i as f64))
}

const TAIL_TERMS: usize = 10;

/// ∫₀^∞ (Bₖ({λx + a}) − Bₖ(a)) x^{s−1} dx for k ∈ {1, 2}, λ > 0, 0 ≤ a < 1.
fn periodic_mellin(k: usize, lambda: f64, a: f64, s: Complex64) -> MellinValue {
    debug_assert!(k == 1 || k == 2);
    let bk = |y: f64| if k == 1 { y - 0.5 } else { y * y - y + 1.0 / 6.0 };
    let base = bk(a);
    // cells [x_n, x_{n+1}], x_n = (n − a)/λ, x_0 = 0
    let cells = (32.0 * lambda).ceil() as i64 + 1;
    let edge = |n: i64| if n == 0 { 0.0 } else { (n as f64 - a) / lambda };
    let power = |x: f64, m: usize| if x == 0.0 { Complex64::new(0.0, 0.0) } else { Complex64::new(x, 0.0).powc(s + m as f64) };
    let mut acc = ComplexNeumaier::new();
    let mut mag = 0.0;
    for n in 0..cells {
        let (lo, hi) = (edge(n), edge(n + 1));
        let d = a - n as f64;
        // Bₖ(λx + d) − Bₖ(a) as Σ c_m x^m
        let coeffs: Vec<f64> = if k == 1 {
            vec![bk(d) - base, lambda]
        } else {
            vec![bk(d) - base, lambda * (2.0 * d - 1.0), lambda * lambda]
        };
        for (m, &c) in coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let term = c * (power(hi, m) - power(lo, m)) / (s + m as f64);
            mag += term.norm();
            acc.push(term);
        }
    }
    let x = edge(cells);
    // −Bₖ(a) ∫_X^∞ x^{s−1} dx
    let mean_tail = base * Complex64::new(x, 0.0).powc(s) / s;
    acc.push(mean_tail);
    // ∫_X^∞ Pₖ(λx + a) x^{s−1} dx by repeated integration by parts; λX + a
    // is an integer so every boundary value is a Bernoulli number.
    let kfact = if k == 1 { 1.0 } else { 2.0 };
    let mut fact = kfact;
    for j in 0..TAIL_TERMS {
        fact *= (k + 1 + j) as f64;
        let deriv = pochhammer_down(s, j) * Complex64::new(x, 0.0).powc(s - 1.0 - j as f64);
        let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
        let term = sign * bernoulli_f64(k + 1 + j) * kfact / fact * lambda.powi(-(j as i32 + 1)) * deriv;
        mag += term.norm();
        acc.push(term);
    }
    let j = TAIL_TERMS;
    let mut fact_j = kfact;
    for i in 1..=j {
        fact_j *= (k + i) as f64;
    }
    let remainder = bernoulli_sup(k + j) * kfact / fact_j
        * lambda.powi(-(j as i32))
        * pochhammer_down(s, j).norm()
        * x.powf(s.re - j as f64)
        / (j as f64 - s.re);
    MellinValue { value: acc.value(), err: remainder + 1e-14 * (mag + mean_tail.norm()) }
}

/// ∫₀^∞ {λx} x^{s−1} dx, cell by cell in x.
pub fn fracpart_scaled(lambda: Rational, s: Complex64) -> Result<MellinValue> {
    MellinTarget::FracPart.check(s)?;
    if lambda.signum() <= 0 {
        return Err(Error::Domain { what: "scaling factor", value: lambda.to_f64() });
    }
    Ok(periodic_mellin(1, lambda.to_f64(), 0.0, s))
}

fn delta_mellin(p: i64, q: i64, s: Complex64) -> Result<MellinValue> {
    // Δ_{p,q}(x) = Σ_k k⁻² (B₂({kx + kp/q}) − B₂({kp/q})); the transform of
    // the k-th term is k^{−2−s} I({kp/q}), so classes k ≡ r (q) collect into
    // q^{−2−s} ζ(2 + s, r/q).
    let mut acc = ComplexNeumaier::new();
    let mut err = 0.0;
    let scale = Complex64::new(q as f64, 0.0).powc(-(s + 2.0));
    for r in 1..=q {
        let a = ((r as i128 * p as i128) % q as i128) as f64 / q as f64;
        let inner = periodic_mellin(2, 1.0, a, s);
        let z = hurwitz_zeta(s + 2.0, r as f64 / q as f64)? * scale;
        acc.push(z * inner.value);
        err += z.norm() * (inner.err + 1e-14 * inner.value.norm());
    }
    Ok(MellinValue { value: acc.value(), err })
}

/// Mf(s) with its error radius.
pub fn mellin_certified(target: MellinTarget, s: Complex64) -> Result<MellinValue> {
    target.check(s)?;
    match target {
        MellinTarget::FracPart => Ok(periodic_mellin(1, 1.0, 0.0, s)),
        // ∫∫ {t}{xt} t⁻² x^{s−1} dt dx with u = xt
        MellinTarget::Autocorr => Ok(periodic_mellin(1, 1.0, 0.0, s) * periodic_mellin(1, 1.0, 0.0, -s - 1.0)),
        MellinTarget::Delta { p, q } => delta_mellin(p, q, s),
    }
}

/// Mf(s), failing if the certified radius exceeds the target's tolerance:
/// `cfg.tol` for {x}, max(cfg.tol, 1e−5) for A and Δ.
pub fn mellin_numeric(target: MellinTarget, s: Complex64, cfg: &QuadratureConfig) -> Result<Complex64> {
    let v = mellin_certified(target, s)?;
    let tol = match target {
        MellinTarget::FracPart => cfg.tol(),
        _ => cfg.tol().max(COMPOSITE_TOL),
    };
    if v.err > tol {
        return Err(Error::Unreachable { achieved: v.err, tol });
    }
    Ok(v.value)
}

/// ζ(−s)/s.
pub fn fracpart_closed_form(s: Complex64) -> Result<Complex64> {
    Ok(riemann_zeta(-s)? / s)
}

/// The closed forms being checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MellinIdentity {
    /// MA(s) = −ζ(−s)ζ(s+1)/(s(s+1)).
    Autocorr,
    /// MΔ_{p,q}(s) = −G₁(s; p/q)/π².
    Delta { p: i64, q: i64 },
}

impl MellinIdentity {
    pub fn target(&self) -> Result<MellinTarget> {
        match *self {
            MellinIdentity::Autocorr => Ok(MellinTarget::Autocorr),
            MellinIdentity::Delta { p, q } => MellinTarget::delta(p, q),
        }
    }

    pub fn closed_form(&self, s: Complex64) -> Result<Complex64> {
        match *self {
            MellinIdentity::Autocorr => Ok(-riemann_zeta(-s)? * riemann_zeta(s + 1.0)? / (s * (s + 1.0))),
            MellinIdentity::Delta { p, q } => Ok(-g1(EstermannPoint::new(s, p, q)?)? / (PI * PI)),
        }
    }
}

impl fmt::Display for MellinIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MellinIdentity::Autocorr => write!(f, "autocorr"),
            MellinIdentity::Delta { p, q } => write!(f, "delta({p}/{q})"),
        }
    }
}

/// |numeric − closed form| / (1 + |closed form|).
pub fn mellin_identity_residual(which: MellinIdentity, s: Complex64) -> Result<f64> {
    let numeric = mellin_certified(which.target()?, s)?.value;
    let exact = which.closed_form(s)?;
    Ok((numeric - exact).norm() / (1.0 + exact.norm()))
}

/// |M[{λ·}](s) − λ^{−s} M{·}(s)|.
pub fn scaling_residual(lambda: Rational, s: Complex64) -> Result<f64> {
    let scaled = fracpart_scaled(lambda, s)?;
    let plain = mellin_certified(MellinTarget::FracPart, s)?;
    let factor = Complex64::new(lambda.to_f64(), 0.0).powc(-s);
    Ok((scaled.value - factor * plain.value).norm())
}

/// The 3×3 grid Re s ∈ {−0.7, −0.5, −0.3}, Im s ∈ {0, 1, 2}.
pub fn strip_grid() -> Vec<Complex64> {
    let mut out = Vec::with_capacity(9);
    for re in [-0.7, -0.5, -0.3] {
        for im in [0.0, 1.0, 2.0] {
            out.push(Complex64::new(re, im));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinResidualRow {
    pub which: MellinIdentity,
    pub s: Complex64,
    pub residual: f64,
}

/// Residuals of each identity over the given points, in input order.
pub fn residual_grid(which: &[MellinIdentity], points: &[Complex64]) -> Result<Vec<MellinResidualRow>> {
    let jobs: Vec<(MellinIdentity, Complex64)> = which.iter().flat_map(|&w| points.iter().map(move |&s| (w, s))).collect();
    jobs.into_par_iter()
        .map(|(which, s)| Ok(MellinResidualRow { which, s, residual: mellin_identity_residual(which, s)? }))
        .collect()
}

pub fn write_residual_csv<W: Write>(out: W, rows: &[MellinResidualRow]) -> std::io::Result<W> {
    let mut csv = CsvWriter::new(out, &["which", "s_re", "s_im", "residual"])?;
    for r in rows {
        csv.row(&[r.which.to_string(), fmt_f64(r.s.re), fmt_f64(r.s.im), fmt_f64(r.residual)])?;
    }
    csv.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_interval_alone() {
        // ∫₀¹ x·x^{s−1} = 1/(s+1) is the first cell of {x}
        let s = Complex64::new(-0.5, 0.0);
        let full = periodic_mellin(1, 1.0, 0.0, s);
        let closed = fracpart_closed_form(s).unwrap();
        assert!((full.value - closed).norm() < 1e-12, "{full:?} vs {closed}");
    }
}
