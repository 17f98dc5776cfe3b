//! The functions φₙ(x) = Σ_{k≥1} Bₙ(kx)/kⁿ, their increments
//! Δ_{p,q}(t) = φ₂(p/q + t) − φ₂(p/q) at rationals, and the coefficients of
//! the local expansions of φ₂ and A near p/q.
//!
//! At a rational a/b the series is resummed exactly through Hurwitz zeta,
//! φₙ(a/b) = b⁻ⁿ Σ_{r=1}^{b} Bₙ(ra/b) ζ(n, r/b),
//! so nothing is truncated. Elsewhere the series is truncated with the
//! explicit tail bound sup|Bₙ|·Σ_{k>K} k⁻ⁿ.

use num_integer::Integer;

use crate::certified::CertifiedReal;
use crate::error::{Error, Result};
use crate::fracpart::bernoulli_poly;
use crate::quad::GL16;
use crate::rational::Rational;
use crate::scalar::{Real, PI};
use crate::specfun::{hurwitz_zeta_real, riemann_zeta};
use crate::sum::Neumaier;
use crate::vasyunin::vasyunin_cot;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiEvalConfig {
    tol: f64,
    max_terms: u64,
    rational_resum: bool,
}

impl PhiEvalConfig {
    pub fn new(tol: f64, max_terms: u64, rational_resum: bool) -> Result<Self> {
        if !(tol >= 1e-14) {
            return Err(Error::Domain { what: "PhiEvalConfig tol (>= 1e-14)", value: tol });
        }
        if max_terms == 0 {
            return Err(Error::Domain { what: "PhiEvalConfig max_terms", value: 0.0 });
        }
        Ok(PhiEvalConfig { tol, max_terms, rational_resum })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }

    pub fn rational_resum(&self) -> bool {
        self.rational_resum
    }
}

impl Default for PhiEvalConfig {
    fn default() -> Self {
        PhiEvalConfig { tol: 1e-12, max_terms: 10_000_000, rational_resum: true }
    }
}

/// sup |Bₙ| ≤ 2 n! ζ(n) (2π)⁻ⁿ for n ≥ 2.
pub fn bernoulli_sup(n: usize) -> f64 {
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let zeta = riemann_zeta(num_complex::Complex64::new(n as f64, 0.0)).expect("n >= 2").re;
    2.0 * fact * zeta / std::f64::consts::TAU.powi(n as i32)
}

/// Σ_{k≤K} Bₙ(kx)/kⁿ.
pub fn phi_truncated(n: usize, x: f64, terms: u64) -> Result<f64> {
    let mut acc = Neumaier::new();
    for k in 1..=terms {
        let y = k as f64 * x;
        let b = bernoulli_poly(n, y - y.floor())?;
        acc.push(b / (k as f64).powi(n as i32));
    }
    Ok(acc.value())
}

fn check_index(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain { what: "phi_n index (n >= 2)", value: n as f64 });
    }
    Ok(())
}

/// φₙ(x) by truncation with a certified tail.
pub fn phi_n(n: usize, x: f64, cfg: &PhiEvalConfig) -> Result<CertifiedReal> {
    check_index(n)?;
    let sup = bernoulli_sup(n);
    // Σ_{k>K} k⁻ⁿ ≤ K^{1−n}/(n−1)
    let tail = |k: f64| sup * k.powi(1 - n as i32) / (n - 1) as f64;
    let needed = (sup / ((n - 1) as f64 * cfg.tol)).powf(1.0 / (n - 1) as f64).ceil();
    if needed > cfg.max_terms as f64 {
        return Err(Error::Unreachable { achieved: tail(cfg.max_terms as f64), tol: cfg.tol });
    }
    let k = needed.max(1.0) as u64;
    let v = phi_truncated(n, x, k)?;
    Ok(CertifiedReal::new(v, tail(k as f64) + 4.0 * f64::EPSILON * k as f64 * sup))
}

/// φₙ(x) at a rational, resummed exactly when the config allows it.
pub fn phi_n_rational(n: usize, x: Rational, cfg: &PhiEvalConfig) -> Result<CertifiedReal> {
    check_index(n)?;
    if cfg.rational_resum {
        phi_resummed(n, x)
    } else {
        phi_n(n, x.to_f64(), cfg)
    }
}

/// b⁻ⁿ Σ_{r=1}^{b} Bₙ(ra/b) ζ(n, r/b).
pub fn phi_resummed(n: usize, x: Rational) -> Result<CertifiedReal> {
    check_index(n)?;
    let (a, b) = (x.num().rem_euclid(x.den()), x.den());
    let bf = b as f64;
    let mut acc = Neumaier::new();
    let mut mag = 0.0;
    for r in 1..=b {
        let res = ((r as i128 * a as i128) % b as i128) as i64;
        let bn = bernoulli_poly(n, res as f64 / bf)?;
        let z = if r == b { hurwitz_zeta_real(n as f64, 1.0)? } else { hurwitz_zeta_real(n as f64, r as f64 / bf)? };
        let term = bn * z * bf.powi(-(n as i32));
        mag += term.abs();
        acc.push(term);
    }
    Ok(CertifiedReal::new(acc.value(), 1e-14 * mag))
}

/// ∫_a^∞ w(v) φ₂(x₀ + v) dv for a weight w(v) = Σ c_m v^{−m} (m ≥ 2) and
/// a rational start a > 0.
///
/// Five integrations by parts against Φ_j = 2φ_{j+2}/(j+2)! (so Φ_j′ = Φ_{j−1})
/// move everything onto exact rational values of φ₃, …, φ₇; the remainder
/// −∫ w⁽⁵⁾ Φ₅ has |Φ₅| ≤ 12(2π)⁻⁷ and a C⁵ integrand, so Gauss–Legendre on
/// short cells is accurate.
pub fn phi2_weighted_tail(x0: Rational, a: Rational, weight: &[(i32, f64)]) -> Result<CertifiedReal> {
    const STEPS: usize = 5;
    const TERMS: u64 = 60;
    if a.signum() <= 0 {
        return Err(Error::Domain { what: "phi2_weighted_tail start", value: a.to_f64() });
    }
    if let Some(&(m, _)) = weight.iter().find(|(m, _)| *m < 2) {
        return Err(Error::Domain { what: "phi2_weighted_tail weight power (>= 2)", value: m as f64 });
    }
    // derivatives of the weight as (power, coefficient) lists
    let mut derivs = vec![weight.to_vec()];
    for i in 0..STEPS {
        let next = derivs[i].iter().map(|&(m, c)| (m + 1, -(m as f64) * c)).collect();
        derivs.push(next);
    }
    let eval = |w: &[(i32, f64)], v: f64| w.iter().map(|&(m, c)| c * v.powi(-m)).sum::<f64>();
    let af = a.to_f64();
    let start = x0.checked_add(a)?;
    let mut value = Neumaier::new();
    let mut err = 0.0;
    let mut fact = 2.0;
    for (i, w) in derivs.iter().take(STEPS).enumerate() {
        let n = i + 3;
        fact *= n as f64;
        let phi = phi_resummed(n, start)?;
        let coef = if i % 2 == 0 { -1.0 } else { 1.0 } * eval(w, af) * 2.0 / fact;
        value.push(coef * phi.value);
        err += coef.abs() * phi.err;
    }
    let last = &derivs[STEPS];
    let phi_sup = 12.0 * std::f64::consts::TAU.powi(-7);
    let fact7 = 5040.0;
    let x0f = x0.to_f64();
    let remainder_at = |v: f64| -> Result<f64> { Ok(eval(last, v) * 2.0 * phi_truncated(7, x0f + v, TERMS)? / fact7) };
    // |w⁽⁵⁾| integrated from L to ∞
    let tail_mass = |l: f64| last.iter().map(|&(m, c)| c.abs() * l.powi(1 - m) / (m - 1) as f64).sum::<f64>();
    let mut fine = Neumaier::new();
    let mut coarse = Neumaier::new();
    let mut lo = af;
    while phi_sup * tail_mass(lo) > 1e-15 {
        let h = (0.25f64).min(lo / 2.0);
        let mid = lo + h / 2.0;
        let mut f = |x: f64| remainder_at(x).unwrap_or(f64::NAN);
        fine.push(GL16.integrate(lo, mid, &mut f) + GL16.integrate(mid, lo + h, &mut f));
        coarse.push(GL16.integrate(lo, lo + h, &mut f));
        lo += h;
    }
    let rem = fine.value();
    if !rem.is_finite() {
        return Err(Error::Domain { what: "phi2_weighted_tail remainder", value: rem });
    }
    value.push(-rem);
    // truncation of φ₇ after K terms: sup|B₇| K⁻⁶/6, over the weight mass
    let trunc = 2.0 * bernoulli_sup(7) * (TERMS as f64).powi(-6) / 6.0 / fact7 * tail_mass(af);
    err += (rem - coarse.value()).abs() + phi_sup * tail_mass(lo) + trunc + 1e-15 * rem.abs();
    Ok(CertifiedReal::new(value.value(), err))
}

/// φ₁(p/q) = (π/2q) V(p, q).
pub fn phi1_rational<T: Real>(p: i64, q: i64) -> Result<T> {
    let v: T = vasyunin_cot(p, q)?;
    Ok(T::PI() * v / (T::from_i(2) * T::from_i(q)))
}

/// Δ_{p,q}(t) = φ₂(p/q + t) − φ₂(p/q) for rational t.
pub fn delta(p: i64, q: i64, t: Rational, cfg: &PhiEvalConfig) -> Result<CertifiedReal> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    if t == Rational::ZERO {
        return Ok(CertifiedReal::exact(0.0));
    }
    let base = Rational::new(p, q)?;
    let shifted = phi_n_rational(2, base.checked_add(t)?, cfg)?;
    Ok(shifted - phi_n_rational(2, base, cfg)?)
}

/// Coefficients of the one-sided expansions of φ₂ and A near p/q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionCoefficients<T> {
    /// πV(p,q) ± (2 log q + log 2π − γ − 1).
    pub c_plus: T,
    pub c_minus: T,
    /// Linear coefficients of A(p/q + t) − A(p/q) for t ≷ 0.
    pub d_plus: T,
    pub d_minus: T,
    /// q(p + q ± 1)/(4p²).
    pub quad_plus: T,
    pub quad_minus: T,
    pub p: i64,
    pub q: i64,
}

pub fn expansion_coeffs<T: Real>(p: i64, q: i64) -> Result<ExpansionCoefficients<T>> {
    if p < 1 || q < 1 {
        return Err(Error::Domain { what: "expansion_coeffs needs p, q >= 1", value: p.min(q) as f64 });
    }
    let v_pq: T = vasyunin_cot(p, q)?;
    let v_qp: T = vasyunin_cot(q, p)?;
    let (pt, qt) = (T::from_i(p), T::from_i(q));
    let two = T::from_i(2);
    let lg = T::ln_2pi() - T::euler_gamma();
    let shift = two * qt.ln() + lg - T::one();
    let d_common = -(pt / qt).ln() / two + lg / two - T::PI() * v_qp / (two * pt);
    let d_odd = qt.ln() / pt + (lg - T::one()) / (two * pt);
    let four_p2 = T::from_i(4) * pt * pt;
    Ok(ExpansionCoefficients {
        c_plus: T::PI() * v_pq + shift,
        c_minus: T::PI() * v_pq - shift,
        d_plus: d_common + d_odd,
        d_minus: d_common - d_odd,
        quad_plus: qt * T::from_i(p + q + 1) / four_p2,
        quad_minus: qt * T::from_i(p + q - 1) / four_p2,
        p,
        q,
    })
}

/// q⁻¹(|t| log|t| + C^{sgn t} t) − t²/2, the local model of Δ_{p,q}(t).
pub fn delta_model(p: i64, q: i64, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(0.0);
    }
    let v: f64 = vasyunin_cot(p, q)?;
    let qf = q as f64;
    let shift = 2.0 * qf.ln() + crate::scalar::LN_2PI_MINUS_GAMMA - 1.0;
    let c = if t > 0.0 { PI * v + shift } else { PI * v - shift };
    Ok((t.abs() * t.abs().ln() + c * t) / qf - 0.5 * t * t)
}

/// sup_{|x−y|≤δ} |φ₂(x) − φ₂(y)| over the grid x = j/grid, divided by δ log(1/δ).
pub fn phi2_continuity_scan(delta: f64, grid: u32) -> Result<f64> {
    if !(delta > 0.0 && delta <= 0.5) || grid == 0 {
        return Err(Error::Domain { what: "phi2_continuity_scan delta in (0, 1/2]", value: delta });
    }
    let values = (0..grid)
        .map(|j| phi_resummed(2, Rational::new(j as i64, grid as i64)?).map(|c| c.value))
        .collect::<Result<Vec<f64>>>()?;
    let reach = (delta * grid as f64 + 1e-9).floor() as usize;
    let n = values.len();
    let mut sup: f64 = 0.0;
    for i in 0..n {
        for d in 1..=reach.min(n) {
            sup = sup.max((values[i] - values[(i + d) % n]).abs());
        }
    }
    Ok(sup / (delta * (1.0 / delta).ln()))
}

/// Σ_{k≤K} τ(k) sin(kx)/k, rearranged over divisor pairs as
/// Σ_a (1/a) Σ_{b≤K/a} sin(abx)/b.
pub fn tau_sin_partial_sum(terms: u64, x: f64) -> f64 {
    let mut acc = Neumaier::new();
    for a in 1..=terms {
        let mut inner = Neumaier::new();
        for b in 1..=terms / a {
            inner.push((((a * b) as f64) * x).sin() / b as f64);
        }
        acc.push(inner.value() / a as f64);
    }
    acc.value()
}

/// max over x = 2πj/grid of |Σ_{k≤K} τ(k) sin(kx)/k| / log K, with the sines
/// taken from an exactly indexed table.
pub fn tau_sin_scan(terms: u64, grid: u64) -> f64 {
    let table: Vec<f64> = (0..grid).map(|j| (std::f64::consts::TAU * j as f64 / grid as f64).sin()).collect();
    // τ(k) by a divisor sieve, then the plain Dirichlet sum for each x
    let mut tau = vec![0u32; terms as usize + 1];
    for a in 1..=terms as usize {
        for m in (a..=terms as usize).step_by(a) {
            tau[m] += 1;
        }
    }
    let weights: Vec<f64> = (0..=terms as usize).map(|k| if k == 0 { 0.0 } else { tau[k] as f64 / k as f64 }).collect();
    let mut worst: f64 = 0.0;
    for j in 0..grid {
        let mut acc = Neumaier::new();
        for k in 1..=terms {
            acc.push(weights[k as usize] * table[((k * j) % grid) as usize]);
        }
        worst = worst.max(acc.value().abs());
    }
    worst / (terms as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resummed_values() {
        let z = phi_resummed(2, Rational::ZERO).unwrap();
        assert!((z.value - PI * PI / 36.0).abs() < 1e-15);
        let h = phi_resummed(2, Rational::new(1, 2).unwrap()).unwrap();
        // (1/4)[(−1/12)(π²/2) + (1/6)(π²/6)] = −π²/288
        assert!((h.value + PI * PI / 288.0).abs() < 1e-15);
    }

    #[test]
    fn truncation_agrees_with_resummation() {
        let cfg = PhiEvalConfig::new(1e-9, 10_000_000, false).unwrap();
        let x = Rational::new(2, 7).unwrap();
        let t = phi_n(3, x.to_f64(), &cfg).unwrap();
        let r = phi_resummed(3, x).unwrap();
        assert!(t.overlaps(r, 1e-13), "{t:?} vs {r:?}");
        let tight = PhiEvalConfig::new(1e-14, 1000, false).unwrap();
        assert!(matches!(phi_n(2, 0.3, &tight), Err(Error::Unreachable { .. })));
    }
}
