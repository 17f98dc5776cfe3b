//! The multiplicative autocorrelation A(λ) = ∫₀^∞ {t}{λt} t⁻² dt.
//!
//! Two evaluation routes that share nothing but arithmetic: exact-breakpoint
//! quadrature with a periodic tail correction, and the closed form through
//! Vasyunin sums at rationals. Around them sit the relations to φ₁ and φ₂,
//! the local expansion at p/q, the functional equation of Δ_{p,q} and the
//! Farey sweep.

use std::io::Write;

use num_integer::Integer;
use num_traits::Float;
use rayon::prelude::*;
use serde::Serialize;

use crate::certified::CertifiedReal;
use crate::error::{Error, Result};
use crate::farey::farey_sequence;
use crate::output::{fmt_f64, CsvWriter};
use crate::phi::{delta, expansion_coeffs, phi1_rational, phi2_weighted_tail, phi_resummed, ExpansionCoefficients, PhiEvalConfig};
use crate::piecewise::piece_integral;
use crate::rational::{modular_inverse, Rational};
use crate::scalar::{Real, EULER_GAMMA, LN_2PI, LN_2PI_MINUS_GAMMA};
use crate::sum::Neumaier;
use crate::vasyunin::{vasyunin_cot, CotTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailOrder {
    /// Tail μ/T.
    First,
    /// Tail μ/T + F̄/T², F̄ the mean of the periodic antiderivative.
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    tol: f64,
    max_periods: u64,
    tail_order: TailOrder,
}

impl QuadratureConfig {
    pub fn new(tol: f64, max_periods: u64, tail_order: TailOrder) -> Result<Self> {
        if !(tol >= 1e-13) {
            return Err(Error::Domain { what: "QuadratureConfig tol (>= 1e-13)", value: tol });
        }
        if max_periods == 0 {
            return Err(Error::Domain { what: "QuadratureConfig max_periods", value: 0.0 });
        }
        Ok(QuadratureConfig { tol, max_periods, tail_order })
    }

    pub fn with_tol(tol: f64) -> Result<Self> {
        QuadratureConfig::new(tol, Self::default().max_periods, TailOrder::Second)
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_periods(&self) -> u64 {
        self.max_periods
    }

    pub fn tail_order(&self) -> TailOrder {
        self.tail_order
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { tol: 1e-10, max_periods: 10_000_000, tail_order: TailOrder::Second }
    }
}

/// The argument of A: an exact rational or a float treated as irrational.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lambda {
    Rational(Rational),
    Real(f64),
}

impl From<Rational> for Lambda {
    fn from(r: Rational) -> Self {
        Lambda::Rational(r)
    }
}

impl From<f64> for Lambda {
    fn from(x: f64) -> Self {
        Lambda::Real(x)
    }
}

/// One breakpoint-free piece of a period, in units of 1/P: it starts at
/// N = n1 and has length s.
#[derive(Debug, Clone, Copy)]
struct Piece {
    n1: i64,
    s: i64,
}

/// Merge {kP} ∪ {jQ} over [0, PQ] exactly.
fn period_pieces(p: i64, q: i64) -> Vec<Piece> {
    let end = p * q;
    let mut pts = Vec::with_capacity((p + q) as usize);
    let (mut a, mut b) = (0i64, 0i64);
    while a <= end || b <= end {
        let next = a.min(b);
        if pts.last() != Some(&next) {
            pts.push(next);
        }
        if a == next {
            a += p;
        }
        if b == next {
            b += q;
        }
    }
    pts.windows(2).map(|w| Piece { n1: w[0], s: w[1] - w[0] }).collect()
}

/// Exact per-period moments of G(t) = {t}{λt}, λ = P/Q, as rationals over
/// a common denominator: (∫₀^Q G, ∫₀^Q t G).
fn period_moments(p: i64, q: i64, pieces: &[Piece]) -> Result<(f64, f64)> {
    let mut s1: i128 = 0;
    let mut s2: i128 = 0;
    let ov = || Error::Overflow;
    for pc in pieces {
        let (n1, s) = (pc.n1 as i128, pc.s as i128);
        let r1 = n1 % p as i128;
        let r2 = n1 % q as i128;
        // 6 ∫₀^s (r1+w)(r2+w) dw
        let a = 6 * r1 * r2 * s + 3 * (r1 + r2) * s * s + 2 * s * s * s;
        s1 = s1.checked_add(a).ok_or_else(ov)?;
        // 12 ∫₀^s (n1+w)(r1+w)(r2+w) dw
        let e1 = n1 + r1 + r2;
        let e2 = n1.checked_mul(r1 + r2).ok_or_else(ov)? + r1 * r2;
        let e3 = n1.checked_mul(r1 * r2).ok_or_else(ov)?;
        let s2_terms = [
            3i128.checked_mul(s.checked_pow(4).ok_or_else(ov)?),
            (4 * e1).checked_mul(s * s * s),
            (6 * e2).checked_mul(s * s),
            (12 * e3).checked_mul(s),
        ];
        for t in s2_terms {
            s2 = s2.checked_add(t.ok_or_else(ov)?).ok_or_else(ov)?;
        }
    }
    let (pf, qf) = (p as f64, q as f64);
    // ∫₀^Q G = S1/(6QP²), ∫₀^Q tG = λ S2/(12 P⁴)
    let int_g = s1 as f64 / (6.0 * qf * pf * pf);
    let int_tg = (pf / qf) * s2 as f64 / (12.0 * pf.powi(4));
    Ok((int_g, int_tg))
}

fn quadrature_rational(lambda: Rational, cfg: &QuadratureConfig) -> Result<CertifiedReal> {
    let (p, q) = (lambda.num(), lambda.den());
    let pieces = period_pieces(p, q);
    let (int_g, int_tg) = period_moments(p, q, &pieces)?;
    let qf = q as f64;
    let mu = int_g / qf;
    let f_bar = mu * qf / 2.0 - int_tg / qf;
    // Tail errors for T = MQ: Q/(2T²) at first order, Q²/T³ at second.
    let half = cfg.tol / 2.0;
    let (m_needed, radius_at) = match cfg.tail_order {
        TailOrder::First => ((1.0 / (half * 2.0 * qf)).sqrt().ceil(), Box::new(move |m: f64| 1.0 / (2.0 * m * m * qf)) as Box<dyn Fn(f64) -> f64>),
        TailOrder::Second => ((1.0 / (half * qf)).cbrt().ceil(), Box::new(move |m: f64| 1.0 / (m * m * m * qf)) as Box<dyn Fn(f64) -> f64>),
    };
    let m = m_needed.max(1.0);
    if m > cfg.max_periods as f64 {
        return Err(Error::Unreachable { achieved: radius_at(cfg.max_periods as f64), tol: cfg.tol });
    }
    let lam = lambda.to_f64();
    let pf = p as f64;
    let shapes: Vec<(f64, f64, [f64; 2])> = pieces
        .iter()
        .map(|pc| (pc.n1 as f64 / pf, pc.s as f64 / pf, [(pc.n1 % p) as f64 / pf, (pc.n1 % q) as f64 / pf]))
        .collect();
    let mut acc = Neumaier::new();
    let mut abs_sum = 0.0;
    for j in 0..m as i64 {
        let base = (j * q) as f64;
        for &(start, h, offsets) in &shapes {
            let v = piece_integral(base + start, h, lam, &offsets);
            abs_sum += v.abs();
            acc.push(v);
        }
    }
    let t = m * qf;
    let tail = match cfg.tail_order {
        TailOrder::First => mu / t,
        TailOrder::Second => mu / t + f_bar / (t * t),
    };
    let rounding = 64.0 * f64::EPSILON * (abs_sum + tail.abs());
    Ok(CertifiedReal::new(acc.value() + tail, radius_at(m) + rounding))
}

fn quadrature_real(lambda: f64, cfg: &QuadratureConfig) -> Result<CertifiedReal> {
    // The tail ∫_T^∞ G/t² lies in [0, 1/T]; second order centres it on
    // the equidistributed mean 1/4: 1/(4T) ± 3/(4T), still inside [0, 1/T].
    let (centre, radius) = match cfg.tail_order {
        TailOrder::First => (0.5, 0.5),
        TailOrder::Second => (0.25, 0.75),
    };
    let t_needed = (radius / (cfg.tol / 2.0)).ceil();
    if t_needed > cfg.max_periods as f64 {
        return Err(Error::Unreachable { achieved: radius / cfg.max_periods as f64, tol: cfg.tol });
    }
    let t_end = t_needed;
    let inv = 1.0 / lambda;
    let mut acc = Neumaier::new();
    let mut abs_sum = 0.0;
    let (mut k, mut j) = (1.0f64, 1.0f64);
    let mut a = 0.0f64;
    while a < t_end {
        let b = k.min(j * inv).min(t_end);
        if b > a {
            let mid = 0.5 * (a + b);
            let m = mid.floor();
            let n = (lambda * mid).floor();
            let v = piece_integral(a, b - a, lambda, &[a - m, a - n * inv]);
            abs_sum += v.abs();
            acc.push(v);
        }
        if b >= k {
            k += 1.0;
        }
        if b >= j * inv {
            j += 1.0;
        }
        a = b;
    }
    // breakpoints j/λ carry a relative error of a few ulps each
    let rounding = 64.0 * f64::EPSILON * (abs_sum + t_end.ln());
    Ok(CertifiedReal::new(acc.value() + centre / t_end, radius / t_end + rounding))
}

/// A(λ) by exact-breakpoint quadrature, certified to `cfg.tol`.
pub fn a_quadrature(lambda: impl Into<Lambda>, cfg: &QuadratureConfig) -> Result<CertifiedReal> {
    match lambda.into() {
        Lambda::Rational(r) => {
            if r.signum() <= 0 {
                return Err(Error::Domain { what: "a_quadrature needs lambda > 0", value: r.to_f64() });
            }
            quadrature_rational(r, cfg)
        }
        Lambda::Real(x) => {
            if !(x > 0.0) || !x.is_finite() {
                return Err(Error::Domain { what: "a_quadrature needs lambda > 0", value: x });
            }
            quadrature_real(x, cfg)
        }
    }
}

fn check_pair(p: i64, q: i64) -> Result<()> {
    if p < 1 || q < 1 {
        return Err(Error::Domain { what: "A(p/q) needs p, q >= 1", value: p.min(q) as f64 });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(())
}

/// (1−λ)/2 log λ + (λ+1)/2 (log 2π − γ), the part of A(p/q) free of V.
fn smooth_part<T: Real>(p: i64, q: i64) -> T {
    let lam = T::ratio(p, q);
    let two = T::from_i(2);
    (T::one() - lam) / two * lam.ln() + (lam + T::one()) / two * (T::ln_2pi() - T::euler_gamma())
}

/// A(p/q) = (1−λ)/2 log λ + (λ+1)/2 (log 2π − γ) − (π/2q)(V(p,q) + V(q,p)).
pub fn a_rational<T: Real>(p: i64, q: i64) -> Result<T> {
    check_pair(p, q)?;
    let v = vasyunin_cot::<T>(p, q)? + vasyunin_cot::<T>(q, p)?;
    Ok(smooth_part::<T>(p, q) - T::PI() * v / (T::from_i(2) * T::from_i(q)))
}

/// a_rational with V(p, q) read from a cotangent table whose modulus q
/// divides, V(q, p) summed directly. Meant for large q = q₀·2ʲ.
pub fn a_rational_with_table<T: Real>(p: i64, q: i64, table: &CotTable<T>) -> Result<T> {
    check_pair(p, q)?;
    let v_pq = if table.modulus() % q == 0 { table.vasyunin(p, q)? } else { vasyunin_cot::<T>(p, q)? };
    let v_qp = vasyunin_cot::<T>(q, p)?;
    Ok(smooth_part::<T>(p, q) - T::PI() * (v_pq + v_qp) / (T::from_i(2) * T::from_i(q)))
}

/// A(p/q) through φ₁(p/q) + (p/q) φ₁(q/p).
pub fn a_via_phi1<T: Real>(p: i64, q: i64) -> Result<T> {
    check_pair(p, q)?;
    let lam = T::ratio(p, q);
    Ok(smooth_part::<T>(p, q) - phi1_rational::<T>(p, q)? - lam * phi1_rational::<T>(q, p)?)
}

/// A(p/q + σ2⁻ʲ) with the shifted fraction's denominator dividing
/// `table.modulus()`, e.g. a table of modulus q·2ʲ.
pub fn a_dyadic_offset<T: Real>(p: i64, q: i64, j: u32, sigma: i64, table: &CotTable<T>) -> Result<T> {
    let num = p.checked_shl(j).filter(|n| n >> j == p).ok_or(Error::Overflow)? + sigma.signum() * q;
    let den = q << j;
    let g = num.gcd(&den);
    a_rational_with_table(num / g, den / g, table)
}

/// One row of the local-expansion check: A(p/q + t) − predict(t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalResidual {
    pub t: f64,
    pub j: u32,
    pub residual: f64,
}

/// |A(p/q ± 2⁻ʲ) − predict(±2⁻ʲ)| for j in `js`, both signs, in double-double.
pub fn local_expansion_residuals(p: i64, q: i64, js: std::ops::RangeInclusive<u32>) -> Result<Vec<LocalResidual>> {
    use crate::dd::DoubleDouble as DD;
    let j_max = *js.end();
    let table = CotTable::<DD>::new(q << j_max);
    let model = LocalModel::<DD>::new(p, q)?;
    let mut out = Vec::new();
    for sigma in [1i64, -1] {
        for j in js.clone() {
            let t = DD::from_i(sigma) / DD::from_i(1i64 << j);
            let a = a_dyadic_offset(p, q, j, sigma, &table)?;
            let residual = (a - model.predict(t)?).abs().to_f64_lossy();
            out.push(LocalResidual { t: t.to_f64_lossy(), j, residual });
        }
    }
    Ok(out)
}

/// A at a Farey point, with A(0) = 0.
fn a_farey(x: Rational) -> Result<f64> {
    if x == Rational::ZERO {
        return Ok(0.0);
    }
    a_rational::<f64>(x.num(), x.den())
}

/// ∫_λ^∞ φ₂(t) t⁻³ dt.
fn phi2_moment(lambda: Rational) -> Result<CertifiedReal> {
    phi2_weighted_tail(Rational::ZERO, lambda, &[(3, 1.0)])
}

/// A(λ) − [½ log λ + (1 − γ + log 2π)/2 + φ₂(λ)/(2λ) − λ ∫_λ^∞ φ₂(t) t⁻³ dt],
/// A taken from `a_quadrature`.
pub fn a_phi2_relation_residual(lambda: Rational, cfg: &QuadratureConfig) -> Result<CertifiedReal> {
    if lambda.signum() <= 0 {
        return Err(Error::Domain { what: "a_phi2_relation_residual needs lambda > 0", value: lambda.to_f64() });
    }
    let lam = lambda.to_f64();
    let a = a_quadrature(lambda, cfg)?;
    let moment = phi2_moment(lambda)?;
    let phi2 = phi_resummed(2, lambda)?;
    let rhs = 0.5 * lam.ln() + (1.0 - EULER_GAMMA + LN_2PI) / 2.0 + phi2.value / (2.0 * lam) - lam * moment.value;
    let err = a.err + moment.err * lam + phi2.err / (2.0 * lam) + 4.0 * f64::EPSILON * rhs.abs();
    Ok(CertifiedReal::new(a.value - rhs, err))
}

/// φ₁(λ) + λφ₁(1/λ) − λ∫_λ^∞ φ₁(t)t⁻² dt − [−½λ log λ + (log 2π − γ)λ/2 − ½],
/// the φ₁ integral taken as −φ₂(λ)/(2λ²) + ∫_λ^∞ φ₂ t⁻³.
pub fn phi1_integral_identity_residual(lambda: Rational) -> Result<f64> {
    let (p, q) = (lambda.num(), lambda.den());
    check_pair(p, q)?;
    let lam = lambda.to_f64();
    let integral = -phi_resummed(2, lambda)?.value / (2.0 * lam * lam) + phi2_moment(lambda)?.value;
    let lhs = phi1_rational::<f64>(p, q)? + lam * phi1_rational::<f64>(q, p)? - lam * integral;
    let rhs = -0.5 * lam * lam.ln() + LN_2PI_MINUS_GAMMA * lam / 2.0 - 0.5;
    Ok(lhs - rhs)
}

/// A(p/q + t) ≈ A(p/q) + |t| log|t|/(2p) + D^± t − q(p+q±1)/(4p²) t² for
/// 0 < |t| ≤ 1/(2q).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalModel<T> {
    pub base: Rational,
    pub a_at_base: T,
    pub coeffs: ExpansionCoefficients<T>,
}

impl<T: Real> LocalModel<T> {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        check_pair(p, q)?;
        Ok(LocalModel { base: Rational::new(p, q)?, a_at_base: a_rational(p, q)?, coeffs: expansion_coeffs(p, q)? })
    }

    /// Half-width 1/(2q) of the validity window.
    pub fn window(&self) -> T {
        T::ratio(1, 2 * self.coeffs.q)
    }

    pub fn predict(&self, t: T) -> Result<T> {
        if t.abs() > self.window() {
            return Err(Error::Domain { what: "local model window |t| <= 1/(2q)", value: t.to_f64_lossy() });
        }
        if t == T::zero() {
            return Ok(self.a_at_base);
        }
        let c = &self.coeffs;
        let (d, quad) = if t > T::zero() { (c.d_plus, c.quad_plus) } else { (c.d_minus, c.quad_minus) };
        let at = t.abs();
        Ok(self.a_at_base + at * at.ln() / T::from_i(2 * c.p) + d * t - quad * t * t)
    }
}

pub fn local_model<T: Real>(p: i64, q: i64) -> Result<LocalModel<T>> {
    LocalModel::new(p, q)
}

/// Both sides of
/// Δ_{p,q}(t) = t log t/q + (t/q)(πV(p,q) + 2 log q + log 2π − γ − 1) − t²/2
///            + (qt)³ Δ_{p̄,q}(1/q²t) − 2q³ ∫₀^t u(3u − t) Δ_{p̄,q}(1/q²u) du.
///
/// With v = 1/(q²u) the integral is ∫_V^∞ (3q⁻⁶v⁻⁴ − tq⁻⁴v⁻³) Δ_{p̄,q}(v) dv,
/// V = 1/(q²t), which `phi2_weighted_tail` evaluates from exact rational
/// values of φ₃, …, φ₇.
pub fn delta_functional_equation_sides(p: i64, q: i64, t: Rational, cfg: &PhiEvalConfig) -> Result<(CertifiedReal, CertifiedReal)> {
    if q < 1 || p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    if t.signum() <= 0 {
        return Err(Error::Domain { what: "delta functional equation needs t > 0", value: t.to_f64() });
    }
    let lhs = delta(p, q, t, cfg)?;
    let p_bar = modular_inverse(p, q)?;
    let (qf, tf) = (q as f64, t.to_f64());
    let q2 = Rational::integer(q * q);
    let v_start = q2.checked_mul(t)?.recip()?;
    let x0 = Rational::new(p_bar, q)?;
    let phi_x0 = phi_resummed(2, x0)?;
    let q4 = qf.powi(-4);
    let q6 = qf.powi(-6);
    let weighted = phi2_weighted_tail(x0, v_start, &[(4, 3.0 * q6), (3, -tf * q4)])?;
    let vf = v_start.to_f64();
    let weight_mass = q6 * vf.powi(-3) - tf * q4 * vf.powi(-2) / 2.0;
    let integral = weighted.value - phi_x0.value * weight_mass;
    let integral_err = weighted.err + phi_x0.err * weight_mass.abs();
    let v_pq = if q == 1 { 0.0 } else { vasyunin_cot::<f64>(p, q)? };
    let inner = delta(p_bar, q, v_start, cfg)?;
    let cube = (qf * tf).powi(3);
    let linear = tf * tf.ln() / qf + tf / qf * (std::f64::consts::PI * v_pq + 2.0 * qf.ln() + LN_2PI_MINUS_GAMMA - 1.0);
    let rhs = linear - tf * tf / 2.0 + cube * inner.value - 2.0 * qf.powi(3) * integral;
    let rhs_err = cube * inner.err + 2.0 * qf.powi(3) * integral_err + 1e-15 * rhs.abs();
    Ok((lhs, CertifiedReal::new(rhs, rhs_err)))
}

/// |LHS − RHS| of the Δ functional equation.
pub fn delta_functional_equation_residual(p: i64, q: i64, t: Rational, cfg: &PhiEvalConfig) -> Result<f64> {
    let (lhs, rhs) = delta_functional_equation_sides(p, q, t, cfg)?;
    Ok((lhs.value - rhs.value).abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FareyScanRecord {
    pub p: i64,
    pub q: i64,
    pub lambda: f64,
    #[serde(rename = "A")]
    pub a: f64,
}

/// (p, q, p/q, A(p/q)) for every Farey fraction of the given order in
/// [lo, hi], in increasing order. Records are computed in parallel and
/// stitched back by index.
pub fn farey_scan(order: u32, lo: Rational, hi: Rational) -> Result<Vec<FareyScanRecord>> {
    if order == 0 {
        return Err(Error::Domain { what: "Farey order", value: 0.0 });
    }
    farey_sequence(order, lo, hi)
        .into_par_iter()
        .map(|x| Ok(FareyScanRecord { p: x.num(), q: x.den(), lambda: x.to_f64(), a: a_farey(x)? }))
        .collect()
}

pub fn write_farey_csv<W: Write>(out: W, records: &[FareyScanRecord]) -> std::io::Result<W> {
    let mut csv = CsvWriter::new(out, &["p", "q", "lambda", "A"])?;
    for r in records {
        csv.row(&[r.p.to_string(), r.q.to_string(), fmt_f64(r.lambda), fmt_f64(r.a)])?;
    }
    csv.finish()
}

/// The sweep as a single SVG polyline on a 1000×600 canvas with linear axes.
pub fn write_farey_svg<W: Write>(mut out: W, records: &[FareyScanRecord]) -> std::io::Result<W> {
    let (w, h, margin) = (1000.0, 600.0, 40.0);
    let x_min = records.iter().map(|r| r.lambda).fold(f64::INFINITY, f64::min);
    let x_max = records.iter().map(|r| r.lambda).fold(f64::NEG_INFINITY, f64::max);
    let y_max = records.iter().map(|r| r.a).fold(0.0, f64::max);
    let sx = if x_max > x_min { (w - 2.0 * margin) / (x_max - x_min) } else { 0.0 };
    let sy = if y_max > 0.0 { (h - 2.0 * margin) / y_max } else { 0.0 };
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 600">"#)?;
    writeln!(out, r#"<rect width="1000" height="600" fill="white"/>"#)?;
    writeln!(
        out,
        r#"<path d="M {m} {b} H {r} M {m} {b} V {m}" stroke="black" fill="none"/>"#,
        m = margin,
        b = h - margin,
        r = w - margin
    )?;
    write!(out, r#"<polyline fill="none" stroke="steelblue" stroke-width="0.6" points=""#)?;
    for (i, r) in records.iter().enumerate() {
        let x = margin + (r.lambda - x_min) * sx;
        let y = h - margin - r.a * sy;
        if i > 0 {
            write!(out, " ")?;
        }
        write!(out, "{x:.3},{y:.3}")?;
    }
    writeln!(out, r#""/>"#)?;
    writeln!(out, "</svg>")?;
    out.flush()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn pieces_tile_the_period() {
        for (p, q) in [(1, 1), (2, 3), (5, 2), (7, 12)] {
            let pieces = period_pieces(p, q);
            assert_eq!(pieces.len() as i64, p + q - 1);
            assert_eq!(pieces.iter().map(|pc| pc.s).sum::<i64>(), p * q);
        }
    }

    #[test]
    fn mean_of_the_product() {
        // μ = 1/4 + 1/(12PQ)
        for (p, q) in [(1, 1), (1, 2), (3, 5), (13, 8), (1, 40)] {
            let pieces = period_pieces(p, q);
            let (int_g, _) = period_moments(p, q, &pieces).unwrap();
            let mu = int_g / q as f64;
            assert!((mu - (0.25 + 1.0 / (12.0 * (p * q) as f64))).abs() < 1e-15, "{p}/{q}");
        }
    }

    #[test]
    fn first_moment_of_unit_period() {
        // ∫₀¹ t·t² dt = 1/4
        let pieces = period_pieces(1, 1);
        let (_, int_tg) = period_moments(1, 1, &pieces).unwrap();
        assert!((int_tg - 0.25).abs() < 1e-16);
    }

    #[test]
    fn quadrature_at_one() {
        let v = a_quadrature(r(1, 1), &QuadratureConfig::default()).unwrap();
        assert!((v.value - LN_2PI_MINUS_GAMMA).abs() < 1e-10 && v.err <= 1e-10);
    }
}
