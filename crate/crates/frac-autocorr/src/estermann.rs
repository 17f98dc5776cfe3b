//! The Estermann zeta function E(s; h/k) = Σ τ(n) e(nh/k) n⁻ˢ and its
//! sine, cosine and Γ-weighted companions.
//!
//! Every value is built from the regularized Hurwitz zeta
//! ζ̃(s, a) = ζ(s, a) − 1/(s − 1). Writing the double sum over j, l in
//! terms of ζ̃ isolates the pole of E at s = 1 as the explicit terms
//! `2k ζ̃(s,1)/(s−1) + k/(s−1)²`, which cancel in the sine part, so Esin
//! is evaluated directly at s = 1. The functional equations are only
//! ever used as checks.

use std::io::Write;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::output::{fmt_f64, CsvWriter};
use crate::rational::modular_inverse;
use crate::scalar::{EULER_GAMMA, LN_2PI, PI};
use crate::specfun::{gamma, hurwitz_zeta_regularized};
use crate::vasyunin::vasyunin_cot;
use crate::ComplexValue;

pub const MAX_MODULUS: i64 = 512;

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// (s, h, k) with gcd(h, k) = 1; `h` is kept reduced mod k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstermannPoint {
    s: ComplexValue,
    h: i64,
    k: i64,
}

impl EstermannPoint {
    pub fn new(s: ComplexValue, h: i64, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain { what: "Estermann modulus k", value: k as f64 });
        }
        if k > MAX_MODULUS {
            return Err(Error::TooLarge { what: "Estermann modulus k", got: k as u64, max: MAX_MODULUS as u64 });
        }
        if h.gcd(&k) != 1 {
            return Err(Error::NotCoprime { p: h, q: k });
        }
        Ok(EstermannPoint { s, h: h.rem_euclid(k), k })
    }

    pub fn real(s: f64, h: i64, k: i64) -> Result<Self> {
        EstermannPoint::new(Complex64::new(s, 0.0), h, k)
    }

    pub fn s(&self) -> ComplexValue {
        self.s
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// h̄ with h h̄ ≡ 1 (mod k), reduced to [0, k).
    pub fn h_bar(&self) -> i64 {
        modular_inverse(self.h, self.k).expect("coprime by construction").rem_euclid(self.k)
    }

    pub fn with_s(&self, s: ComplexValue) -> Self {
        EstermannPoint { s, ..*self }
    }

    pub fn with_h(&self, h: i64) -> Self {
        EstermannPoint { h: h.rem_euclid(self.k), ..*self }
    }

    /// The point (1 − s, h̄/k) on the other side of the functional equation.
    pub fn reflected(&self) -> Self {
        EstermannPoint { s: ONE - self.s, h: self.h_bar(), k: self.k }
    }
}

/// Principal part and leading regular terms of a Laurent expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentData {
    pub location: ComplexValue,
    pub coefficients: Vec<(i32, ComplexValue)>,
}

impl LaurentData {
    pub fn coefficient(&self, order: i32) -> Option<ComplexValue> {
        self.coefficients.iter().find(|(o, _)| *o == order).map(|&(_, c)| c)
    }

    pub fn residue(&self) -> ComplexValue {
        self.coefficient(-1).unwrap_or_default()
    }

    /// Σ c_n (s − s₀)ⁿ over the stored orders.
    pub fn eval(&self, s: ComplexValue) -> ComplexValue {
        let z = s - self.location;
        self.coefficients.iter().map(|&(n, c)| c * z.powi(n)).sum()
    }
}

/// ζ̃(s, j/k) for j = 1..=k at a fixed s, shared by every h mod k.
#[derive(Debug, Clone)]
pub struct HurwitzRow {
    s: ComplexValue,
    k: i64,
    zeta: Vec<ComplexValue>,
    k_pow: ComplexValue,
}

/// Trigonometric double sums Σ_{j,l} c(jlh/k) ζ̃_j ζ̃_l.
#[derive(Debug, Clone, Copy)]
struct DoubleSums {
    cos: ComplexValue,
    sin: ComplexValue,
}

impl HurwitzRow {
    pub fn new(s: ComplexValue, k: i64) -> Result<Self> {
        if !(1..=MAX_MODULUS).contains(&k) {
            return Err(Error::TooLarge { what: "Estermann modulus k", got: k.max(0) as u64, max: MAX_MODULUS as u64 });
        }
        let zeta = (1..=k)
            .map(|j| hurwitz_zeta_regularized(s, j as f64 / k as f64))
            .collect::<Result<Vec<_>>>()?;
        let k_pow = (-2.0 * s * (k as f64).ln()).exp();
        Ok(HurwitzRow { s, k, zeta, k_pow })
    }

    fn sums(&self, h: i64) -> DoubleSums {
        let k = self.k as usize;
        let h = h.rem_euclid(self.k) as usize;
        let table: Vec<(f64, f64)> = (0..k).map(|m| (2.0 * PI * m as f64 / k as f64).sin_cos()).collect();
        let mut cos = Complex64::default();
        let mut sin = Complex64::default();
        for j in 1..=k {
            let mut inner_cos = Complex64::default();
            let mut inner_sin = Complex64::default();
            let step = (j * h) % k;
            let mut m = step;
            for l in 1..=k {
                let (sn, cs) = table[m];
                inner_cos += self.zeta[l - 1] * cs;
                inner_sin += self.zeta[l - 1] * sn;
                m = (m + step) % k;
            }
            cos += self.zeta[j - 1] * inner_cos;
            sin += self.zeta[j - 1] * inner_sin;
        }
        DoubleSums { cos, sin }
    }

    fn pole_terms(&self) -> Result<ComplexValue> {
        let w = self.s - 1.0;
        if w == Complex64::default() {
            return Err(Error::PoleWithLaurent(Box::new(e_pole_part(self.k))));
        }
        let k = self.k as f64;
        Ok(2.0 * k * self.zeta[self.k as usize - 1] / w + k / (w * w))
    }

    pub fn estermann(&self, h: i64) -> Result<ComplexValue> {
        let d = self.sums(h);
        Ok(self.k_pow * (d.cos + self.pole_terms()? + Complex64::i() * d.sin))
    }

    pub fn ecos(&self, h: i64) -> Result<ComplexValue> {
        Ok(self.k_pow * (self.sums(h).cos + self.pole_terms()?))
    }

    pub fn esin(&self, h: i64) -> ComplexValue {
        self.k_pow * self.sums(h).sin
    }
}

pub fn estermann(pt: EstermannPoint) -> Result<ComplexValue> {
    HurwitzRow::new(pt.s, pt.k)?.estermann(pt.h)
}

pub fn ecos(pt: EstermannPoint) -> Result<ComplexValue> {
    HurwitzRow::new(pt.s, pt.k)?.ecos(pt.h)
}

/// Entire in s; s = 1 needs no special handling.
pub fn esin(pt: EstermannPoint) -> Result<ComplexValue> {
    Ok(HurwitzRow::new(pt.s, pt.k)?.esin(pt.h))
}

fn cos_sin_half_pi(s: ComplexValue) -> (ComplexValue, ComplexValue) {
    let z = s * (PI / 2.0);
    (z.cos(), z.sin())
}

/// G₀ = cos(πs/2) Ecos − sin(πs/2) Esin.
pub fn g0(pt: EstermannPoint) -> Result<ComplexValue> {
    let row = HurwitzRow::new(pt.s, pt.k)?;
    let ec = match row.ecos(pt.h) {
        Ok(v) => v,
        Err(Error::PoleWithLaurent(_)) => return Err(Error::PoleWithLaurent(Box::new(g0_pole_part(pt.h, pt.k)?))),
        Err(e) => return Err(e),
    };
    let (c, s) = cos_sin_half_pi(pt.s);
    Ok(c * ec - s * row.esin(pt.h))
}

fn nonpositive_integer(s: ComplexValue) -> Option<i64> {
    (s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()).then(|| s.re as i64)
}

/// G₁(s) = (2π)⁻ˢ Γ(s) G₀(s + 2).
pub fn g1(pt: EstermannPoint) -> Result<ComplexValue> {
    if let Some(n) = nonpositive_integer(pt.s) {
        return Err(Error::PoleWithLaurent(Box::new(g1_pole_part(pt.h, pt.k, -n)?)));
    }
    let weight = (-pt.s * LN_2PI).exp() * gamma(pt.s)?;
    Ok(weight * g0(pt.with_s(pt.s + 2.0))?)
}

fn vasyunin_f64(h: i64, k: i64) -> Result<f64> {
    if k == 1 {
        return Ok(0.0);
    }
    vasyunin_cot::<f64>(h, k)
}

fn laurent(location: f64, coefficients: Vec<(i32, f64)>) -> LaurentData {
    LaurentData {
        location: Complex64::new(location, 0.0),
        coefficients: coefficients.into_iter().map(|(n, c)| (n, Complex64::new(c, 0.0))).collect(),
    }
}

/// Polar part of E (and Ecos) at s = 1: k⁻¹(s−1)⁻² + k⁻¹(2γ − 2 log k)(s−1)⁻¹.
pub fn e_pole_part(k: i64) -> LaurentData {
    let k = k as f64;
    laurent(1.0, vec![(-2, 1.0 / k), (-1, (2.0 * EULER_GAMMA - 2.0 * k.ln()) / k)])
}

/// −(π/2k)[(s−1)⁻¹ + 2γ − 2 log k − π V(h, k)].
pub fn g0_pole_part(h: i64, k: i64) -> Result<LaurentData> {
    let v = vasyunin_f64(h, k)?;
    let kf = k as f64;
    let c = -PI / (2.0 * kf);
    Ok(laurent(1.0, vec![(-1, c), (0, c * (2.0 * EULER_GAMMA - 2.0 * kf.ln() - PI * v))]))
}

/// Principal part of G₁ at s = −n. The pole at −1 is double; every other
/// pole is simple with residue (−2π)ⁿ G₀(2 − n)/n!.
pub fn g1_pole_part(h: i64, k: i64, n: i64) -> Result<LaurentData> {
    let kf = k as f64;
    if n == 1 {
        let v = vasyunin_f64(h, k)?;
        let a = PI * PI / kf;
        let b = a * (1.0 + EULER_GAMMA - 2.0 * kf.ln() - LN_2PI - PI * v);
        return Ok(laurent(-1.0, vec![(-2, a), (-1, b)]));
    }
    let g = if n == 2 {
        Complex64::new(0.25, 0.0)
    } else {
        g0(EstermannPoint::real((2 - n) as f64, h, k)?)?
    };
    let fact: f64 = (1..=n).map(|j| j as f64).product();
    let res = g * (-2.0 * PI).powi(n as i32) / fact;
    Ok(LaurentData { location: Complex64::new(-n as f64, 0.0), coefficients: vec![(-1, res)] })
}

/// Laurent coefficients of `f` about `center` by trapezoidal averaging on
/// the circle |s − center| = radius; exact up to aliasing of order
/// radius^points.
pub fn laurent_extract<F>(mut f: F, center: ComplexValue, radius: f64, orders: &[i32]) -> Result<LaurentData>
where
    F: FnMut(ComplexValue) -> Result<ComplexValue>,
{
    const POINTS: usize = 64;
    let samples = (0..POINTS)
        .map(|m| {
            let u = Complex64::from_polar(1.0, 2.0 * PI * (m as f64 + 0.5) / POINTS as f64);
            f(center + u * radius).map(|v| (u, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let coefficients = orders
        .iter()
        .map(|&n| {
            let sum: Complex64 = samples.iter().map(|&(u, v)| v * u.powi(-n)).sum();
            (n, sum / POINTS as f64 * radius.powi(-n))
        })
        .collect();
    Ok(LaurentData { location: center, coefficients })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionalEquation {
    E,
    Esin,
    Ecos,
    G0,
    G1,
}

impl FunctionalEquation {
    pub const ALL: [FunctionalEquation; 5] = [Self::E, Self::Esin, Self::Ecos, Self::G0, Self::G1];

    pub fn name(self) -> &'static str {
        match self {
            Self::E => "E",
            Self::Esin => "Esin",
            Self::Ecos => "Ecos",
            Self::G0 => "G0",
            Self::G1 => "G1",
        }
    }
}

impl std::str::FromStr for FunctionalEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or(Error::Domain { what: "functional equation name", value: f64::NAN })
    }
}

/// χ(s) = 2 (2π)^{2s−2} Γ²(1−s) k^{1−2s}.
fn chi(s: ComplexValue, k: i64) -> Result<ComplexValue> {
    let g = gamma(ONE - s)?;
    let log = (2.0 * s - 2.0) * LN_2PI + (1.0 - 2.0 * s) * (k as f64).ln();
    Ok(2.0 * g * g * log.exp())
}

fn collision(s: ComplexValue) -> Error {
    Error::Pole { re: s.re, im: s.im }
}

fn integer_value(s: ComplexValue) -> Option<i64> {
    (s.im == 0.0 && s.re == s.re.round()).then(|| s.re as i64)
}

/// Both sides of the selected functional equation at `pt`.
pub fn functional_equation_sides(which: FunctionalEquation, pt: EstermannPoint) -> Result<(ComplexValue, ComplexValue)> {
    let s = pt.s;
    let dual = pt.reflected();
    let int = integer_value(s);
    match which {
        FunctionalEquation::E | FunctionalEquation::Ecos | FunctionalEquation::G0 if int.is_some_and(|n| n >= 0) => {
            return Err(collision(s))
        }
        FunctionalEquation::Esin if int.is_some_and(|n| n >= 1) => return Err(collision(s)),
        // every integer s meets a pole of G₁(s), G₁(−s−3) or 1/(s(s+1))
        FunctionalEquation::G1 if int.is_some() => return Err(collision(s)),
        _ => {}
    }
    let cos_pi = (s * PI).cos();
    Ok(match which {
        FunctionalEquation::E => {
            let row = HurwitzRow::new(dual.s, pt.k)?;
            let rhs = chi(s, pt.k)? * (row.estermann(dual.h)? - cos_pi * row.estermann(-dual.h)?);
            (estermann(pt)?, rhs)
        }
        FunctionalEquation::Esin => (esin(pt)?, chi(s, pt.k)? * (1.0 + cos_pi) * esin(dual)?),
        FunctionalEquation::Ecos => (ecos(pt)?, chi(s, pt.k)? * (1.0 - cos_pi) * ecos(dual)?),
        FunctionalEquation::G0 => (g0(pt)?, chi(s, pt.k)? * (s * PI).sin() * g0(dual)?),
        FunctionalEquation::G1 => {
            let k = pt.k as f64;
            let factor = (-(2.0 * s + 3.0) * k.ln()).exp() * (s + 2.0) * (s + 3.0) / (s * (s + 1.0));
            (g1(pt)?, factor * g1(dual.with_s(-s - 3.0))?)
        }
    })
}

/// |LHS − RHS| / (1 + |LHS|).
pub fn functional_equation_residual(which: FunctionalEquation, pt: EstermannPoint) -> Result<f64> {
    let (lhs, rhs) = functional_equation_sides(which, pt)?;
    Ok((lhs - rhs).norm() / (1.0 + lhs.norm()))
}

/// sin(πs/2) Γ(s) (2π/k)⁻ˢ Esin(s; h/k), invariant under (s, h) ↦ (1 − s, h̄).
pub fn esin_tilde(pt: EstermannPoint) -> Result<ComplexValue> {
    Ok(cos_sin_half_pi(pt.s).1 * tilde_weight(pt)? * esin(pt)?)
}

/// cos(πs/2) Γ(s) (2π/k)⁻ˢ Ecos(s; h/k), with the same symmetry.
pub fn ecos_tilde(pt: EstermannPoint) -> Result<ComplexValue> {
    Ok(cos_sin_half_pi(pt.s).0 * tilde_weight(pt)? * ecos(pt)?)
}

fn tilde_weight(pt: EstermannPoint) -> Result<ComplexValue> {
    let log = -pt.s * (LN_2PI - (pt.k as f64).ln());
    Ok(gamma(pt.s)? * log.exp())
}

/// Res(G₁ t⁻ˢ, −2) + Res(G₁ t⁻ˢ, −1)
/// = (π²/2)t² − (π²/k) t (log t + π V(h,k) + 2 log k + log 2π − γ − 1).
pub fn g1_residue_polynomial(h: i64, k: i64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain { what: "g1_residue_polynomial needs t > 0", value: t });
    }
    if k < 1 || h.gcd(&k) != 1 {
        return Err(Error::NotCoprime { p: h, q: k });
    }
    let v = vasyunin_f64(h, k)?;
    let kf = k as f64;
    let pi2 = PI * PI;
    Ok(pi2 / 2.0 * t * t - pi2 / kf * t * (t.ln() + PI * v + 2.0 * kf.ln() + LN_2PI - EULER_GAMMA - 1.0))
}

/// max |E(σ + iτ; h/k)| over τ on an evenly spaced grid of [0, t_max].
pub fn vertical_growth_scan(sigma: f64, h: i64, k: i64, t_max: f64, steps: usize) -> Result<f64> {
    let mut best = 0.0f64;
    for j in 0..=steps {
        let tau = t_max * j as f64 / steps.max(1) as f64;
        let pt = EstermannPoint::new(Complex64::new(sigma, tau), h, k)?;
        match estermann(pt) {
            Ok(v) => best = best.max(v.norm()),
            Err(Error::PoleWithLaurent(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualRow {
    pub which: FunctionalEquation,
    pub s: ComplexValue,
    pub h: i64,
    pub k: i64,
    pub residual: f64,
}

/// Residuals of every listed equation at every s and coprime h mod k, k ≤ k_max.
pub fn residual_sweep(which: &[FunctionalEquation], s_values: &[ComplexValue], k_max: i64) -> Result<Vec<ResidualRow>> {
    let mut rows = Vec::new();
    for &w in which {
        for &s in s_values {
            for k in 1..=k_max {
                for h in (0..k).filter(|h| h.gcd(&k) == 1) {
                    let pt = EstermannPoint::new(s, h, k)?;
                    let residual = functional_equation_residual(w, pt)?;
                    rows.push(ResidualRow { which: w, s, h, k, residual });
                }
            }
        }
    }
    Ok(rows)
}

pub fn write_residual_csv<W: Write>(out: W, rows: &[ResidualRow]) -> std::io::Result<W> {
    let mut csv = CsvWriter::new(out, &["which", "s_re", "s_im", "h", "k", "residual"])?;
    for r in rows {
        csv.row(&[
            r.which.name().to_string(),
            fmt_f64(r.s.re),
            fmt_f64(r.s.im),
            r.h.to_string(),
            r.k.to_string(),
            fmt_f64(r.residual),
        ])?;
    }
    csv.finish()
}
