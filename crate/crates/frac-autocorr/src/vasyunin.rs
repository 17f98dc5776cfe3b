//! Vasyunin cotangent sums
//! `V(p, q) = Σ_{k=1}^{q−1} {kp/q} cot(kπ/q)`
//! by three independent formulas, the non-coprime extension, and the
//! exponential double sums they control.

use std::io::Write;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::output::{fmt_f64, CsvWriter};
use crate::scalar::{Real, EULER_GAMMA, PI};
use crate::specfun::{cot_pi_ratio, digamma_real};
use crate::sum::{ComplexNeumaier, Neumaier};

pub use crate::rational::modular_inverse;

/// Largest q accepted by the direct O(q²) double sums.
pub const MAX_DIRECT_TRIG_Q: i64 = 512;

/// A validated argument pair for V(p, q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VasyuninInput {
    p: i64,
    q: i64,
}

impl VasyuninInput {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q <= 0 {
            return Err(Error::Domain { what: "Vasyunin modulus q", value: q as f64 });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(VasyuninInput { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    /// p reduced into [0, q).
    pub fn p_reduced(self) -> i64 {
        self.p.rem_euclid(self.q)
    }

    /// p̄ with p p̄ ≡ 1 (mod q), in [1, q].
    pub fn inverse(self) -> i64 {
        modular_inverse(self.p, self.q).expect("coprime by construction")
    }

    pub fn value<T: Real>(self) -> T {
        vasyunin_cot(self.p, self.q).expect("validated input")
    }
}

/// Defining sum.
pub fn vasyunin_cot<T: Real>(p: i64, q: i64) -> Result<T> {
    let v = VasyuninInput::new(p, q)?;
    let p = v.p_reduced();
    let mut acc = Neumaier::new();
    for k in 1..q {
        let r = ((k as i128 * p as i128) % q as i128) as i64;
        acc.push(T::ratio(r, q) * cot_pi_ratio::<T>(k, q)?);
    }
    Ok(acc.value())
}

/// B₁(r/q) for 0 ≤ r < q.
#[inline]
fn b1_residue<T: Real>(r: i64, q: i64) -> T {
    if r == 0 {
        T::zero()
    } else {
        T::ratio(2 * r - q, 2 * q)
    }
}

/// Half-range form 2 Σ_{1≤k<q/2} B₁(kp/q) cot(kπ/q).
pub fn vasyunin_b1cot<T: Real>(p: i64, q: i64) -> Result<T> {
    let table = CotTable::<T>::new(VasyuninInput::new(p, q)?.q);
    table.vasyunin(p, q)
}

/// Digamma form −(2/π) Σ_{k=1}^{q−1} B₁(kp/q) ψ(k/q).
pub fn vasyunin_psi<T: Real>(p: i64, q: i64) -> Result<T> {
    let v = VasyuninInput::new(p, q)?;
    let p = v.p_reduced();
    let mut acc = Neumaier::new();
    for k in 1..q {
        let r = ((k as i128 * p as i128) % q as i128) as i64;
        acc.push(b1_residue::<T>(r, q) * digamma_real(T::ratio(k, q))?);
    }
    Ok(-T::from_i(2) / T::PI() * acc.value())
}

/// Second digamma form −(2/π) Σ {kp/q} ψ(k/q) − (q/π)(log q + γ) + γ/π.
///
/// The γ/π comes from Σ_{k<q} ψ(k/q) = −q(log q + γ) + γ: the k = q term
/// ψ(1) = −γ is absent from the range.
pub fn vasyunin_psi_frac<T: Real>(p: i64, q: i64) -> Result<T> {
    let v = VasyuninInput::new(p, q)?;
    let p = v.p_reduced();
    let mut acc = Neumaier::new();
    for k in 1..q {
        let r = ((k as i128 * p as i128) % q as i128) as i64;
        acc.push(T::ratio(r, q) * digamma_real(T::ratio(k, q))?);
    }
    let qt = T::from_i(q);
    let g = T::euler_gamma();
    Ok(-T::from_i(2) / T::PI() * acc.value() - qt / T::PI() * (qt.ln() + g) + g / T::PI())
}

/// Direct sums over m < b of B₁(ma/b)ψ(m/b) and {ma/b}ψ(m/b) for arbitrary
/// a, b ≥ 1, next to their predictions from V(a/d, b/d).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoncoprimeSums {
    pub b1_psi: f64,
    pub frac_psi: f64,
    pub predicted_b1_psi: f64,
    pub predicted_frac_psi: f64,
}

pub fn noncoprime_sums(a: i64, b: i64) -> Result<NoncoprimeSums> {
    if a < 1 || b < 1 {
        return Err(Error::Domain { what: "noncoprime arguments", value: a.min(b) as f64 });
    }
    let d = a.gcd(&b);
    let (mut b1, mut fr) = (Neumaier::new(), Neumaier::new());
    for m in 1..b {
        let r = ((m as i128 * a as i128) % b as i128) as i64;
        let psi = digamma_real(m as f64 / b as f64)?;
        b1.push(b1_residue::<f64>(r, b) * psi);
        fr.push(r as f64 / b as f64 * psi);
    }
    let v: f64 = vasyunin_cot(a / d, b / d)?;
    let predicted_b1_psi = -PI * d as f64 / 2.0 * v;
    let (bf, df) = (b as f64, d as f64);
    let predicted_frac_psi = predicted_b1_psi - bf / 2.0 * (bf.ln() + EULER_GAMMA) + df / 2.0 * (df.ln() + EULER_GAMMA);
    Ok(NoncoprimeSums { b1_psi: b1.value(), frac_psi: fr.value(), predicted_b1_psi, predicted_frac_psi })
}

/// Σ_{m=1}^{b−1} B₁(ma/b) ψ(m/b) = −(πd/2) V(a/d, b/d).
pub fn vasyunin_noncoprime(a: i64, b: i64) -> Result<f64> {
    noncoprime_sums(a, b).map(|s| s.b1_psi)
}

/// Half-range table of cot(kπ/Q) for 0 < k < Q/2. Any q dividing Q reuses
/// it through cot(kπ/q) = cot((kQ/q)π/Q).
#[derive(Debug, Clone)]
pub struct CotTable<T> {
    modulus: i64,
    values: Vec<T>,
}

impl<T: Real> CotTable<T> {
    pub fn new(modulus: i64) -> Self {
        let half = (modulus + 1) / 2;
        let values = (0..half)
            .map(|k| if k == 0 { T::zero() } else { cot_pi_ratio::<T>(k, modulus).expect("k is not a multiple of q") })
            .collect();
        CotTable { modulus, values }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// cot(kπ/q) for 0 < k < q/2 and q | Q.
    #[inline]
    pub fn cot(&self, k: i64, q: i64) -> T {
        self.values[(k * (self.modulus / q)) as usize]
    }

    /// V(p, q) in half-range B₁ form for q dividing the table modulus.
    pub fn vasyunin(&self, p: i64, q: i64) -> Result<T> {
        let v = VasyuninInput::new(p, q)?;
        if self.modulus % q != 0 {
            return Err(Error::Domain { what: "q must divide the cot table modulus", value: q as f64 });
        }
        let p = v.p_reduced();
        let mut acc = Neumaier::new();
        let mut r: i64 = 0;
        for k in 1..(q + 1) / 2 {
            r += p;
            if r >= q {
                r -= q;
            }
            if 2 * k == q {
                continue;
            }
            acc.push(b1_residue::<T>(r, q) * self.cot(k, q));
        }
        Ok(T::from_i(2) * acc.value())
    }

    /// All V(p, q) for coprime 1 ≤ p < q, sharing this table.
    pub fn row(&self, q: i64) -> Result<Vec<(i64, T)>> {
        (1..q.max(2)).filter(|p| p.gcd(&q) == 1).map(|p| Ok((p, self.vasyunin(p, q)?))).collect()
    }
}

/// Σ_{1≤k,l≤q} kl e(klp/q) by direct double summation.
pub fn trig_kl_sum(p: i64, q: i64) -> Result<Complex64> {
    weighted_double_sum(p, q, |k| k as f64)
}

/// (q²/4)(3q + 1) − (q²/2) i V(p̄, q).
pub fn trig_kl_formula(p: i64, q: i64) -> Result<Complex64> {
    let v = VasyuninInput::new(p, q)?;
    let vbar: f64 = vasyunin_cot(v.inverse(), q)?;
    let q2 = (q * q) as f64;
    Ok(Complex64::new(q2 / 4.0 * (3 * q + 1) as f64, -q2 / 2.0 * vbar))
}

/// Σ_{1≤k,l≤q} (½ − k/q)(½ − l/q) e(klp/q) by direct double summation.
pub fn centered_trig_sum(p: i64, q: i64) -> Result<Complex64> {
    weighted_double_sum(p, q, |k| 0.5 - k as f64 / q as f64)
}

/// 1/4 − (i/2) V(p̄, q).
pub fn centered_trig_formula(p: i64, q: i64) -> Result<Complex64> {
    let v = VasyuninInput::new(p, q)?;
    let vbar: f64 = vasyunin_cot(v.inverse(), q)?;
    Ok(Complex64::new(0.25, -0.5 * vbar))
}

fn weighted_double_sum(p: i64, q: i64, w: impl Fn(i64) -> f64) -> Result<Complex64> {
    let v = VasyuninInput::new(p, q)?;
    if q > MAX_DIRECT_TRIG_Q {
        return Err(Error::TooLarge { what: "q for direct trigonometric sum", got: q as u64, max: MAX_DIRECT_TRIG_Q as u64 });
    }
    let roots = roots_of_unity(q);
    let p = v.p_reduced();
    let mut acc = ComplexNeumaier::new();
    for k in 1..=q {
        let mut inner = ComplexNeumaier::new();
        for l in 1..=q {
            let idx = ((k * l) % q * p) % q;
            inner.push(roots[idx as usize] * w(l));
        }
        acc.push(inner.value() * w(k));
    }
    Ok(acc.value())
}

/// e(j/q) for 0 ≤ j < q, each from an exactly reduced angle.
pub fn roots_of_unity(q: i64) -> Vec<Complex64> {
    (0..q)
        .map(|j| {
            let (s, c) = (std::f64::consts::TAU * j as f64 / q as f64).sin_cos();
            Complex64::new(c, s)
        })
        .collect()
}

/// Σ_{n<q} n zⁿ and its closed form q/(z − 1) for z = e(j/q) ≠ 1.
pub fn geometric_derivative_sum(q: i64, j: i64) -> Result<(Complex64, Complex64)> {
    let j = j.rem_euclid(q.max(1));
    if q < 2 || j == 0 {
        return Err(Error::Pole { re: 1.0, im: 0.0 });
    }
    let roots = roots_of_unity(q);
    let mut acc = ComplexNeumaier::new();
    for n in 1..q {
        acc.push(roots[((n * j) % q) as usize] * n as f64);
    }
    Ok((acc.value(), q as f64 / (roots[j as usize] - 1.0)))
}

/// max_p |V(p, q)| / (q log q) for each q in [2, q_max].
pub fn growth_scan(q_max: i64) -> Vec<(i64, f64)> {
    (2..=q_max)
        .map(|q| {
            let table = CotTable::<f64>::new(q);
            let worst = table.row(q).expect("coprime row").into_iter().map(|(_, v)| v.abs()).fold(0.0, f64::max);
            (q, worst / (q as f64 * (q as f64).ln()))
        })
        .collect()
}

/// CSV `q,p,V` for 1 ≤ q ≤ q_max and coprime 0 ≤ p < q (p = 0 only for q = 1).
pub fn write_vtable<W: Write>(out: W, q_max: i64) -> std::io::Result<W> {
    let mut csv = CsvWriter::new(out, &["q", "p", "V"])?;
    csv.row(&["1".into(), "0".into(), fmt_f64(0.0)])?;
    for q in 2..=q_max {
        let table = CotTable::<f64>::new(q);
        for (p, v) in table.row(q).expect("coprime row") {
            csv.row(&[q.to_string(), p.to_string(), fmt_f64(v)])?;
        }
    }
    csv.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(vasyunin_cot::<f64>(1, 1).unwrap(), 0.0);
        let third = -1.0 / (3.0 * 3f64.sqrt());
        assert!((vasyunin_cot::<f64>(1, 3).unwrap() - third).abs() < 1e-15);
        assert!((vasyunin_cot::<f64>(1, 4).unwrap() + 0.5).abs() < 1e-15);
        assert!(matches!(vasyunin_cot::<f64>(2, 4), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn table_reuse_across_divisors() {
        let table = CotTable::<f64>::new(60);
        for q in [2, 3, 5, 12, 60] {
            for p in (1..q).filter(|p| p.gcd(&q) == 1) {
                let direct: f64 = vasyunin_cot(p, q).unwrap();
                assert!((table.vasyunin(p, q).unwrap() - direct).abs() < 1e-13, "{p}/{q}");
            }
        }
        assert!(table.vasyunin(1, 7).is_err());
    }
}
