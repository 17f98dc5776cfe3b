//! Exact-breakpoint integration of `Π{α_i t} / t²` for at most two sawtooth
//! factors. Between breakpoints the numerator is a polynomial of degree ≤ 2,
//! so each piece has an elementary antiderivative.

use crate::error::{Error, Result};
use crate::quad::GL8;
use crate::rational::Rational;
use crate::sum::Neumaier;

/// ∫_a^{a+h} scale · Π(d_i + u) / (a + u)² du, where `d_i` is the offset of
/// the piece start from the i-th root.
///
/// Near the origin the closed form is used. Far from it the closed form
/// cancels badly, and an 8-point Gauss rule on the product form is exact to
/// well below rounding because the pole at `−a` is far away.
pub fn piece_integral(a: f64, h: f64, scale: f64, offsets: &[f64]) -> f64 {
    debug_assert!(offsets.len() <= 2);
    if a >= 8.0 * h {
        return GL8.integrate(0.0, h, |u| {
            let t = a + u;
            let num: f64 = offsets.iter().map(|d| d + u).product();
            scale * num / (t * t)
        });
    }
    let b = a + h;
    let inv_diff = h / (a * b);
    match *offsets {
        [] => scale * inv_diff,
        [d] => {
            let r = a - d;
            if r == 0.0 {
                scale * (h / a).ln_1p()
            } else {
                scale * ((h / a).ln_1p() - r * inv_diff)
            }
        }
        [d1, d2] => {
            let (r1, r2) = (a - d1, a - d2);
            let mut v = h;
            if r1 + r2 != 0.0 {
                v -= (r1 + r2) * (h / a).ln_1p();
            }
            if r1 * r2 != 0.0 {
                v += r1 * r2 * inv_diff;
            }
            scale * v
        }
        _ => unreachable!("at most two sawtooth factors"),
    }
}

/// Sorted, deduplicated breakpoints `k/α` of all factors inside `[lo, hi]`,
/// together with the endpoints.
fn breakpoints(alphas: &[Rational], lo: Rational, hi: Rational) -> Result<Vec<Rational>> {
    let mut pts = vec![lo, hi];
    for &alpha in alphas {
        let (p, q) = (alpha.num(), alpha.den());
        let k0 = lo.checked_mul(alpha)?.floor() + 1;
        let k1 = hi.checked_mul(alpha)?.floor();
        for k in k0..=k1 {
            pts.push(Rational::new(k.checked_mul(q).ok_or(Error::Overflow)?, p)?);
        }
    }
    pts.sort();
    pts.dedup();
    Ok(pts)
}

/// ∫_lo^hi Π_i {α_i t} t^{−2} dt for positive rationals `α_i` (one or two of
/// them). Reversed limits give the negated integral.
pub fn integrate_sawtooth_over_t2(alphas: &[Rational], lo: Rational, hi: Rational) -> Result<f64> {
    if alphas.is_empty() || alphas.len() > 2 {
        return Err(Error::Domain { what: "number of sawtooth factors", value: alphas.len() as f64 });
    }
    if let Some(a) = alphas.iter().find(|a| a.signum() <= 0) {
        return Err(Error::Domain { what: "sawtooth frequency", value: a.to_f64() });
    }
    if hi < lo {
        return integrate_sawtooth_over_t2(alphas, hi, lo).map(|v| -v);
    }
    if lo.signum() < 0 {
        return Err(Error::Domain { what: "lower limit", value: lo.to_f64() });
    }
    let scale: f64 = alphas.iter().map(|a| a.to_f64()).product();
    let pts = breakpoints(alphas, lo, hi)?;
    let mut acc = Neumaier::new();
    let mut offsets = Vec::with_capacity(2);
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        offsets.clear();
        for &alpha in alphas {
            let n = a.checked_mul(alpha)?.floor();
            let root = Rational::integer(n).checked_div(alpha)?;
            offsets.push(a.checked_sub(root)?.to_f64());
        }
        let v = piece_integral(a.to_f64(), b.checked_sub(a)?.to_f64(), scale, &offsets);
        if !v.is_finite() {
            return Err(Error::Divergent { re: a.to_f64(), im: 0.0 });
        }
        acc.push(v);
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn single_unit_interval() {
        // ∫_1^2 (t−1)/t² = ln 2 − 1/2
        let v = integrate_sawtooth_over_t2(&[Rational::ONE], r(1, 1), r(2, 1)).unwrap();
        assert!((v - (2f64.ln() - 0.5)).abs() < 1e-15);
        // ∫_0^1 t²/t² = 1
        let v = integrate_sawtooth_over_t2(&[Rational::ONE, Rational::ONE], r(0, 1), r(1, 1)).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        assert!(integrate_sawtooth_over_t2(&[Rational::ONE], r(0, 1), r(1, 1)).is_err());
    }

    #[test]
    fn far_pieces_agree_with_closed_form() {
        let (a, h) = (40.0, 0.5);
        let offsets = [0.25, 0.1];
        let gl = piece_integral(a, h, 1.5, &offsets);
        let dense = crate::quad::GL32.composite(0.0, h, 16, |u| 1.5 * (0.25 + u) * (0.1 + u) / ((a + u) * (a + u)));
        assert!((gl - dense).abs() < 1e-17);
    }

    #[test]
    fn reversed_limits() {
        let alphas = [Rational::ONE, r(2, 3)];
        let f = integrate_sawtooth_over_t2(&alphas, r(1, 2), r(37, 5)).unwrap();
        let b = integrate_sawtooth_over_t2(&alphas, r(37, 5), r(1, 2)).unwrap();
        assert_eq!(f, -b);
    }
}
