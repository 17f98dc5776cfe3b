//! The Stirling remainder J(z) and the integrals J₁,₂(z, x) = ∫_x^∞ B₁(t)/(t+z)² dt.

use num_complex::Complex64;

use super::bernoulli::bernoulli_f64;
use super::gamma::log_gamma;
use crate::error::{Error, Result};
use crate::scalar::LN_2PI;

/// J(z) = −log Γ(z) + (z − ½) log z − z + ½ log 2π.
pub fn j_function(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::Domain { what: "j_function (cut (-inf, 0])", value: z.re });
    }
    Ok(-log_gamma(z)? + (z - 0.5) * z.ln() - z + 0.5 * LN_2PI)
}

/// ∫_a^b (t − n − ½)/(t + z)² dt, i.e. B₁ on a piece of [n, n+1].
fn piece(a: f64, b: f64, n: f64, z: Complex64) -> Complex64 {
    let (za, zb) = (z + a, z + b);
    (zb / za).ln() + (z + n + 0.5) * (zb.inv() - za.inv())
}

/// J₁,₂(z, x), exact per unit interval up to a cutoff and an
/// Euler–Maclaurin tail beyond it.
pub fn j12(z: Complex64, x: f64) -> Result<Complex64> {
    if !(x + z.re > 0.0) {
        return Err(Error::Domain { what: "j12 (needs x + Re z > 0)", value: x + z.re });
    }
    let mut acc = crate::sum::ComplexNeumaier::new();
    let mut n = x.ceil();
    if n > x {
        acc.push(piece(x, n, x.floor(), z));
    }
    let cutoff = n.max((24.0 - z.re).ceil()).max((z.norm() + 24.0 - z.re).ceil());
    while n < cutoff {
        acc.push(piece(n, n + 1.0, n, z));
        n += 1.0;
    }
    // ∫_M^∞ B₁ f = −Σ_j B_{2j}/(2j)! f^{(2j−2)}(M) with f = (t+z)^{−2}, and
    // f^{(2j−2)}(M) = (2j−1)! (M+z)^{−2j}, so the j-th term is −B_{2j} w^{2j}/(2j)
    let w = (z + n).inv();
    let w2 = w * w;
    let mut pow = w2;
    for j in 1..20 {
        let term = -pow * (bernoulli_f64(2 * j) / (2 * j) as f64);
        acc.push(term);
        if term.norm() < 1e-18 {
            break;
        }
        pow = pow * w2;
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::EULER_GAMMA;
    use crate::specfun::gamma::digamma;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn j_at_one() {
        let v = j_function(c(1.0)).unwrap();
        assert!((v.re - (0.5 * LN_2PI - 1.0)).abs() < 1e-15);
        assert!(v.norm() <= (1.0 + std::f64::consts::PI * 2f64.sqrt()) / 12.0);
        assert!(j_function(c(-1.0)).is_err());
    }

    #[test]
    fn j12_is_minus_j_prime() {
        for &z in &[2.0, 5.0, 10.0, 0.3] {
            let lhs = j12(c(z), 0.0).unwrap();
            let want = digamma(c(z)).unwrap() - c(z).ln() + 0.5 / z;
            assert!((lhs - want).norm() < 1e-13, "z = {z}");
        }
        let h3 = 1.0 + 0.5 + 1.0 / 3.0;
        let want = 3f64.ln() + EULER_GAMMA + 1.0 / 6.0 - h3;
        // J'(N) = log N + γ + 1/(2N) − H_N and J₁,₂(N, 0) = −J'(N)
        assert!((j12(c(3.0), 0.0).unwrap().re + want).abs() < 1e-13);
    }

    #[test]
    fn j12_bound() {
        for &(z, x) in &[(1.0, 1e6), (0.5, 0.25), (3.0, 7.5), (0.1, 40.0)] {
            let v = j12(c(z), x).unwrap();
            assert!(v.norm() <= 1.0 / (2.0 * (x + z)), "z={z} x={x}");
        }
        assert!(j12(c(-1.0), 0.5).is_err());
    }
}
