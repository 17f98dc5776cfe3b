use crate::error::{Error, Result};
use crate::scalar::Real;

/// cot x with the argument reduced modulo π first.
pub fn cot_stable<T: Real>(x: T) -> Result<T> {
    let pi = T::PI();
    let r = x - (x / pi).round() * pi;
    if r == T::zero() {
        return Err(Error::Pole { re: x.to_f64_lossy(), im: 0.0 });
    }
    let half_pi = T::FRAC_PI_2();
    // near ±π/2 use cot r = −tan(r ∓ π/2), which is accurate at the zero
    if r.abs() > T::FRAC_PI_4() {
        let shifted = if r > T::zero() { r - half_pi } else { r + half_pi };
        return Ok(-shifted.tan());
    }
    Ok(r.tan().recip())
}

/// cot(kπ/q) with exact integer reduction of k modulo q.
pub fn cot_pi_ratio<T: Real>(k: i64, q: i64) -> Result<T> {
    let k = k.rem_euclid(q);
    if k == 0 {
        return Err(Error::Pole { re: 0.0, im: 0.0 });
    }
    if 2 * k > q {
        return cot_pi_ratio::<T>(q - k, q).map(|v| -v);
    }
    if 2 * k == q {
        return Ok(T::zero());
    }
    // 0 < k/q < 1/2
    if 4 * k <= q {
        Ok((T::PI() * T::ratio(k, q)).tan().recip())
    } else {
        // cot(πk/q) = tan(π(q − 2k)/(2q))
        Ok((T::PI() * T::ratio(q - 2 * k, 2 * q)).tan())
    }
}
