//! Exact Bernoulli numbers (convention B₁ = −1/2).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::scalar::Real;

pub const MAX_BERNOULLI: usize = 64;

static TABLE: Lazy<Vec<BigRational>> = Lazy::new(|| {
    let mut b: Vec<BigRational> = Vec::with_capacity(MAX_BERNOULLI + 1);
    b.push(BigRational::one());
    for m in 1..=MAX_BERNOULLI {
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
});

static TABLE_F64: Lazy<Vec<f64>> = Lazy::new(|| TABLE.iter().map(ratio_to_f64).collect());

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

pub fn bernoulli_number(n: usize) -> &'static BigRational {
    &TABLE[n]
}

pub fn bernoulli_f64(n: usize) -> f64 {
    TABLE_F64[n]
}

fn bigint_to_real<T: Real>(n: &BigInt) -> T {
    let (sign, digits) = n.to_u32_digits();
    let base = T::from_f64(4294967296.0).expect("2^32 representable");
    let mut acc = T::zero();
    for d in digits.iter().rev() {
        acc = acc * base + T::from_u32(*d).expect("u32 representable");
    }
    if sign == num_bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}

/// B_n rounded in the target scalar type.
pub fn bernoulli_real<T: Real>(n: usize) -> T {
    let r = &TABLE[n];
    bigint_to_real::<T>(r.numer()) / bigint_to_real::<T>(r.denom())
}
