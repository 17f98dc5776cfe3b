//! Special functions: Γ and its logarithmic derivatives, Hurwitz and
//! Riemann zeta, a reduced cotangent, and the Stirling remainders.
//!
//! Real-argument kernels are generic over [`Real`](crate::scalar::Real);
//! the zeta functions work on `Complex64`.

pub mod bernoulli;
pub mod gamma;
pub mod remainder;
pub mod trig;
pub mod zeta;

pub use bernoulli::{bernoulli_f64, bernoulli_number, bernoulli_real};
pub use gamma::{digamma, digamma_real, gamma, ln_gamma_real, log_gamma, trigamma};
pub use remainder::{j12, j_function};
pub use trig::{cot_pi_ratio, cot_stable};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_real, hurwitz_zeta_regularized, riemann_zeta};
