//! Numerics for the multiplicative autocorrelation
//! `A(λ) = ∫₀^∞ {t}{λt} t⁻² dt` of the fractional-part function and the
//! objects its theory is built from: Vasyunin cotangent sums, the
//! Estermann zeta function, the functions φₙ, Lehmer's constants and
//! the Bernoulli-function identities of elementary summation.
//!
//! Most quantities come with two independent evaluation routes so that
//! each can check the other.

pub mod autocorr;
pub mod certified;
pub mod checks;
pub mod dd;
pub mod error;
pub mod estermann;
pub mod farey;
pub mod fracpart;
pub mod mellin;
pub mod output;
pub mod periodic_series;
pub mod phi;
pub mod piecewise;
pub mod quad;
pub mod rational;
pub mod scalar;
pub mod specfun;
pub mod sum;
pub mod surd;
pub mod vasyunin;

pub use certified::CertifiedReal;
pub use dd::DoubleDouble;
pub use error::{Error, Result};
pub use rational::Rational;
pub use scalar::Real;

/// Complex carrier for ζ(s, a), E(s; h/k), G₀ and G₁.
pub type ComplexValue = num_complex::Complex64;
