use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("pole at {re} + {im}i")]
    Pole { re: f64, im: f64 },
    #[error("argument outside the domain of {what}: {value}")]
    Domain { what: &'static str, value: f64 },
    #[error("{p} and {q} are not coprime; use vasyunin_noncoprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("{what} = {got} exceeds the supported maximum {max}")]
    TooLarge { what: &'static str, got: u64, max: u64 },
    #[error("series diverges: coefficient mean S(g) = {re} + {im}i")]
    Divergent { re: f64, im: f64 },
    #[error("tolerance {tol:e} unreachable, achieved {achieved:e}")]
    Unreachable { achieved: f64, tol: f64 },
    #[error("pole at {} with known principal part", .0.location)]
    PoleWithLaurent(Box<crate::estermann::LaurentData>),
    #[error("s = {re} + {im}i lies outside the strip ({lo}, {hi})")]
    Strip { re: f64, im: f64, lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
