//! Named self-check suites, one per module, behind `frac-autocorr check`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::autocorr::{a_quadrature, a_rational, delta_functional_equation_residual, QuadratureConfig};
use crate::error::{Error, Result};
use crate::estermann::{functional_equation_residual, EstermannPoint, FunctionalEquation, HurwitzRow};
use crate::farey::farey_sequence;
use crate::fracpart::{b1_pair_sum_check, gronwall_scan, hl_symmetry_residual, integer_sum_check, sylvester_sum_check};
use crate::mellin::{residual_grid, strip_grid, MellinIdentity};
use crate::phi::PhiEvalConfig;
use crate::rational::{modular_inverse, Rational};
use crate::scalar::LN_2PI_MINUS_GAMMA;
use crate::surd::QuadSurd;
use crate::vasyunin::{vasyunin_b1cot, vasyunin_cot, vasyunin_psi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    FracPart,
    Vasyunin,
    Estermann,
    Autocorr,
    Mellin,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::FracPart, Suite::Vasyunin, Suite::Estermann, Suite::Autocorr, Suite::Mellin];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FracPart => "fracpart",
            Suite::Vasyunin => "vasyunin",
            Suite::Estermann => "estermann",
            Suite::Autocorr => "autocorr",
            Suite::Mellin => "mellin",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteSelection(pub &'static [Suite]);

impl FromStr for SuiteSelection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(SuiteSelection(&Suite::ALL));
        }
        Suite::ALL
            .iter()
            .position(|x| x.name().eq_ignore_ascii_case(s))
            .map(|i| SuiteSelection(&Suite::ALL[i..=i]))
            .ok_or_else(|| format!("unknown suite {s:?}; expected fracpart, vasyunin, estermann, autocorr, mellin or all"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    /// Largest modulus for exhaustive V scans.
    pub qmax: i64,
    /// Replaces every check's pass threshold when set.
    pub tol: Option<f64>,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { qmax: 200, tol: None, seed: 0x5eed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub check: &'static str,
    pub measured: f64,
    pub limit: f64,
    pub passed: bool,
}

struct Recorder<'a> {
    suite: Suite,
    opts: &'a CheckOptions,
    out: Vec<CheckOutcome>,
}

impl Recorder<'_> {
    /// Passes when measured ≤ limit (or ≤ the --tol override).
    fn at_most(&mut self, check: &'static str, measured: f64, limit: f64) {
        let limit = self.opts.tol.unwrap_or(limit);
        self.out.push(CheckOutcome { suite: self.suite, check, measured, limit, passed: measured <= limit });
    }

    /// Exact checks count mismatches; the limit is always zero.
    fn exact(&mut self, check: &'static str, mismatches: usize) {
        self.out.push(CheckOutcome { suite: self.suite, check, measured: mismatches as f64, limit: 0.0, passed: mismatches == 0 });
    }
}

const EXACT_INSTANCES: usize = 500;

fn fracpart_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) -> Result<()> {
    let rat = |rng: &mut ChaCha8Rng| Rational::new(rng.gen_range(1..200), rng.gen_range(1..40));
    let (mut hl, mut syl, mut ints, mut pair) = (0, 0, 0, 0);
    for i in 0..EXACT_INSTANCES {
        let (theta, x) = (rat(rng)?, rat(rng)?);
        let (a, b) = (rng.gen_range(-3..4i64), rng.gen_range(-3..4i64));
        let f = move |n: i64| a * n * n + n;
        let g = move |m: i64| b * m + m * m * m;
        hl += (hl_symmetry_residual(theta.into(), x, f, g)? != 0) as usize;
        let surd = if i % 2 == 0 { QuadSurd::sqrt2() } else { QuadSurd::golden_ratio() };
        hl += (hl_symmetry_residual(surd.into(), x, f, g)? != 0) as usize;
        let (l, r) = sylvester_sum_check(theta.into(), x)?;
        syl += (l != r) as usize;
        let (l, r) = integer_sum_check(Rational::new(rng.gen_range(0..10_000), rng.gen_range(1..500))?)?;
        ints += (l != r) as usize;
        let (l, r) = b1_pair_sum_check(theta, x)?;
        pair += (l != r) as usize;
    }
    rec.exact("hardy_littlewood", hl);
    rec.exact("sylvester", syl);
    rec.exact("integer_sum", ints);
    rec.exact("b1_pair_sum", pair);
    let scan = gronwall_scan(2000, 4096);
    rec.at_most("gronwall_sup", scan.sup, 0.58950);
    Ok(())
}

fn vasyunin_suite(rec: &mut Recorder) -> Result<()> {
    let mut worst = 0.0f64;
    for q in 1..=rec.opts.qmax {
        for p in (0..q.max(1)).filter(|p| p.gcd(&q) == 1) {
            let c: f64 = vasyunin_cot(p, q)?;
            let b: f64 = vasyunin_b1cot(p, q)?;
            let s: f64 = vasyunin_psi(p, q)?;
            let dev = (c - b).abs().max((c - s).abs()).max((b - s).abs());
            worst = worst.max(dev / q as f64);
        }
    }
    rec.at_most("three_way_over_q", worst, 1e-8);
    Ok(())
}

fn random_coprime(rng: &mut ChaCha8Rng, k_max: i64) -> (i64, i64) {
    let k = rng.gen_range(1..=k_max);
    loop {
        let h = rng.gen_range(0..k.max(2));
        if h.gcd(&k) == 1 {
            return (h, k);
        }
    }
}

fn estermann_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) -> Result<()> {
    let mut worst = 0.0f64;
    for k in 1..=rec.opts.qmax.min(64) {
        let row = HurwitzRow::new(Complex64::new(0.0, 0.0), k)?;
        for h in (0..k).filter(|h| h.gcd(&k) == 1) {
            let h_bar = modular_inverse(h, k)?;
            let v = if k == 1 { 0.0 } else { vasyunin_cot::<f64>(h_bar, k)? };
            worst = worst.max((row.estermann(h)? - Complex64::new(0.25, -0.5 * v)).norm());
        }
    }
    rec.at_most("value_at_zero", worst, 1e-9);
    let names: [&'static str; 5] = ["fe_E", "fe_Esin", "fe_Ecos", "fe_G0", "fe_G1"];
    for (which, name) in FunctionalEquation::ALL.into_iter().zip(names) {
        let mut worst = 0.0f64;
        for _ in 0..50 {
            let (h, k) = random_coprime(rng, 20);
            let re = if which == FunctionalEquation::G1 { rng.gen_range(-2.5..-0.5) } else { rng.gen_range(-0.9..1.9) };
            let s = Complex64::new(re, rng.gen_range(-3.0..3.0));
            worst = worst.max(functional_equation_residual(which, EstermannPoint::new(s, h, k)?)?);
        }
        rec.at_most(name, worst, 1e-8);
    }
    Ok(())
}

fn autocorr_suite(rec: &mut Recorder, rng: &mut ChaCha8Rng) -> Result<()> {
    let cfg = QuadratureConfig::with_tol(1e-10)?;
    let one = a_quadrature(Rational::ONE, &cfg)?;
    rec.at_most("a_at_one", (one.value - LN_2PI_MINUS_GAMMA).abs(), 1e-9);
    let mut worst = 0.0f64;
    for x in farey_sequence(20, Rational::new(1, 20)?, Rational::ONE) {
        let q = a_quadrature(x, &cfg)?;
        worst = worst.max((q.value - a_rational::<f64>(x.num(), x.den())?).abs());
    }
    rec.at_most("closed_form_vs_quadrature", worst, 1e-8);
    let (mut closed, mut quad) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let (p, q) = loop {
            let (p, q) = (rng.gen_range(1..=2500i64), rng.gen_range(1..=50i64));
            let g = p.gcd(&q);
            if p / g <= 50 * (q / g) {
                break (p / g, q / g);
            }
        };
        let lam = p as f64 / q as f64;
        closed = closed.max((a_rational::<f64>(p, q)? - lam * a_rational::<f64>(q, p)?).abs());
        let a = a_quadrature(Rational::new(p, q)?, &QuadratureConfig::with_tol(2e-10)?)?;
        let b = a_quadrature(Rational::new(q, p)?, &QuadratureConfig::with_tol((2e-10 / lam).max(1e-13))?)?;
        quad = quad.max((a.value - lam * b.value).abs());
    }
    rec.at_most("reciprocal_closed_form", closed, 1e-9);
    rec.at_most("reciprocal_quadrature", quad, 1e-9);
    let pc = PhiEvalConfig::default();
    let mut worst = 0.0f64;
    for (p, q, t) in [(0, 1, (1, 2)), (1, 2, (1, 4)), (1, 3, (1, 10))] {
        worst = worst.max(delta_functional_equation_residual(p, q, Rational::new(t.0, t.1)?, &pc)?);
    }
    rec.at_most("delta_functional_equation", worst, 1e-6);
    Ok(())
}

fn mellin_suite(rec: &mut Recorder) -> Result<()> {
    let grid = strip_grid();
    let worst = |rows: Vec<crate::mellin::MellinResidualRow>| rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    rec.at_most("autocorr_transform", worst(residual_grid(&[MellinIdentity::Autocorr], &grid)?), 1e-5);
    let deltas = [MellinIdentity::Delta { p: 0, q: 1 }, MellinIdentity::Delta { p: 1, q: 2 }, MellinIdentity::Delta { p: 1, q: 3 }];
    rec.at_most("delta_transform", worst(residual_grid(&deltas, &grid)?), 1e-5);
    Ok(())
}

/// Runs one suite; `Err` only for evaluation failures, not for failed checks.
pub fn run_suite(suite: Suite, opts: &CheckOptions) -> Result<Vec<CheckOutcome>> {
    if opts.qmax < 1 {
        return Err(Error::Domain { what: "qmax", value: opts.qmax as f64 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ suite as u64);
    let mut rec = Recorder { suite, opts, out: Vec::new() };
    match suite {
        Suite::FracPart => fracpart_suite(&mut rec, &mut rng)?,
        Suite::Vasyunin => vasyunin_suite(&mut rec)?,
        Suite::Estermann => estermann_suite(&mut rec, &mut rng)?,
        Suite::Autocorr => autocorr_suite(&mut rec, &mut rng)?,
        Suite::Mellin => mellin_suite(&mut rec)?,
    }
    Ok(rec.out)
}
