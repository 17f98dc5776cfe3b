//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion;
//! run with `--nocapture` to see them.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use frac_autocorr::autocorr::{a_quadrature, a_rational, delta_functional_equation_residual, local_expansion_residuals, QuadratureConfig};
use frac_autocorr::estermann::{functional_equation_residual, EstermannPoint, FunctionalEquation, HurwitzRow};
use frac_autocorr::farey::farey_sequence;
use frac_autocorr::fracpart::{b1_pair_sum_check, gronwall_scan, hl_symmetry_residual, integer_sum_check, sylvester_sum_check};
use frac_autocorr::mellin::{residual_grid, strip_grid, MellinIdentity};
use frac_autocorr::phi::PhiEvalConfig;
use frac_autocorr::rational::modular_inverse;
use frac_autocorr::scalar::LN_2PI_MINUS_GAMMA;
use frac_autocorr::surd::QuadSurd;
use frac_autocorr::vasyunin::{vasyunin_b1cot, vasyunin_cot, vasyunin_psi};
use frac_autocorr::Rational;

type Outcome = Result<String, String>;

fn within(what: &str, measured: f64, limit: f64) -> Outcome {
    let line = format!("{what} = {measured:.3e} (limit {limit:e})");
    if measured <= limit {
        Ok(line)
    } else {
        Err(line)
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    let line = format!("{out}, {:.2} s (limit {} s)", took.as_secs_f64(), limit.as_secs());
    if took < limit {
        Ok(line)
    } else {
        Err(line)
    }
}

fn e(err: frac_autocorr::Error) -> String {
    err.to_string()
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

fn a_at_one() -> Outcome {
    timed(Duration::from_secs(5), || {
        let a = a_quadrature(Rational::ONE, &QuadratureConfig::with_tol(1e-10).map_err(e)?).map_err(e)?;
        within("|A(1) - (log 2pi - gamma)|", (a.value - LN_2PI_MINUS_GAMMA).abs(), 1e-9)
    })
}

fn closed_form_on_farey() -> Outcome {
    timed(Duration::from_secs(120), || {
        let cfg = QuadratureConfig::default();
        let mut worst = 0.0f64;
        for x in farey_sequence(20, r(1, 20), Rational::ONE) {
            let quad = a_quadrature(x, &cfg).map_err(e)?.value;
            worst = worst.max((quad - a_rational::<f64>(x.num(), x.den()).map_err(e)?).abs());
        }
        within("max |closed - quadrature| over F_20", worst, 1e-8)
    })
}

fn reciprocal_symmetry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut closed, mut quad) = (0.0f64, 0.0f64);
    for _ in 0..500 {
        let (p, q) = loop {
            let (p, q) = (rng.gen_range(1..=400i64), rng.gen_range(1..=40i64));
            if p.gcd(&q) == 1 {
                break (p, q);
            }
        };
        let lam = p as f64 / q as f64;
        closed = closed.max((a_rational::<f64>(p, q).map_err(e)? - lam * a_rational::<f64>(q, p).map_err(e)?).abs());
        let a = a_quadrature(r(p, q), &QuadratureConfig::with_tol(2e-10).map_err(e)?).map_err(e)?;
        let b = a_quadrature(r(q, p), &QuadratureConfig::with_tol((2e-10 / lam).max(1e-13)).map_err(e)?).map_err(e)?;
        quad = quad.max((a.value - lam * b.value).abs());
    }
    within("closed form", closed, 1e-9).and_then(|c| within("quadrature", quad, 1e-9).map(|q| format!("{c}; {q}")))
}

fn vasyunin_three_way() -> Outcome {
    timed(Duration::from_secs(30), || {
        let mut worst = 0.0f64;
        for q in 1..=200i64 {
            for p in (0..q).filter(|p| p.gcd(&q) == 1) {
                let c: f64 = vasyunin_cot(p, q).map_err(e)?;
                let b: f64 = vasyunin_b1cot(p, q).map_err(e)?;
                let s: f64 = vasyunin_psi(p, q).map_err(e)?;
                worst = worst.max((c - b).abs().max((c - s).abs()).max((b - s).abs()) / q as f64);
            }
        }
        within("max pairwise deviation / q", worst, 1e-8)
    })
}

fn estermann_at_zero() -> Outcome {
    let mut worst = 0.0f64;
    for k in 1..=64i64 {
        let row = HurwitzRow::new(Complex64::new(0.0, 0.0), k).map_err(e)?;
        for h in (0..k).filter(|h| h.gcd(&k) == 1) {
            let v = if k == 1 { 0.0 } else { vasyunin_cot::<f64>(modular_inverse(h, k).map_err(e)?, k).map_err(e)? };
            worst = worst.max((row.estermann(h).map_err(e)? - Complex64::new(0.25, -0.5 * v)).norm());
        }
    }
    within("max |E(0;h/k) - (1/4 - iV/2)|", worst, 1e-9)
}

fn estermann_functional_equations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut lines = Vec::new();
    let mut ok = true;
    for which in FunctionalEquation::ALL {
        let mut worst = 0.0f64;
        for _ in 0..50 {
            let k = rng.gen_range(1..=20i64);
            let h = loop {
                let h = rng.gen_range(0..k.max(2));
                if h.gcd(&k) == 1 {
                    break h;
                }
            };
            let re = if which == FunctionalEquation::G1 { rng.gen_range(-2.5..-0.5) } else { rng.gen_range(-0.9..1.9) };
            let s = Complex64::new(re, rng.gen_range(-3.0..3.0));
            worst = worst.max(functional_equation_residual(which, EstermannPoint::new(s, h, k).map_err(e)?).map_err(e)?);
        }
        let line = within(&format!("{which:?}"), worst, 1e-8);
        ok &= line.is_ok();
        lines.push(line.unwrap_or_else(|l| l));
    }
    let joined = lines.join("; ");
    if ok {
        Ok(joined)
    } else {
        Err(joined)
    }
}

fn mellin_identities() -> Outcome {
    let grid = strip_grid();
    let which = [MellinIdentity::Autocorr, MellinIdentity::Delta { p: 0, q: 1 }, MellinIdentity::Delta { p: 1, q: 2 }, MellinIdentity::Delta { p: 1, q: 3 }];
    let worst = residual_grid(&which, &grid).map_err(e)?.iter().map(|row| row.residual).fold(0.0, f64::max);
    within("max grid residual", worst, 1e-5)
}

fn delta_functional_equation() -> Outcome {
    let pc = PhiEvalConfig::default();
    let mut worst = 0.0f64;
    for (p, q, t) in [(0, 1, r(1, 2)), (1, 2, r(1, 4)), (1, 3, r(1, 10))] {
        worst = worst.max(delta_functional_equation_residual(p, q, t, &pc).map_err(e)?);
    }
    within("max residual", worst, 1e-6)
}

fn local_expansion() -> Outcome {
    let c = common::golden_f64("local_expansion_c");
    let mut ratio = 0.0f64;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for (p, q) in [(1i64, 1i64), (1, 2), (2, 3)] {
        let rows = local_expansion_residuals(p, q, 8..=20).map_err(e)?;
        let scale = q.pow(4) as f64 / p as f64;
        for row in &rows {
            ratio = ratio.max(row.residual / (scale * row.t.abs().powi(3)));
        }
        for sign in [1.0, -1.0] {
            let pts: Vec<(f64, f64)> = rows.iter().filter(|x| x.t * sign > 0.0).map(|x| (x.t.abs(), x.residual)).collect();
            let slope = common::loglog_slope(&pts);
            lo = lo.min(slope);
            hi = hi.max(slope);
        }
    }
    let slopes = format!("slopes in [{lo:.3}, {hi:.3}]");
    let bound = within("max residual / (q^4 p^-1 |t|^3)", ratio, c)?;
    if (2.7..=3.3).contains(&lo) && (2.7..=3.3).contains(&hi) {
        Ok(format!("{bound}; {slopes}"))
    } else {
        Err(format!("{bound}; {slopes} (limit [2.7, 3.3])"))
    }
}

fn exact_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let n = 500;
    let (mut hl, mut syl, mut ints, mut pair) = (0, 0, 0, 0);
    for i in 0..n {
        let mut rat = || r(rng.gen_range(1..300), rng.gen_range(1..60));
        let (theta, x) = (rat(), rat());
        let (a, b) = (rng.gen_range(-3..4i64), rng.gen_range(-3..4i64));
        let f = move |n: i64| a * n * n + n;
        let g = move |m: i64| b * m + m * m * m;
        let surd = if i % 2 == 0 { QuadSurd::sqrt2() } else { QuadSurd::golden_ratio() };
        hl += (hl_symmetry_residual(theta.into(), x, f, g).map_err(e)? != 0) as usize;
        hl += (hl_symmetry_residual(surd.into(), x, f, g).map_err(e)? != 0) as usize;
        let (l, rr) = sylvester_sum_check(theta.into(), x).map_err(e)?;
        syl += (l != rr) as usize;
        let (l, rr) = integer_sum_check(r(rng.gen_range(0..20_000), rng.gen_range(1..700))).map_err(e)?;
        ints += (l != rr) as usize;
        let (l, rr) = b1_pair_sum_check(theta, x).map_err(e)?;
        pair += (l != rr) as usize;
    }
    let line = format!("{n} instances each; mismatches: hardy-littlewood {hl}, sylvester {syl}, integer sum {ints}, b1 pair sum {pair}");
    if hl + syl + ints + pair == 0 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn farey_sweep() -> Outcome {
    // independent count: 1 (for 0/1) plus every coprime p ≤ q ≤ 287
    let expected = 1 + (1..=287i64).map(|q| (1..=q).filter(|&p| p.gcd(&q) == 1).count()).sum::<usize>();
    if expected != 25159 {
        return Err(format!("count oracle gave {expected}"));
    }
    let dir = std::env::temp_dir().join(format!("frac-autocorr-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|x| x.to_string())?;
    let mut outputs = Vec::new();
    for (run, threads) in [(0, "1"), (1, "4")] {
        let path = dir.join(format!("farey287-{run}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_frac-autocorr"))
            .args(["scan-farey", "--order", "287", "--out"])
            .arg(&path)
            .env("FRAC_AUTOCORR_THREADS", threads)
            .output()
            .map_err(|x| x.to_string())?
            .status;
        if !status.success() {
            return Err(format!("scan-farey exited with {status}"));
        }
        outputs.push(std::fs::read(&path).map_err(|x| x.to_string())?);
    }
    std::fs::remove_dir_all(&dir).ok();
    let rows = outputs[0].iter().filter(|&&b| b == b'\n').count() - 1;
    let line = format!("{rows} data rows (expected {expected}), identical bytes across thread counts: {}", outputs[0] == outputs[1]);
    let text = String::from_utf8_lossy(&outputs[0]);
    let positive = text.lines().skip(2).all(|l| l.rsplit(',').next().and_then(|a| a.parse::<f64>().ok()).is_some_and(|a| a > 0.0));
    if rows == expected && outputs[0] == outputs[1] && text.starts_with("p,q,lambda,A\n") && positive {
        Ok(line)
    } else {
        Err(format!("{line}, positive: {positive}"))
    }
}

fn gronwall() -> Outcome {
    within("sup of partial sums", gronwall_scan(2000, 4096).sup, 0.58950)
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("A(1) quadrature", a_at_one),
        ("closed form vs quadrature on Farey order 20", closed_form_on_farey),
        ("reciprocal symmetry on both paths", reciprocal_symmetry),
        ("cotangent sum three-way agreement", vasyunin_three_way),
        ("Estermann value at zero", estermann_at_zero),
        ("Estermann functional equations", estermann_functional_equations),
        ("Mellin identities on the strip grid", mellin_identities),
        ("Delta functional equation", delta_functional_equation),
        ("local cubic expansion", local_expansion),
        ("exact identity suites", exact_identities),
        ("Farey sweep of order 287", farey_sweep),
        ("Gronwall bound", gronwall),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
