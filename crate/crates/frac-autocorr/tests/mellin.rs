use frac_autocorr::autocorr::QuadratureConfig;
use frac_autocorr::mellin::*;
use frac_autocorr::{ComplexValue, Error, Rational};

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// ζ(1/2) to 12 digits.
const ZETA_HALF: f64 = -1.460_354_508_809_6;

#[test]
fn fracpart_examples() {
    let cfg = QuadratureConfig::with_tol(1e-12).unwrap();
    let v = mellin_numeric(MellinTarget::FracPart, c(-0.5, 0.0), &cfg).unwrap();
    assert!((v - c(-2.0 * ZETA_HALF, 0.0)).norm() < 1e-12, "{v}");
    assert!((v.re - 2.920_709_017_6).abs() < 1e-10);
    for s in strip_grid() {
        let v = mellin_certified(MellinTarget::FracPart, s).unwrap();
        let exact = fracpart_closed_form(s).unwrap();
        assert!(v.err < 1e-12 && (v.value - exact).norm() <= v.err + 1e-12, "{s}: {v:?} vs {exact}");
    }
}

#[test]
fn autocorr_example() {
    let cfg = QuadratureConfig::default();
    let v = mellin_numeric(MellinTarget::Autocorr, c(-0.5, 0.0), &cfg).unwrap();
    assert!((v.re - 4.0 * ZETA_HALF * ZETA_HALF).abs() < 1e-10, "{v}");
    assert!((v.re - 8.530_54).abs() < 1e-5);
}

#[test]
fn identity_examples() {
    assert!(mellin_identity_residual(MellinIdentity::Autocorr, c(-0.5, 0.0)).unwrap() < 1e-5);
    assert!(mellin_identity_residual(MellinIdentity::Autocorr, c(-0.5, 2.0)).unwrap() < 1e-4);
    assert!(mellin_identity_residual(MellinIdentity::Delta { p: 1, q: 2 }, c(-0.3, 0.0)).unwrap() < 1e-5);
    assert!(mellin_identity_residual(MellinIdentity::Delta { p: 0, q: 1 }, c(-0.5, 0.0)).unwrap() < 1e-5);
}

#[test]
fn identities_on_the_strip_grid() {
    let which = [
        MellinIdentity::Autocorr,
        MellinIdentity::Delta { p: 0, q: 1 },
        MellinIdentity::Delta { p: 1, q: 2 },
        MellinIdentity::Delta { p: 2, q: 5 },
    ];
    let rows = residual_grid(&which, &strip_grid()).unwrap();
    assert_eq!(rows.len(), 36);
    for row in &rows {
        assert!(row.residual <= 1e-5, "{} at {}: {:e}", row.which, row.s, row.residual);
    }
    let csv = String::from_utf8(write_residual_csv(Vec::new(), &rows).unwrap()).unwrap();
    assert_eq!(csv.lines().count(), 37);
    assert!(csv.starts_with("which,s_re,s_im,residual\n"));
}

#[test]
fn dilation_rule() {
    for lambda in [Rational::integer(2), Rational::new(1, 3).unwrap()] {
        for s in [c(-0.5, 0.0), c(-0.3, 1.0), c(-0.8, -2.5)] {
            let res = scaling_residual(lambda, s).unwrap();
            assert!(res < 1e-6, "λ = {lambda}, s = {s}: {res:e}");
        }
    }
}

#[test]
fn strip_is_enforced() {
    let cfg = QuadratureConfig::default();
    for s in [c(0.0, 0.0), c(-1.0, 1.0), c(0.5, 0.0)] {
        assert!(matches!(mellin_numeric(MellinTarget::Autocorr, s, &cfg), Err(Error::Strip { .. })), "{s}");
    }
    assert!(mellin_numeric(MellinTarget::FracPart, c(-0.5, 10.0), &cfg).is_err());
    assert!(MellinTarget::delta(2, 4).is_err());
}
