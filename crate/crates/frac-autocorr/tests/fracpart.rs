use frac_autocorr::fracpart::*;
use frac_autocorr::surd::QuadSurd;
use frac_autocorr::Rational;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

#[test]
fn hardy_littlewood_examples() {
    let id = |n: i64| n;
    assert_eq!(hl_symmetry_residual(r(1, 2).into(), r(3, 1), id, id).unwrap(), 0);
    assert_eq!(hl_symmetry_residual(QuadSurd::sqrt2().into(), r(5, 2), id, id).unwrap(), 0);
    assert_eq!(hl_symmetry_residual(r(3, 2).into(), r(4, 1), |n| n * n, id).unwrap(), 0);
    let float = hl_symmetry_residual(Theta::Float(2f64.sqrt()), r(5, 2), id, id).unwrap();
    assert!((float as f64).abs() < 1e-12);
}

#[test]
fn sylvester_examples() {
    assert_eq!(sylvester_sum_check(QuadSurd::sqrt2().into(), r(5, 2)).unwrap(), (6, 6));
    assert_eq!(sylvester_sum_check(r(1, 2).into(), r(3, 1)).unwrap(), (4, 4));
    assert_eq!(sylvester_sum_check(Rational::ONE.into(), Rational::ONE).unwrap(), (2, 2));
    let phi = QuadSurd::golden_ratio();
    for x in [r(7, 3), r(100, 1), r(1001, 7)] {
        let (l, rr) = sylvester_sum_check(phi.into(), x).unwrap();
        assert_eq!(l, rr);
    }
}

#[test]
fn gronwall_examples() {
    assert!((gronwall_partial_sum(1, 0.25) - 1.0 / std::f64::consts::PI).abs() < 1e-15);
    let scan = gronwall_scan(2000, 4096);
    assert!(scan.sup < 0.58949 && scan.inf > 0.0, "{scan:?}");
    assert!((gronwall_cesaro_mean(3000, 1.0 / 3.0) - 1.0 / 6.0).abs() < 2e-3);
}

#[test]
fn frullani_examples() {
    assert_eq!(frullani_integral_check(1.0, 4.0, 1e-14).unwrap(), 0.0);
    assert!(frullani_integral_check(2.0, 3.0, 1e-10).unwrap().abs() < 1e-10);
    assert!(frullani_integral_check(1.0 / 3.0, 5.0, 1e-10).unwrap().abs() < 1e-10);
    assert!(frullani_integral_check(-1.0, 5.0, 1e-10).is_err());
}

#[test]
fn b1_pair_examples() {
    assert_eq!(b1_pair_sum_check(r(1, 2), Rational::ONE).unwrap(), (Rational::ZERO, Rational::ZERO));
    assert_eq!(b1_pair_sum_check(Rational::ONE, Rational::ONE).unwrap(), (Rational::ZERO, Rational::ZERO));
    let (l, rr) = b1_pair_sum_check(r(2, 3), r(3, 2)).unwrap();
    assert_eq!(l, rr);
}

#[test]
fn weighted_b1_examples() {
    for (theta, x) in [(Rational::ONE, r(10, 1)), (r(1, 2), r(73, 10)), (r(3, 5), r(20, 1))] {
        let res = weighted_b1_identity_residual(theta, x).unwrap();
        assert!(res.abs() < 1e-8, "theta = {theta}, x = {x}: {res}");
    }
}

#[test]
fn bernoulli_fourier_tail_bound() {
    for n in 2..=6usize {
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        let m = 50;
        let cut = 200_000usize;
        // Σ_{k>M} k⁻ⁿ: explicit head plus the integral bound for the rest
        let tail: f64 = (m + 1..=cut).map(|k| (k as f64).powi(-(n as i32))).sum::<f64>()
            + (cut as f64).powi(1 - n as i32) / (n - 1) as f64;
        let bound = 2.0 * fact * std::f64::consts::TAU.powi(-(n as i32)) * tail;
        for j in 0..=64 {
            let x = j as f64 / 64.0;
            let err = (bernoulli_fourier_partial(n, x, m) - bernoulli_fn(n, x).unwrap()).abs();
            assert!(err <= bound + 1e-15, "n = {n}, x = {x}: {err} > {bound}");
        }
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (1i64..60, 1i64..30).prop_map(|(n, d)| r(n, d))
}

proptest! {
    #[test]
    fn parity_is_exact(n in 1usize..=8, num in -400i64..400, den in 1i64..64) {
        let periodic = |x: BigRational| {
            let frac = &x - x.floor();
            if n == 1 && frac == BigRational::from_integer(0.into()) {
                return frac;
            }
            bernoulli_poly_exact(n, &frac).unwrap()
        };
        let x = BigRational::new(BigInt::from(num), BigInt::from(den));
        let want = if n % 2 == 0 { periodic(x.clone()) } else { -periodic(x.clone()) };
        prop_assert_eq!(periodic(-x), want);
        let xf = num as f64 / den as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let (a, b) = (bernoulli_fn(n, -xf).unwrap(), sign * bernoulli_fn(n, xf).unwrap());
        prop_assert!((a - b).abs() < 1e-12, "n = {}, x = {}: {} vs {}", n, xf, a, b);
    }

    #[test]
    fn integer_sum_identity(n in 0i64..10_000, d in 1i64..500) {
        let (lhs, rhs) = integer_sum_check(r(n, d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn b1_pair_identity(theta in small_rational(), x in small_rational()) {
        let (lhs, rhs) = b1_pair_sum_check(theta, x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hl_rational_branch(theta in small_rational(), x in small_rational(), a in -3i64..4, b in -3i64..4) {
        let f = move |n: i64| a * n * n + n;
        let g = move |m: i64| b * m + m * m * m;
        prop_assert_eq!(hl_symmetry_residual(theta.into(), x, f, g).unwrap(), 0);
    }

    #[test]
    fn sylvester_rational_branch(theta in small_rational(), x in small_rational()) {
        let (lhs, rhs) = sylvester_sum_check(theta.into(), x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hl_irrational_branch(num in 1i64..500, den in 1i64..7, golden in any::<bool>()) {
        let theta = if golden { QuadSurd::golden_ratio() } else { QuadSurd::sqrt2() };
        let f = |n: i64| n * n - 3 * n;
        let g = |m: i64| 2 * m + m * m;
        prop_assert_eq!(hl_symmetry_residual(theta.into(), r(num, den), f, g).unwrap(), 0);
    }
}
