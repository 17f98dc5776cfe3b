use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frac-autocorr")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("frac-autocorr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn value_a_reports_both_paths() {
    let out = run(&["value", "A", "1/2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let first = text.lines().next().unwrap();
    let v: f64 = first.strip_prefix("A(1/2) = ").unwrap().parse().unwrap();
    assert!((v - 0.7722092560).abs() < 1e-9, "{text}");
    let agreement: f64 = text.lines().find_map(|l| l.strip_prefix("agreement = ")).unwrap().parse().unwrap();
    assert!(agreement < 1e-9);
}

#[test]
fn value_quantities() {
    for (args, prefix) in [
        (&["value", "V", "1", "3"][..], "V(1,3) = -0.19245"),
        (&["value", "phi1", "1/3"], "phi1(1/3) = "),
        (&["value", "phi2", "1/3"], "phi2(1/3) = "),
        (&["value", "E", "1/3", "0.5", "2"], "E = "),
        (&["value", "G0", "1/3", "0.5"], "G0 = "),
        (&["value", "G1", "1/3", "-1", "0.5"], "G1 = "),
        (&["value", "gamma_rq", "1", "3"], "gamma(1,3) = "),
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).starts_with(prefix), "{args:?}: {}", stdout(&out));
    }
    let pole = stdout(&run(&["value", "E", "0/1", "1"]));
    assert!(pole.contains("pole") && pole.contains("a[-2] = 1 0 i"), "{pole}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["value", "A"][..],
        &["value", "zeta", "1/2"],
        &["value", "A", "x"],
        &["value", "V", "2", "4"],
        &["check", "--suite", "nope"],
        &["bogus"],
        &["scan-farey", "--order", "3"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn check_reports_and_fails_with_exit_one() {
    let out = run(&["check", "--suite", "vasyunin", "--qmax", "30"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS vasyunin.three_way_over_q"));

    let out = run(&["check", "--suite", "vasyunin", "--qmax", "30", "--tol", "1e-30", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["failures"][0]["check"], "three_way_over_q");
    assert_eq!(report["failures"][0]["passed"], false);
}

#[test]
fn scan_farey_is_deterministic() {
    let (a, b, svg) = (scratch("a.csv"), scratch("b.csv"), scratch("f.svg"));
    let out = run(&["scan-farey", "--order", "40", "--out", a.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let n = 1 + (1..=40u64).map(|q| (1..=q).filter(|&p| num_integer::gcd(p, q) == 1).count()).sum::<usize>();
    assert_eq!(stdout(&out).trim(), format!("rows = {n}"));
    let out = Command::new(env!("CARGO_BIN_EXE_frac-autocorr"))
        .args(["scan-farey", "--order", "40", "--out", b.to_str().unwrap()])
        .env("FRAC_AUTOCORR_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    assert!(!x.contains(&b'\r'));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<polyline"));

    let half = scratch("half.csv");
    assert!(run(&["scan-farey", "--order", "5", "--lo", "1/2", "--hi", "1", "--out", half.to_str().unwrap()]).status.success());
    let text = std::fs::read_to_string(&half).unwrap();
    let lambdas: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(lambdas.len(), 6);
    assert_eq!(lambdas[0], "0.5");
}

#[test]
fn dump_vtable() {
    let path = scratch("v.csv");
    assert!(run(&["dump", "vtable", "--qmax", "7", "--out", path.to_str().unwrap()]).status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("q,p,V"));
    let n: usize = (1..=7u64).map(|q| (0..q).filter(|&p| num_integer::gcd(p, q) == 1).count()).sum();
    assert_eq!(lines.count(), n);
    assert_eq!(run(&["dump", "vtable", "--qmax", "0", "--out", path.to_str().unwrap()]).status.code(), Some(2));
}
