#![allow(dead_code)]

use serde_json::Value;

pub fn golden(name: &str) -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/calibration.json");
    let text = std::fs::read_to_string(path).expect("golden calibration file");
    let v: Value = serde_json::from_str(&text).expect("valid json");
    v.get(name).unwrap_or_else(|| panic!("missing golden key {name}")).clone()
}

pub fn golden_f64(name: &str) -> f64 {
    golden(name).as_f64().expect("numeric golden value")
}

/// Least-squares slope of log y against log x.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.ln())).unzip();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
