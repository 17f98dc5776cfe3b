use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use frac_autocorr::autocorr::{a_quadrature, a_rational, farey_scan, write_farey_csv, write_farey_svg, QuadratureConfig};
use frac_autocorr::checks::{run_suite, CheckOptions, SuiteSelection};
use frac_autocorr::estermann::{estermann, g0, g1, EstermannPoint};
use frac_autocorr::output::fmt_f64;
use frac_autocorr::periodic_series::lehmer_gamma;
use frac_autocorr::phi::{phi1_rational, phi_resummed};
use frac_autocorr::vasyunin::{vasyunin_cot, write_vtable};
use frac_autocorr::{Error, Rational};

#[derive(Parser)]
#[command(name = "frac-autocorr", version, about = "Autocorrelation of the fractional part and its companions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity.
    Value {
        #[arg(ignore_case = true)]
        quantity: Quantity,
        /// A, phi1, phi2: p/q. V, gamma_rq: p q. E, G0, G1: h/k re [im].
        #[arg(required = true, allow_negative_numbers = true)]
        args: Vec<String>,
        /// Quadrature tolerance for A.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// A(p/q) over a Farey sequence, as CSV.
    ScanFarey {
        #[arg(long)]
        order: u32,
        #[arg(long, default_value = "0")]
        lo: Rational,
        #[arg(long, default_value = "1")]
        hi: Rational,
        #[arg(long)]
        out: PathBuf,
        /// Also write the sweep as an SVG polyline.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run self-check suites.
    Check {
        #[arg(long)]
        suite: SuiteSelection,
        #[arg(long, default_value_t = 200)]
        qmax: i64,
        /// Override every pass threshold.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a table to a file.
    Dump {
        table: DumpTable,
        #[arg(long)]
        qmax: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    #[value(name = "A")]
    A,
    #[value(name = "V")]
    V,
    Phi1,
    Phi2,
    #[value(name = "E")]
    E,
    #[value(name = "G0")]
    G0,
    #[value(name = "G1")]
    G1,
    #[value(name = "gamma_rq")]
    GammaRq,
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpTable {
    Vtable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Eval(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } | Error::NotCoprime { .. } | Error::ZeroDenominator | Error::Strip { .. } => Failure::Usage(e.to_string()),
            other => Failure::Eval(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("cannot parse {what} from {s:?}")))
}

fn arity(args: &[String], n: std::ops::RangeInclusive<usize>, shape: &str) -> Result<(), Failure> {
    if n.contains(&args.len()) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("expected arguments {shape}")))
    }
}

fn print_complex(out: &mut impl Write, name: &str, z: Complex64) -> io::Result<()> {
    writeln!(out, "{name} = {} {} i", fmt_f64(z.re), fmt_f64(z.im))
}

fn value(out: &mut impl Write, quantity: Quantity, args: &[String], tol: f64) -> Result<(), Failure> {
    match quantity {
        Quantity::A => {
            arity(args, 1..=1, "p/q")?;
            let x: Rational = parse(&args[0], "p/q")?;
            let closed = a_rational::<f64>(x.num(), x.den())?;
            let quad = a_quadrature(x, &QuadratureConfig::with_tol(tol)?)?;
            writeln!(out, "A({x}) = {}", fmt_f64(closed))?;
            writeln!(out, "quadrature = {} +- {}", fmt_f64(quad.value), fmt_f64(quad.err))?;
            writeln!(out, "agreement = {}", fmt_f64((closed - quad.value).abs()))?;
        }
        Quantity::V => {
            arity(args, 2..=2, "p q")?;
            let (p, q): (i64, i64) = (parse(&args[0], "p")?, parse(&args[1], "q")?);
            writeln!(out, "V({p},{q}) = {}", fmt_f64(vasyunin_cot::<f64>(p, q)?))?;
        }
        Quantity::Phi1 => {
            arity(args, 1..=1, "p/q")?;
            let x: Rational = parse(&args[0], "p/q")?;
            writeln!(out, "phi1({x}) = {}", fmt_f64(phi1_rational::<f64>(x.num(), x.den())?))?;
        }
        Quantity::Phi2 => {
            arity(args, 1..=1, "p/q")?;
            let x: Rational = parse(&args[0], "p/q")?;
            let v = phi_resummed(2, x)?;
            writeln!(out, "phi2({x}) = {} +- {}", fmt_f64(v.value), fmt_f64(v.err))?;
        }
        Quantity::E | Quantity::G0 | Quantity::G1 => {
            arity(args, 2..=3, "h/k re [im]")?;
            let hk: Rational = parse(&args[0], "h/k")?;
            let re: f64 = parse(&args[1], "Re s")?;
            let im: f64 = args.get(2).map(|a| parse(a, "Im s")).transpose()?.unwrap_or(0.0);
            let pt = EstermannPoint::new(Complex64::new(re, im), hk.num(), hk.den())?;
            let (name, f): (&str, fn(EstermannPoint) -> frac_autocorr::Result<Complex64>) = match quantity {
                Quantity::E => ("E", estermann),
                Quantity::G0 => ("G0", g0),
                _ => ("G1", g1),
            };
            match f(pt) {
                Ok(z) => print_complex(out, name, z)?,
                Err(Error::PoleWithLaurent(data)) => {
                    writeln!(out, "{name} has a pole at {}", data.location)?;
                    for &(order, c) in &data.coefficients {
                        print_complex(out, &format!("  a[{order}]"), c)?;
                    }
                }
                Err(e) => return Err(e.into()),
            }
        }
        Quantity::GammaRq => {
            arity(args, 2..=2, "r q")?;
            let (r, q): (i64, i64) = (parse(&args[0], "r")?, parse(&args[1], "q")?);
            writeln!(out, "gamma({r},{q}) = {}", fmt_f64(lehmer_gamma(r, q)?))?;
        }
    }
    Ok(())
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, Failure> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Ok(true) when every check passed.
fn run(cli: Cli) -> Result<bool, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Value { quantity, args, tol } => value(&mut out, quantity, &args, tol)?,
        Command::ScanFarey { order, lo, hi, out: path, svg } => {
            let records = farey_scan(order, lo, hi)?;
            write_farey_csv(create(&path)?, &records)?;
            if let Some(svg) = svg {
                write_farey_svg(create(&svg)?, &records)?;
            }
            writeln!(out, "rows = {}", records.len())?;
        }
        Command::Check { suite, qmax, tol, seed, format } => {
            let opts = CheckOptions { qmax, tol, seed };
            let mut outcomes = Vec::new();
            for &s in suite.0 {
                outcomes.extend(run_suite(s, &opts)?);
            }
            let failures: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
            match format {
                Format::Text => {
                    for o in &outcomes {
                        let tag = if o.passed { "PASS" } else { "FAIL" };
                        writeln!(out, "{tag} {}.{} measured={} limit={}", o.suite, o.check, fmt_f64(o.measured), fmt_f64(o.limit))?;
                    }
                    if !failures.is_empty() {
                        writeln!(out, "{}", serde_json::json!({ "failures": failures }))?;
                    }
                }
                Format::Json => writeln!(out, "{}", serde_json::json!({ "checks": outcomes, "failures": failures }))?,
            }
            return Ok(failures.is_empty());
        }
        Command::Dump { table: DumpTable::Vtable, qmax, out: path } => {
            if qmax < 1 {
                return Err(Failure::Usage("--qmax must be at least 1".into()));
            }
            write_vtable(create(&path)?, qmax)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("FRAC_AUTOCORR_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a global pool can only be installed once; failure leaves the default
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Eval(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
