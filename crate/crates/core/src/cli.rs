//! The `ideal-svp-lab` command line. Every subcommand writes one JSON
//! document (or CSV rows for `experiment --format csv`) to standard output.
//!
//! Exit codes: 0 success, 2 bad input, 3 enumeration cap exceeded,
//! 1 anything else.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cyclo::{CycloParams, IdealLattice, IdealRecord, RingElement};
use crate::error::{Error, Result};
use crate::experiment::{run_experiment, write_csv, Distribution, ExperimentConfig};
use crate::factor::{factor_cyclotomic, factor_shape, split_params, FactorizationRecord};
use crate::lattice::parse_basis;
use crate::modp::PrimeModulus;
use crate::svp::{classify, hermite_reduction_factor, ramified_two_svp, solve_ideal_svp, solve_prime_svp, SvpConfig};

#[derive(Parser, Debug)]
#[command(name = "ideal-svp-lab", version, about = "Ideal lattices in Z[x]/(x^(2^n)+1): factorization, classes and shortest vectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RingPrime {
    /// Ring parameter: N = 2^n.
    #[arg(long)]
    n: u32,
    /// Rational prime.
    #[arg(long)]
    p: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^(2^n) + 1 over F_p.
    Factor(RingPrime),
    /// Class r of the primes above p and whether p is in the easy class.
    Classify(RingPrime),
    /// Shortest vector of the prime ideal (p, f) for one factor f.
    SvpPrime {
        #[command(flatten)]
        rp: RingPrime,
        #[arg(long, default_value_t = 0)]
        factor_index: usize,
    },
    /// Shortest vector of an arbitrary ideal by subring search.
    SvpIdeal(SvpIdealArgs),
    /// Sample primes or prime ideals and report class frequencies.
    Experiment(ExperimentArgs),
    /// Hermite-SVP loss factor sqrt(N/g) / (disc_L / disc_K^(N/g))^(1/(2N)).
    HermiteBound {
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        disc_l: String,
        #[arg(long)]
        disc_k: String,
    },
}

#[derive(Args, Debug)]
struct SvpIdealArgs {
    #[arg(long)]
    n: u32,
    /// Basis file: a line with N, then N rows of N integers.
    #[arg(long, conflicts_with_all = ["gens", "p", "f"])]
    basis: Option<PathBuf>,
    /// Generators separated by ';', each as comma-separated coefficients
    /// from the constant term up.
    #[arg(long, conflicts_with_all = ["p", "f"], allow_hyphen_values = true)]
    gens: Option<String>,
    #[arg(long, requires = "f")]
    p: Option<String>,
    /// Comma-separated coefficients from the constant term up.
    #[arg(long, requires = "p", allow_hyphen_values = true)]
    f: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// 1: uniform primes; 2: uniform prime ideals.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    dist: u8,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m_bound: u64,
    #[arg(long)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Leave p = 2 out of the support.
    #[arg(long)]
    exclude_two: bool,
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
}

fn parse_poly(s: &str) -> Result<Vec<BigInt>> {
    s.split(',').map(parse_int).collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        _ if e.is_cap() => 3,
        Error::Cancelled | Error::Invariant(_) => 1,
        _ => 2,
    }
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), Value::from(crate::SCHEMA));
    }
    v
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut base, extra) {
        a.extend(b);
    }
    base
}

enum Output {
    Json(Value),
    Text(String),
}

fn execute(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Factor(rp) => {
            let p = PrimeModulus::parse(&rp.p)?;
            let res = factor_cyclotomic(rp.n, &p)?;
            Ok(Output::Json(to_value(&FactorizationRecord::from(&res))?))
        }
        Command::Classify(rp) => {
            let p = PrimeModulus::parse(&rp.p)?;
            CycloParams::new(rp.n)?;
            let (r, easy) = classify(rp.n, &p);
            let (g, degree, e, family) = factor_shape(rp.n, &p);
            let sp = split_params(&p).ok();
            Ok(Output::Json(with_schema(json!({
                "n": rp.n,
                "p": p.to_string(),
                "r": r,
                "easy": easy,
                "reducible": r < rp.n,
                "g": g,
                "degree": degree,
                "e": e,
                "family": family,
                "sign": sp.as_ref().map(|s| s.sign),
                "A": sp.as_ref().map(|s| s.a),
            }))))
        }
        Command::SvpPrime { rp, factor_index } => {
            let p = PrimeModulus::parse(&rp.p)?;
            let fact = factor_cyclotomic(rp.n, &p)?;
            let f = fact.factors.get(factor_index).ok_or_else(|| {
                Error::Input(format!("factor index {factor_index} out of range 0..{}", fact.factors.len()))
            })?;
            let res = if p.is_two() {
                ramified_two_svp(rp.n)?
            } else {
                solve_prime_svp(rp.n, &p, &f.to_bigints(), &SvpConfig::from_env()?)?
            };
            let head = json!({
                "n": rp.n,
                "p": p.to_string(),
                "factor_index": factor_index,
                "factor": f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            Ok(Output::Json(with_schema(merge(head, to_value(&res)?))))
        }
        Command::SvpIdeal(a) => {
            let params = CycloParams::new(a.n)?;
            let record = if let Some(path) = &a.basis {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
                let ideal = IdealLattice::from_basis(params, &parse_basis(&text)?)?;
                IdealRecord::basis(&ideal)
            } else if let Some(gens) = &a.gens {
                let gens = gens
                    .split(';')
                    .map(|g| parse_poly(g).map(|v| RingElement::from_poly(params, &v)))
                    .collect::<Result<Vec<_>>>()?;
                IdealRecord::generators(a.n, &gens)
            } else if let (Some(p), Some(f)) = (&a.p, &a.f) {
                IdealRecord::two_element(a.n, &PrimeModulus::parse(p)?, &parse_poly(f)?)
            } else {
                return Err(Error::Input("give one of --basis, --gens, or --p with --f".into()));
            };
            let ideal = record.to_ideal()?;
            let res = solve_ideal_svp(&ideal, &SvpConfig::from_env()?)?;
            let head = json!({
                "n": a.n,
                "norm": crate::json::value(&ideal.norm()),
                "ideal": to_value(&record)?,
            });
            Ok(Output::Json(with_schema(merge(head, to_value(&res)?))))
        }
        Command::Experiment(a) => {
            let distribution = if a.dist == 1 { Distribution::D1 } else { Distribution::D2 };
            let mut cfg = ExperimentConfig::new(distribution, a.n, a.m_bound, a.samples, a.seed);
            cfg.include_two = !a.exclude_two;
            let report = run_experiment(&cfg)?;
            match a.format {
                OutputFormat::Json => Ok(Output::Json(to_value(&report)?)),
                OutputFormat::Csv => {
                    let mut buf = Vec::new();
                    write_csv(&report, &mut buf)?;
                    Ok(Output::Text(String::from_utf8(buf).expect("csv is utf-8")))
                }
            }
        }
        Command::HermiteBound { degree, g, disc_l, disc_k } => {
            let rep = hermite_reduction_factor(degree, g, &parse_int(&disc_l)?, &parse_int(&disc_k)?)?;
            Ok(Output::Json(with_schema(to_value(&rep)?)))
        }
    }
}

/// Run the CLI on `args` (including the program name); returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let usage = Cli::command().render_usage();
                let _ = write!(err, "{text}\n{usage}\n");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(Output::Json(v)) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON value serializes"));
            0
        }
        Ok(Output::Text(t)) => {
            let _ = write!(out, "{t}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
