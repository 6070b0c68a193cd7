//! Command-line front end.

pub mod corpus;
pub mod json;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::curve::{AnyCurve, LinearFunction, WeierstrassCurve};
use crate::divpoly::{primitive_degree, psi, psi_tilde};
use crate::error::{Error, Result};
use crate::exactmath::{Rational, Valuation};
use crate::galois::{classify_mod3, minus_id_probe, DEFAULT_PROBE_BOUND};
use crate::scalar::Scalar;
use crate::torsionchar::{
    charpoly, charpoly_n2, numeric_root_check, scaling_experiment, valuation_profile, CharPolyResult, Method,
    ValuationCheck,
};

pub use corpus::{run_corpus, run_corpus_file, Corpus, CorpusReport};
pub use json::{emit, poly_from_json, poly_to_json, AnyPoly, Format};

#[derive(Debug, Parser)]
#[command(name = "torsion-galois", version, about = "Division polynomials, torsion characteristic polynomials and mod-3 images of elliptic curves")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Matrix,
    Resultant,
    /// Run both routes and fail unless they agree exactly.
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Division polynomial psi_n, or its primitive part.
    Divpoly {
        /// Weierstrass coefficients "a1,a2,a3,a4,a6", may involve t.
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        n: usize,
        /// Only the factor vanishing at points of exact order n.
        #[arg(long)]
        primitive: bool,
    },
    /// Characteristic polynomial of u = a y + b x + c on the points of exact order n.
    Charpoly {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// "a,b,c"; defaults to y, or to x when n = 2.
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Matrix)]
        method: MethodArg,
        /// Report coefficient valuations at this prime (repeatable).
        #[arg(long = "check-valuation", value_name = "PRIME")]
        check_valuation: Vec<u64>,
        /// Compare against numerically computed torsion points; fail above this relative residual.
        #[arg(long = "numeric-check", value_name = "TOL")]
        numeric_check: Option<f64>,
        /// Include wall-clock timings.
        #[arg(long)]
        timings: bool,
    },
    /// Mod-3 Galois image of a curve over Q.
    #[command(name = "classify-mod3")]
    ClassifyMod3 {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long, default_value_t = DEFAULT_PROBE_BOUND)]
        probe_bound: u64,
    },
    /// Search for a Frobenius witness of -id in the mod-ell image.
    #[command(name = "minus-id")]
    MinusId {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        ell: u64,
        #[arg(long, default_value_t = DEFAULT_PROBE_BOUND)]
        bound: u64,
    },
    /// Valuations of chi_{u,3} for u = L^3 y + L^2 x, L = p^m, on y^2 = x^3 + A x + B.
    #[command(name = "scaling-check")]
    ScalingCheck {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Resultant)]
        method: MethodArg,
    },
    /// Run a corpus file and report per entry.
    Corpus {
        path: PathBuf,
        /// Include wall-clock timings per entry.
        #[arg(long)]
        timings: bool,
    },
}

/// Result of one command: output text and whether all checks passed.
pub struct Outcome {
    pub output: Value,
    pub passed: bool,
}

fn valuation_json(v: Valuation) -> Value {
    match v {
        Valuation::Finite(k) => json!(k),
        Valuation::Infinite => json!("inf"),
    }
}

fn q_curve(coeffs: &str) -> Result<WeierstrassCurve<Rational>> {
    match AnyCurve::parse(coeffs)? {
        AnyCurve::Q(c) => Ok(c),
        AnyCurve::Qt(_) => Err(Error::InvalidArgument("this command needs a curve over Q".into())),
    }
}

fn divpoly_json<R: Scalar>(curve: &WeierstrassCurve<R>, n: usize, primitive: bool) -> Result<Value> {
    if primitive {
        let f = psi_tilde(curve, n)?;
        Ok(json!({
            "n": n,
            "primitive": true,
            "degree": f.degree(),
            "expected_degree": primitive_degree(n as u64)?,
            "poly": poly_to_json(&f),
        }))
    } else {
        let d = psi(curve, n)?;
        Ok(json!({
            "n": n,
            "primitive": false,
            "times_psi2": d.has_psi2,
            "poly": poly_to_json(&d.cofactor),
        }))
    }
}

struct CharpolyArgs<'a> {
    u: Option<&'a str>,
    n: usize,
    method: MethodArg,
    primes: &'a [u64],
    tolerance: Option<f64>,
    timings: bool,
}

fn charpoly_json<R: Scalar>(curve: &WeierstrassCurve<R>, args: &CharpolyArgs<'_>) -> Result<Outcome> {
    let start = Instant::now();
    let mut report = Map::new();
    let mut passed = true;
    let result: CharPolyResult<R> = if args.n == 2 {
        if let Some(u) = args.u {
            if LinearFunction::parse(u)? != LinearFunction::from_i64(0, 1, 0) {
                return Err(Error::InvalidArgument("n = 2 supports only u = x (\"0,1,0\")".into()));
            }
        }
        report.insert("method".into(), json!("psi2"));
        charpoly_n2(curve)
    } else {
        let u = match args.u {
            Some(s) => LinearFunction::parse(s)?,
            None => LinearFunction::y(),
        };
        match args.method {
            MethodArg::Matrix => charpoly(curve, &u, args.n, Method::Matrix)?,
            MethodArg::Resultant => charpoly(curve, &u, args.n, Method::Resultant)?,
            MethodArg::Both => {
                let m = charpoly(curve, &u, args.n, Method::Matrix)?;
                let r = charpoly(curve, &u, args.n, Method::Resultant)?;
                let agree = m.chi == r.chi;
                report.insert("routes_agree".into(), json!(agree));
                passed &= agree;
                m
            }
        }
    };
    if args.n != 2 {
        let method = match args.method {
            MethodArg::Matrix => "matrix",
            MethodArg::Resultant => "resultant",
            MethodArg::Both => "both",
        };
        report.insert("method".into(), json!(method));
    }
    report.insert("degree".into(), json!(result.degree()));
    report.insert("u".into(), json!(result.u.to_coeff_string()));
    report.insert("n".into(), json!(result.n));

    let mut minima = Map::new();
    for &p in args.primes {
        let entry = match valuation_profile(&result, p)? {
            ValuationCheck::Checked(prof) => {
                passed &= prof.passes;
                json!({"min": valuation_json(prof.min), "bound": prof.bound, "passes": prof.passes})
            }
            ValuationCheck::NotApplicable(why) => json!({"not_applicable": why}),
        };
        minima.insert(p.to_string(), entry);
    }
    if !minima.is_empty() {
        report.insert("valuation_min".into(), Value::Object(minima));
    }
    if let Some(tol) = args.tolerance {
        if R::TAG != Rational::TAG || args.n < 3 {
            return Err(Error::InvalidArgument("numeric check needs a curve over Q and n >= 3".into()));
        }
        let q = curve.map(|c| c.specialize(&Rational::from_integer(0.into())))?;
        let chi = result.chi.map(|c| c.as_rational().expect("rational coefficients"));
        let residual = numeric_root_check(&q, &result.u, args.n, &chi)?;
        passed &= residual <= tol;
        report.insert("numeric_residual".into(), json!(residual));
    }
    if args.timings {
        report.insert("elapsed_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
    }
    Ok(Outcome {
        output: json!({"chi": poly_to_json(&result.chi), "report": Value::Object(report)}),
        passed,
    })
}

fn method_of(arg: MethodArg) -> Result<Method> {
    match arg {
        MethodArg::Matrix => Ok(Method::Matrix),
        MethodArg::Resultant => Ok(Method::Resultant),
        MethodArg::Both => Err(Error::InvalidArgument("scaling-check takes a single method".into())),
    }
}

/// Executes a parsed command.
pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Divpoly { curve, n, primitive } => {
            let output = match AnyCurve::parse(curve)? {
                AnyCurve::Q(c) => divpoly_json(&c, *n, *primitive)?,
                AnyCurve::Qt(c) => divpoly_json(&c, *n, *primitive)?,
            };
            Ok(Outcome { output, passed: true })
        }
        Command::Charpoly {
            curve,
            u,
            n,
            method,
            check_valuation,
            numeric_check,
            timings,
        } => {
            let args = CharpolyArgs {
                u: u.as_deref(),
                n: *n,
                method: *method,
                primes: check_valuation,
                tolerance: *numeric_check,
                timings: *timings,
            };
            match AnyCurve::parse(curve)? {
                AnyCurve::Q(c) => charpoly_json(&c, &args),
                AnyCurve::Qt(c) => charpoly_json(&c, &args),
            }
        }
        Command::ClassifyMod3 { curve, probe_bound } => {
            let c = classify_mod3(&q_curve(curve)?, *probe_bound)?;
            Ok(Outcome {
                output: serde_json::to_value(&c)?,
                passed: true,
            })
        }
        Command::MinusId { curve, ell, bound } => {
            let r = minus_id_probe(&q_curve(curve)?, *ell, *bound)?;
            Ok(Outcome {
                output: json!({"ell": ell, "result": serde_json::to_value(r)?}),
                passed: true,
            })
        }
        Command::ScalingCheck {
            curve,
            prime,
            m,
            method,
        } => {
            let prof = scaling_experiment(&q_curve(curve)?, *prime, *m, method_of(*method)?)?;
            let rows: Vec<Value> = prof
                .rows
                .iter()
                .map(|r| json!({"degree": r.degree, "valuation": valuation_json(r.valuation), "bound": r.bound}))
                .collect();
            Ok(Outcome {
                output: json!({
                    "prime": prof.prime,
                    "m": prof.m,
                    "u": prof.u.to_coeff_string(),
                    "rows": rows,
                    "passes": prof.passes,
                }),
                passed: prof.passes,
            })
        }
        Command::Corpus { path, timings } => {
            let report = run_corpus_file(path, *timings)?;
            Ok(Outcome {
                passed: report.ok(),
                output: serde_json::to_value(&report)?,
            })
        }
    }
}

/// Errors caused by bad input rather than by a failed computation.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidArgument(_)
            | Error::Parse(_)
            | Error::NotPrime(_)
            | Error::InadmissibleU(_)
            | Error::SingularCurve
            | Error::Io(_)
    )
}

/// Entry point of the binary. Exit codes: 0 pass, 1 failures, 2 usage error.
pub fn main_with(cli: Cli) -> ExitCode {
    match execute(&cli.command) {
        Ok(outcome) => {
            let text = match (&cli.command, cli.format) {
                (Command::Corpus { .. }, Format::Pretty) => serde_json::from_value::<CorpusReport>(outcome.output)
                    .map(|r| r.pretty())
                    .unwrap_or_default(),
                (_, format) => emit(&outcome.output, format),
            };
            let newline = if text.ends_with('\n') { "" } else { "\n" };
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = write!(std::io::stdout().lock(), "{text}{newline}");
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
