//! Polynomial JSON: `{"ring": "Q" | "Qt" | "Fp", "p": <prime, Fp only>,
//! "coeffs": [...]}` with coefficients in ascending degree. A `Qt`
//! coefficient is itself an ascending array of rationals in `t`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::is_prime;
use crate::polyring::{FpPoly, Poly};
use crate::scalar::{pretty_poly_over, Qt, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Q(Poly<crate::exactmath::Rational>),
    Qt(Poly<Qt>),
    Fp(FpPoly),
}

pub fn poly_to_json<R: Scalar>(f: &Poly<R>) -> Value {
    json!({
        "ring": R::TAG,
        "coeffs": f.coeffs().iter().map(Scalar::to_json).collect::<Vec<_>>(),
    })
}

fn coeff_array(v: &Value) -> Result<&Vec<Value>> {
    v.get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("polynomial JSON needs a \"coeffs\" array".into()))
}

/// Parses polynomial JSON over a known ring.
pub fn poly_from_json<R: Scalar>(v: &Value) -> Result<Poly<R>> {
    let ring = v.get("ring").and_then(Value::as_str).unwrap_or(R::TAG);
    if ring != R::TAG {
        return Err(Error::Parse(format!("expected ring {}, got {ring}", R::TAG)));
    }
    let coeffs = coeff_array(v)?.iter().map(R::from_json).collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

impl AnyPoly {
    pub fn to_json(&self) -> Value {
        match self {
            AnyPoly::Q(f) => poly_to_json(f),
            AnyPoly::Qt(f) => poly_to_json(f),
            AnyPoly::Fp(f) => json!({"ring": "Fp", "p": f.modulus(), "coeffs": f.coeffs()}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v.get("ring").and_then(Value::as_str) {
            Some("Q") => Ok(AnyPoly::Q(poly_from_json(v)?)),
            Some("Qt") => Ok(AnyPoly::Qt(poly_from_json(v)?)),
            Some("Fp") => {
                let p = v
                    .get("p")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("Fp polynomial needs \"p\"".into()))?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                let coeffs = coeff_array(v)?
                    .iter()
                    .map(|c| {
                        c.as_u64()
                            .filter(|c| *c < p)
                            .ok_or_else(|| Error::Parse(format!("bad F_{p} coefficient {c}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(AnyPoly::Fp(FpPoly::new(p, coeffs)))
            }
            other => Err(Error::Parse(format!("unknown ring {other:?}"))),
        }
    }

    pub fn pretty(&self, var: &str) -> String {
        match self {
            AnyPoly::Q(f) => pretty_poly_over(f, var),
            AnyPoly::Qt(f) => pretty_poly_over(f, var),
            AnyPoly::Fp(f) => {
                let lifted = Poly::new(
                    f.coeffs()
                        .iter()
                        .map(|&c| crate::exactmath::Rational::from_integer(c.into()))
                        .collect(),
                );
                format!("{} (mod {})", pretty_poly_over(&lifted, var), f.modulus())
            }
        }
    }
}

/// Output format for results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Pretty,
}

/// Serializes a result value deterministically.
pub fn emit(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("JSON values serialize"),
        Format::Pretty => {
            let mut out = String::new();
            pretty_value(v, 0, &mut out);
            out
        }
    }
}

/// Indented `key: value` listing, with polynomial objects printed in
/// descending powers.
fn pretty_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                if let Ok(p) = AnyPoly::from_json(item) {
                    out.push_str(&format!("{pad}{k}: {}\n", p.pretty("x")));
                } else if item.is_object() || item.is_array() {
                    out.push_str(&format!("{pad}{k}:\n"));
                    pretty_value(item, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar_text(item)));
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if item.is_object() || item.is_array() {
                    out.push_str(&format!("{pad}-\n"));
                    pretty_value(item, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(item)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
