//! Verification of characteristic polynomials: valuation bounds, the
//! scaling experiment and a numeric root oracle.

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::curve::{LinearFunction, WeierstrassCurve};
use crate::divpoly::{prime_power_base, psi_tilde};
use crate::error::{Error, Result};
use crate::exactmath::{is_prime, Rational, Valuation};
use crate::polyring::numeric::{rational_to_f64, relative_residual};
use crate::polyring::{numeric_roots, Poly, RootOptions};
use crate::scalar::Scalar;

use super::charpoly::{charpoly, CharPolyResult, Method};

/// Coefficient valuations of `chi` at a prime and the bound they must meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationProfile {
    pub prime: u64,
    /// Valuation of each coefficient, ascending degree.
    pub valuations: Vec<Valuation>,
    pub min: Valuation,
    /// `-3` when `n` is a power of the prime, else `0`.
    pub bound: i64,
    pub passes: bool,
}

/// Outcome of a valuation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValuationCheck {
    Checked(ValuationProfile),
    /// The curve or `u` lies outside the regime where a bound is claimed.
    NotApplicable(String),
}

/// Coefficient valuations without regime checks.
pub fn coefficient_valuations<R: Scalar>(chi: &Poly<R>, p: u64) -> Vec<Valuation> {
    chi.coeffs().iter().map(|c| c.valuation(p)).collect()
}

/// Valuation bound: `chi_{u,n}` is `l`-integral up to `l^-3` when `n` is a
/// power of `l`, and `l`-integral otherwise, provided the curve is
/// `l`-integral, `a = 1` and `b, c` are in `{0, 1, -1}`.
pub fn valuation_profile<R: Scalar>(result: &CharPolyResult<R>, prime: u64) -> Result<ValuationCheck> {
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    if result.curve.min_valuation(prime) < Valuation::Finite(0) {
        return Ok(ValuationCheck::NotApplicable(format!(
            "curve coefficients are not {prime}-integral"
        )));
    }
    let unit = |q: &Rational| q.is_zero() || q.abs() == Rational::from_integer(1.into());
    let u = &result.u;
    if u.a != Rational::from_integer(1.into()) || !unit(&u.b) || !unit(&u.c) {
        return Ok(ValuationCheck::NotApplicable(
            "u must be y + b x + c with b, c in {0, 1, -1}".into(),
        ));
    }
    let valuations = coefficient_valuations(&result.chi, prime);
    let min = valuations.iter().copied().min().unwrap_or(Valuation::Infinite);
    let bound = if prime_power_base(result.n as u64) == Some(prime) { -3 } else { 0 };
    Ok(ValuationCheck::Checked(ValuationProfile {
        prime,
        passes: min >= Valuation::Finite(bound),
        valuations,
        min,
        bound,
    }))
}

/// One row of the scaling experiment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingRow {
    pub degree: usize,
    pub valuation: Valuation,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingProfile {
    pub prime: u64,
    pub m: u32,
    pub u: LinearFunction,
    pub rows: Vec<ScalingRow>,
    pub passes: bool,
}

/// For `u = L^3 y + L^2 x` with `L = p^m`, checks that the degree-`i`
/// coefficient of `chi_{u,3}` has valuation at least `2m(8 - i)`.
pub fn scaling_experiment(
    curve: &WeierstrassCurve<Rational>,
    prime: u64,
    m: u32,
    method: Method,
) -> Result<ScalingProfile> {
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    if prime == 3 {
        return Err(Error::InvalidArgument("the scaling bound excludes p = 3".into()));
    }
    let [a1, a2, a3, ..] = curve.coefficients();
    if !(a1.is_zero() && a2.is_zero() && a3.is_zero()) {
        return Err(Error::InvalidArgument("scaling experiment needs y^2 = x^3 + A x + B".into()));
    }
    if curve.min_valuation(prime) < Valuation::Finite(0) {
        return Err(Error::NotIntegral(prime));
    }
    let lambda = Rational::from_integer(num_bigint::BigInt::from(prime).pow(m));
    let u = LinearFunction::new(&lambda * &lambda * &lambda, &lambda * &lambda, Rational::zero());
    let result = charpoly(curve, &u, 3, method)?;
    let degree = result.degree();
    let rows: Vec<ScalingRow> = coefficient_valuations(&result.chi, prime)
        .into_iter()
        .enumerate()
        .map(|(i, valuation)| ScalingRow {
            degree: i,
            valuation,
            bound: 2 * m as i64 * (degree - i) as i64,
        })
        .collect();
    let passes = rows.iter().all(|r| r.valuation >= Valuation::Finite(r.bound));
    Ok(ScalingProfile { prime, m, u, rows, passes })
}

/// Largest relative residual of `chi` at the numerically computed values
/// `u(P)`, `P` running over the points of exact order `n`.
pub fn numeric_root_check(
    curve: &WeierstrassCurve<Rational>,
    u: &LinearFunction,
    n: usize,
    chi: &Poly<Rational>,
) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidArgument("numeric check needs n >= 3".into()));
    }
    let xs = numeric_roots(&psi_tilde(curve, n)?, RootOptions::default())?;
    let chi_f: Vec<f64> = chi.coeffs().iter().map(rational_to_f64).collect();
    let [a1, a2, a3, a4, a6] = curve.coefficients().clone().map(|c| rational_to_f64(&c));
    let (ua, ub, uc) = (rational_to_f64(&u.a), rational_to_f64(&u.b), rational_to_f64(&u.c));
    let mut worst = 0.0f64;
    for x in xs {
        // y^2 + B y - C = 0
        let b = x * a1 + a3;
        let c = x * x * x + x * x * a2 + x * a4 + a6;
        let disc = (b * b + c * 4.0).sqrt();
        for y in [(-b + disc) / 2.0, (-b - disc) / 2.0] {
            let value: Complex64 = y * ua + x * ub + uc;
            worst = worst.max(relative_residual(&chi_f, value));
        }
    }
    Ok(worst)
}
