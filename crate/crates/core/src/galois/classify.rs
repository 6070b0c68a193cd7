use serde::{Deserialize, Serialize};

use crate::curve::WeierstrassCurve;
use crate::divpoly::psi_tilde;
use crate::error::{Error, Result};
use crate::exactmath::{is_square, Rational};
use crate::polyring::{factor_quartic, quartic_galois, QuarticGroup, QuarticSplitting};

use super::lattice::Mod3Label;
use super::probe::{minus_id_probe, MinusIdProbeResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Qualifier {
    Exact,
    /// Rests on a probe that found no witness up to its bound.
    Probable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod3Evidence {
    /// Factorization type of the 3-division polynomial over Q.
    pub factorization: QuarticSplitting,
    pub quartic_group: Option<QuarticGroup>,
    pub probe: Option<MinusIdProbeResult>,
    /// Whether every 3-torsion point is defined over the quadratic field
    /// cut out by the x-coordinates (two rational roots only).
    pub quadratic_field_split: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod3Classification {
    pub label: Mod3Label,
    pub qualifier: Qualifier,
    pub evidence: Mod3Evidence,
}

/// `p + q sqrt(d)` with `d` a non-square.
#[derive(Debug, Clone)]
struct QuadraticElement {
    p: Rational,
    q: Rational,
}

impl QuadraticElement {
    fn add(&self, rhs: &Self) -> Self {
        QuadraticElement {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }

    fn mul(&self, rhs: &Self, d: &Rational) -> Self {
        QuadraticElement {
            p: &self.p * &rhs.p + d * &self.q * &rhs.q,
            q: &self.p * &rhs.q + &self.q * &rhs.p,
        }
    }
}

/// Whether `p + q sqrt(d)` is a square in `Q(sqrt(d))`.
pub fn is_square_in_quadratic_field(p: &Rational, q: &Rational, d: &Rational) -> bool {
    use num_traits::Zero;
    if q.is_zero() {
        return is_square(p).is_some() || is_square(&(p * d)).is_some();
    }
    // (s + t sqrt d)^2 = p + q sqrt d forces s^2 = (p +- sqrt(N)) / 2 with
    // N = p^2 - d q^2 the norm.
    let Some(root) = is_square(&(p * p - d * q * q)) else {
        return false;
    };
    let two = Rational::from_integer(2.into());
    for s2 in [(p + &root) / &two, (p - &root) / &two] {
        let Some(s) = is_square(&s2) else { continue };
        if s.is_zero() {
            continue;
        }
        let t = q / (&two * &s);
        if &s * &s + d * &t * &t == *p && &two * &s * &t == *q {
            return true;
        }
    }
    false
}

/// `(a1 x + a3)^2 + 4 (x^3 + a2 x^2 + a4 x + a6)` at `x` in `Q(sqrt(d))`:
/// the discriminant of the y-quadratic above `x`.
fn y_discriminant(curve: &WeierstrassCurve<Rational>, x: &QuadraticElement, d: &Rational) -> QuadraticElement {
    let f = curve.psi2_squared();
    let mut acc = QuadraticElement {
        p: Rational::from_integer(0.into()),
        q: Rational::from_integer(0.into()),
    };
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x, d).add(&QuadraticElement {
            p: c.clone(),
            q: Rational::from_integer(0.into()),
        });
    }
    acc
}

/// Mod-3 image of a curve over Q, read off from the factorization of the
/// 3-division polynomial, with a Frobenius probe where the factorization
/// alone cannot separate two candidates.
pub fn classify_mod3(curve: &WeierstrassCurve<Rational>, probe_bound: u64) -> Result<Mod3Classification> {
    let psi3 = psi_tilde(curve, 3)?;
    let fact = factor_quartic(&psi3)?;
    let mut evidence = Mod3Evidence {
        factorization: fact.splitting,
        quartic_group: None,
        probe: None,
        quadratic_field_split: None,
    };
    let (label, qualifier) = match fact.splitting {
        QuarticSplitting::Irreducible => {
            let group = quartic_galois(&psi3)?;
            evidence.quartic_group = Some(group);
            let label = match group {
                QuarticGroup::S4 => Mod3Label::GL2F3,
                QuarticGroup::D4 => Mod3Label::SD16,
                QuarticGroup::C4 => Mod3Label::C8,
                QuarticGroup::A4 | QuarticGroup::V4 => {
                    return Err(Error::Inconsistent(format!(
                        "3-division polynomial has Galois group {group:?}, impossible over Q"
                    )))
                }
            };
            (label, Qualifier::Exact)
        }
        QuarticSplitting::TwoQuadratics => (Mod3Label::D8, Qualifier::Exact),
        QuarticSplitting::LinearCubic => {
            let probe = minus_id_probe(curve, 3, probe_bound)?;
            evidence.probe = Some(probe);
            if probe.is_found() {
                (Mod3Label::D12, Qualifier::Exact)
            } else {
                (Mod3Label::S3Borel, Qualifier::Probable)
            }
        }
        QuarticSplitting::TwoLinearOneQuadratic => {
            let quad = &fact.factors[2];
            let (beta, gamma) = (quad.coeff(1), quad.coeff(0));
            let d = &beta * &beta - Rational::from_integer(4.into()) * &gamma;
            let half = Rational::new(1.into(), 2.into());
            let rational_points = fact.roots.iter().map(|r| QuadraticElement {
                p: r.clone(),
                q: Rational::from_integer(0.into()),
            });
            let conjugate_root = QuadraticElement {
                p: -&beta * &half,
                q: half,
            };
            let split = rational_points
                .chain(std::iter::once(conjugate_root))
                .all(|x| {
                    let disc = y_discriminant(curve, &x, &d);
                    is_square_in_quadratic_field(&disc.p, &disc.q, &d)
                });
            evidence.quadratic_field_split = Some(split);
            let probe = minus_id_probe(curve, 3, probe_bound)?;
            evidence.probe = Some(probe);
            if split && probe.is_found() {
                return Err(Error::Inconsistent(
                    "torsion field is quadratic but the probe found -id".into(),
                ));
            }
            (if split { Mod3Label::TwoC2 } else { Mod3Label::V4 }, Qualifier::Exact)
        }
        QuarticSplitting::Linear => {
            return Err(Error::Inconsistent(
                "3-division polynomial splits completely, impossible over Q".into(),
            ))
        }
    };
    Ok(Mod3Classification {
        label,
        qualifier,
        evidence,
    })
}
