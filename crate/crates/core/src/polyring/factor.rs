//! Exact rational roots and factorization of quartics over Q.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{is_square, positive_divisors, Integer, Rational};

use super::poly::Poly;
use super::resultant::discriminant_q;

type Q = Poly<Rational>;

/// Rational roots of `f` with multiplicity, ascending.
pub fn rational_roots(f: &Q) -> Result<Vec<(Rational, usize)>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("rational roots of the zero polynomial".into()));
    }
    let mut rest = f.clone();
    let mut out = Vec::new();
    let zero_mult = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        out.push((Rational::zero(), zero_mult));
        rest = Poly::new(rest.coeffs()[zero_mult..].to_vec());
    }
    if rest.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let ints = clear_denominators(&rest);
    let lead = ints.last().expect("nonzero").clone();
    let constant = ints[0].clone();
    let mut candidates = Vec::new();
    let qs = positive_divisors(&lead);
    for p in positive_divisors(&constant) {
        for q in &qs {
            let r = Rational::new(p.clone(), q.clone());
            candidates.push(-r.clone());
            candidates.push(r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        let lin = Poly::new(vec![-r.clone(), Rational::one()]);
        let mut mult = 0;
        loop {
            let (quot, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            mult += 1;
        }
        if mult > 0 {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Integer coefficients of a positive rational multiple of `f`, with
/// content removed.
pub fn clear_denominators(f: &Q) -> Vec<Integer> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Integer> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Degree pattern of the factorization of a quartic over Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuarticSplitting {
    #[serde(rename = "1,1,1,1")]
    Linear,
    #[serde(rename = "1,1,2")]
    TwoLinearOneQuadratic,
    #[serde(rename = "2,2")]
    TwoQuadratics,
    #[serde(rename = "1,3")]
    LinearCubic,
    #[serde(rename = "4")]
    Irreducible,
}

impl QuarticSplitting {
    /// Factor degrees, ascending.
    pub fn degrees(self) -> &'static [usize] {
        match self {
            QuarticSplitting::Linear => &[1, 1, 1, 1],
            QuarticSplitting::TwoLinearOneQuadratic => &[1, 1, 2],
            QuarticSplitting::TwoQuadratics => &[2, 2],
            QuarticSplitting::LinearCubic => &[1, 3],
            QuarticSplitting::Irreducible => &[4],
        }
    }
}

/// Complete factorization of a squarefree quartic into monic irreducibles.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticFactorization {
    pub splitting: QuarticSplitting,
    /// Monic irreducible factors, by ascending degree; linear factors
    /// ordered by root.
    pub factors: Vec<Q>,
    /// The rational roots, ascending.
    pub roots: Vec<Rational>,
}

fn monic_coeffs(f: &Q) -> Result<[Rational; 4]> {
    if f.degree() != Some(4) {
        return Err(Error::InvalidArgument(format!(
            "expected a quartic, got degree {:?}",
            f.degree()
        )));
    }
    let m = f.monic();
    Ok([m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0)])
}

/// Resolvent cubic of monic `x^4 + a x^3 + b x^2 + c x + d`, whose roots
/// are `r1 r2 + r3 r4` and its conjugates.
pub fn resolvent_cubic(f: &Q) -> Result<Q> {
    let [a, b, c, d] = monic_coeffs(f)?;
    let four = Rational::from_integer(4.into());
    Ok(Poly::new(vec![
        -(&a * &a * &d - &four * &b * &d + &c * &c),
        &a * &c - &four * &d,
        -b,
        Rational::one(),
    ]))
}

/// Roots of `z^2 - s z + p` if rational.
fn quadratic_roots(s: &Rational, p: &Rational) -> Option<(Rational, Rational)> {
    let two = Rational::from_integer(2.into());
    let disc = s * s - Rational::from_integer(4.into()) * p;
    let root = is_square(&disc)?;
    Some(((s - &root) / &two, (s + &root) / &two))
}

/// Splits a rootless monic quartic into two rational quadratics if possible.
fn split_two_quadratics(f: &Q) -> Result<Option<(Q, Q)>> {
    let [a, b, c, d] = monic_coeffs(f)?;
    for (theta, _) in rational_roots(&resolvent_cubic(f)?)? {
        let Some((q, u)) = quadratic_roots(&theta, &d) else {
            continue;
        };
        let candidates: Vec<(Rational, Rational)> = if q != u {
            let p = (&c - &a * &q) / (&u - &q);
            vec![(p.clone(), &a - &p)]
        } else {
            if c != &a * &q {
                continue;
            }
            let two = Rational::from_integer(2.into());
            match quadratic_roots(&a, &(&b - &two * &q)) {
                Some((p, s)) => vec![(p, s)],
                None => continue,
            }
        };
        for (p, s) in candidates {
            let g = Poly::new(vec![q.clone(), p, Rational::one()]);
            let h = Poly::new(vec![u.clone(), s, Rational::one()]);
            if g.mul(&h) == f.monic() {
                let (g, h) = if g.coeffs() <= h.coeffs() { (g, h) } else { (h, g) };
                return Ok(Some((g, h)));
            }
        }
    }
    Ok(None)
}

/// Factorization type of a squarefree quartic over Q.
pub fn factor_quartic(f: &Q) -> Result<QuarticFactorization> {
    monic_coeffs(f)?;
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let f = f.monic();
    let roots: Vec<Rational> = rational_roots(&f)?.into_iter().map(|(r, _)| r).collect();
    let mut residue = f.clone();
    let mut factors = Vec::new();
    for r in &roots {
        let lin = Poly::new(vec![-r.clone(), Rational::one()]);
        residue = residue.div_rem(&lin).0;
        factors.push(lin);
    }
    let splitting = match residue.degree() {
        Some(0) => QuarticSplitting::Linear,
        Some(2) => {
            factors.push(residue);
            QuarticSplitting::TwoLinearOneQuadratic
        }
        Some(3) => {
            factors.push(residue);
            QuarticSplitting::LinearCubic
        }
        Some(4) => match split_two_quadratics(&residue)? {
            Some((g, h)) => {
                factors.push(g);
                factors.push(h);
                QuarticSplitting::TwoQuadratics
            }
            None => {
                factors.push(residue);
                QuarticSplitting::Irreducible
            }
        },
        other => {
            return Err(Error::Internal(format!(
                "quartic residue of degree {other:?} after removing rational roots"
            )))
        }
    };
    Ok(QuarticFactorization {
        splitting,
        factors,
        roots,
    })
}

/// Galois group of an irreducible quartic, as a transitive subgroup of S4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuarticGroup {
    S4,
    A4,
    D4,
    C4,
    V4,
}

/// Whether a quadratic of discriminant `d1` splits over `Q(sqrt(delta))`.
fn splits_over_quadratic_field(d1: &Rational, delta: &Rational) -> bool {
    is_square(d1).is_some() || is_square(&(d1 * delta)).is_some()
}

/// Galois group of an irreducible quartic via its resolvent cubic.
pub fn quartic_galois(f: &Q) -> Result<QuarticGroup> {
    let fact = factor_quartic(f)?;
    if fact.splitting != QuarticSplitting::Irreducible {
        return Err(Error::InvalidArgument(format!(
            "quartic is reducible ({:?})",
            fact.splitting.degrees()
        )));
    }
    let [a, b, _, d] = monic_coeffs(f)?;
    let delta = discriminant_q(&f.monic())?;
    let roots = rational_roots(&resolvent_cubic(f)?)?;
    let four = Rational::from_integer(4.into());
    Ok(match roots.len() {
        0 if is_square(&delta).is_some() => QuarticGroup::A4,
        0 => QuarticGroup::S4,
        1 => {
            let theta = &roots[0].0;
            let d1 = theta * theta - &four * &d;
            let d2 = &a * &a - &four * (&b - theta);
            if splits_over_quadratic_field(&d1, &delta) && splits_over_quadratic_field(&d2, &delta) {
                QuarticGroup::C4
            } else {
                QuarticGroup::D4
            }
        }
        _ => QuarticGroup::V4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use crate::polyring::fp::mod_p_degree_pattern;
    use proptest::prelude::*;

    fn q(cs: &[i64]) -> Q {
        Q::from_i64s(cs)
    }

    fn roots_only(f: &Q) -> Vec<Rational> {
        rational_roots(f).unwrap().into_iter().map(|(r, _)| r).collect()
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(roots_only(&q(&[-1, 0, 1])), vec![int(-1), int(1)]);
        assert_eq!(roots_only(&q(&[0, 3, 0, 0, 3])), vec![int(-1), int(0)]);
        assert!(roots_only(&q(&[1, 0, 1])).is_empty());
        // (2x - 3)^2 (x + 1/5)
        let f = q(&[-3, 2]).pow(2).mul(&Poly::new(vec![rat(1, 5), int(1)]));
        assert_eq!(rational_roots(&f).unwrap(), vec![(rat(-1, 5), 1), (rat(3, 2), 2)]);
        assert_eq!(rational_roots(&q(&[0, 0, 1])).unwrap(), vec![(int(0), 2)]);
        assert!(rational_roots(&Q::zero()).is_err());
    }

    #[test]
    fn factor_examples() {
        let f = q(&[1, 0, 1]).mul(&q(&[2, 0, 1]));
        let fact = factor_quartic(&f).unwrap();
        assert_eq!(fact.splitting, QuarticSplitting::TwoQuadratics);
        assert_eq!(fact.factors, vec![q(&[1, 0, 1]), q(&[2, 0, 1])]);

        assert_eq!(
            factor_quartic(&q(&[1, 1, 0, 0, 1])).unwrap().splitting,
            QuarticSplitting::Irreducible
        );
        assert_eq!(
            factor_quartic(&q(&[0, 3, 0, 0, 3])).unwrap().splitting,
            QuarticSplitting::TwoLinearOneQuadratic
        );
        assert_eq!(
            factor_quartic(&q(&[24, -50, 35, -10, 1])).unwrap().splitting,
            QuarticSplitting::Linear
        );
        assert!(matches!(
            factor_quartic(&q(&[1, 0, 1]).pow(2)),
            Err(Error::NotSquarefree)
        ));
        assert!(factor_quartic(&q(&[1, 0, 1])).is_err());
    }

    #[test]
    fn psi3_of_borel_curve_has_one_rational_root() {
        // y^2 + xy = x^3 - 4/13: b2 = 1, b4 = 0, b6 = -16/13, b8 = -4/13
        let psi3 = Poly::new(vec![rat(-4, 13), rat(-48, 13), int(0), int(1), int(3)]);
        let fact = factor_quartic(&psi3).unwrap();
        assert_eq!(fact.splitting, QuarticSplitting::LinearCubic);
        assert_eq!(fact.roots.len(), 1);
    }

    #[test]
    fn equal_roots_in_resolvent_quadratic() {
        // (x^2 + x + 2)(x^2 - x + 2): q = u = 2
        let f = q(&[2, 1, 1]).mul(&q(&[2, -1, 1]));
        let fact = factor_quartic(&f).unwrap();
        assert_eq!(fact.splitting, QuarticSplitting::TwoQuadratics);
        assert_eq!(fact.factors[0].mul(&fact.factors[1]), f);
    }

    #[test]
    fn galois_examples() {
        assert_eq!(quartic_galois(&q(&[1, 1, 0, 0, 1])).unwrap(), QuarticGroup::S4);
        assert_eq!(quartic_galois(&q(&[1, 0, 0, 0, 1])).unwrap(), QuarticGroup::V4);
        assert_eq!(quartic_galois(&q(&[1, 1, 1, 1, 1])).unwrap(), QuarticGroup::C4);
        assert_eq!(quartic_galois(&q(&[-2, 0, 0, 0, 1])).unwrap(), QuarticGroup::D4);
        // x^4 + 8x + 12 has group A4
        assert_eq!(quartic_galois(&q(&[12, 8, 0, 0, 1])).unwrap(), QuarticGroup::A4);
        assert!(quartic_galois(&q(&[1, 0, 1]).mul(&q(&[2, 0, 1]))).is_err());
    }

    #[test]
    fn s4_sees_both_four_and_one_three_patterns() {
        let f = q(&[1, 1, 0, 0, 1]);
        let pats: Vec<Vec<usize>> = crate::exactmath::primes_up_to(200)
            .into_iter()
            .filter_map(|p| mod_p_degree_pattern(&f, p).unwrap().ok())
            .collect();
        assert!(pats.contains(&vec![4]));
        assert!(pats.contains(&vec![1, 3]));
    }

    proptest! {
        #[test]
        fn galois_invariant_under_translation(c in -4i64..5,
                                              cs in prop::collection::vec(-6i64..7, 4)) {
            let mut coeffs = cs.clone();
            coeffs.push(1);
            let f = q(&coeffs);
            let g = f.compose(&q(&[c, 1]));
            let (a, b) = (quartic_galois(&f), quartic_galois(&g));
            match (a, b) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(_), Err(_)) => {}
                other => prop_assert!(false, "mismatch {:?}", other),
            }
        }

        #[test]
        fn factorization_multiplies_back(cs in prop::collection::vec(-6i64..7, 4)) {
            let mut coeffs = cs.clone();
            coeffs.push(1);
            let f = q(&coeffs);
            prop_assume!(f.is_squarefree());
            let fact = factor_quartic(&f).unwrap();
            let prod = fact.factors.iter().fold(Q::one(), |acc, g| acc.mul(g));
            prop_assert_eq!(prod, f);
            let degs: Vec<usize> = {
                let mut d: Vec<usize> = fact.factors.iter().map(|g| g.degree().unwrap()).collect();
                d.sort_unstable();
                d
            };
            prop_assert_eq!(degs.as_slice(), fact.splitting.degrees());
        }

        #[test]
        fn planted_roots_are_found(roots in prop::collection::vec((-9i64..10, 1i64..5), 1..4)) {
            let mut f = q(&[1, 0, 1]);
            for &(n, d) in &roots {
                f = f.mul(&Poly::new(vec![rat(-n, d), int(1)]));
            }
            let found = roots_only(&f);
            for &(n, d) in &roots {
                prop_assert!(found.contains(&rat(n, d)));
            }
        }
    }
}
