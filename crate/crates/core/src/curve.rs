//! Long Weierstrass curves
//! `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6` over `Q` or `Q[t]`.

use std::fmt;


use crate::error::{Error, Result};
use crate::exactmath::{is_prime, mul_mod, parse_rational, Rational, Valuation};
use crate::polyring::fp::reduce_rational;
use crate::polyring::{Poly, Ring};
use crate::scalar::{Qt, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve<R> {
    a: [R; 5],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BInvariants<R> {
    pub b2: R,
    pub b4: R,
    pub b6: R,
    pub b8: R,
}

/// `u = a*y + b*x + c` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFunction {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

/// Change of variables `x = mu^2 x' + r`, `y = mu^3 y' + mu^2 s x' + t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableChange<R> {
    pub mu: Rational,
    pub r: R,
    pub s: R,
    pub t: R,
}

impl<R: Scalar> WeierstrassCurve<R> {
    /// Checked constructor; rejects singular equations.
    pub fn new(a1: R, a2: R, a3: R, a4: R, a6: R) -> Result<Self> {
        let curve = WeierstrassCurve { a: [a1, a2, a3, a4, a6] };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn from_array(a: [R; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a;
        Self::new(a1, a2, a3, a4, a6)
    }

    /// `y^2 = x^3 + A x + B`.
    pub fn short(a4: R, a6: R) -> Result<Self> {
        Self::new(R::zero(), R::zero(), R::zero(), a4, a6)
    }

    pub fn a1(&self) -> &R {
        &self.a[0]
    }
    pub fn a2(&self) -> &R {
        &self.a[1]
    }
    pub fn a3(&self) -> &R {
        &self.a[2]
    }
    pub fn a4(&self) -> &R {
        &self.a[3]
    }
    pub fn a6(&self) -> &R {
        &self.a[4]
    }

    /// `[a1, a2, a3, a4, a6]`.
    pub fn coefficients(&self) -> &[R; 5] {
        &self.a
    }

    pub fn b_invariants(&self) -> BInvariants<R> {
        let [a1, a2, a3, a4, a6] = &self.a;
        let c = |k: i64| R::from_i64(k);
        let b2 = a1.mul(a1).add(&c(4).mul(a2));
        let b4 = c(2).mul(a4).add(&a1.mul(a3));
        let b6 = a3.mul(a3).add(&c(4).mul(a6));
        let b8 = a1
            .mul(a1)
            .mul(a6)
            .add(&c(4).mul(a2).mul(a6))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(a3).mul(a3))
            .sub(&a4.mul(a4));
        BInvariants { b2, b4, b6, b8 }
    }

    pub fn discriminant(&self) -> R {
        let BInvariants { b2, b4, b6, b8 } = self.b_invariants();
        let c = |k: i64| R::from_i64(k);
        b2.mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&c(8).mul(&b4.pow(3)))
            .sub(&c(27).mul(&b6.mul(&b6)))
            .add(&c(9).mul(&b2).mul(&b4).mul(&b6))
    }

    /// `psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6`.
    pub fn psi2_squared(&self) -> Poly<R> {
        let BInvariants { b2, b4, b6, .. } = self.b_invariants();
        Poly::new(vec![b6, R::from_i64(2).mul(&b4), b2, R::from_i64(4)])
    }

    /// Right-hand side `x^3 + a2 x^2 + a4 x + a6`.
    pub fn cubic(&self) -> Poly<R> {
        Poly::new(vec![self.a[4].clone(), self.a[3].clone(), self.a[1].clone(), R::one()])
    }

    /// `a1 x + a3`, the coefficient of `y` on the left-hand side.
    pub fn y_linear_coeff(&self) -> Poly<R> {
        Poly::new(vec![self.a[2].clone(), self.a[0].clone()])
    }

    /// Applies a standard change of variables.
    pub fn change_variables(&self, ch: &VariableChange<R>) -> Result<Self> {
        if ch.mu.is_zero() {
            return Err(Error::InvalidArgument("change of variables with mu = 0".into()));
        }
        let [a1, a2, a3, a4, a6] = &self.a;
        let (r, s, t) = (&ch.r, &ch.s, &ch.t);
        let c = |k: i64| R::from_i64(k);
        let inv = ch.mu.recip();
        let inv_pow = |k: i32| {
            let mut acc = Rational::one();
            for _ in 0..k {
                acc *= &inv;
            }
            acc
        };
        let n1 = a1.add(&c(2).mul(s));
        let n2 = a2.sub(&s.mul(a1)).add(&c(3).mul(r)).sub(&s.mul(s));
        let n3 = a3.add(&r.mul(a1)).add(&c(2).mul(t));
        let n4 = a4
            .sub(&s.mul(a3))
            .add(&c(2).mul(r).mul(a2))
            .sub(&t.add(&r.mul(s)).mul(a1))
            .add(&c(3).mul(r).mul(r))
            .sub(&c(2).mul(s).mul(t));
        let n6 = a6
            .add(&r.mul(a4))
            .add(&r.mul(r).mul(a2))
            .add(&r.pow(3))
            .sub(&t.mul(a3))
            .sub(&t.mul(t))
            .sub(&r.mul(t).mul(a1));
        Self::new(
            n1.scale_q(&inv_pow(1)),
            n2.scale_q(&inv_pow(2)),
            n3.scale_q(&inv_pow(3)),
            n4.scale_q(&inv_pow(4)),
            n6.scale_q(&inv_pow(6)),
        )
    }

    /// The curve on which `u` becomes the `y`-coordinate up to scaling:
    /// `x' = a^2 x`, `y' = a^2 u`. A root `T` of `chi_{y', n}` on the new
    /// curve corresponds to the root `T / a^2` of `chi_{u, n}`.
    pub fn transform_for_u(&self, u: &LinearFunction) -> Result<Self> {
        if u.a.is_zero() {
            return Err(Error::InadmissibleU("the coefficient of y is zero".into()));
        }
        self.change_variables(&u.variable_change())
    }

    /// The negation `(x, y) -> (x, -y - a1 x - a3)` seen as a change of
    /// variables; the curve is unchanged but `y` becomes `-y - a1 x - a3`.
    pub fn negation_u(&self) -> Option<LinearFunction> {
        let (a1, a3) = (self.a1().as_rational()?, self.a3().as_rational()?);
        Some(LinearFunction::new(-Rational::one(), -a1, -a3))
    }

    /// Minimum valuation over the coefficients.
    pub fn min_valuation(&self, p: u64) -> Valuation {
        self.a.iter().map(|c| c.valuation(p)).min().expect("five coefficients")
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> Result<WeierstrassCurve<S>> {
        WeierstrassCurve::from_array(self.a.clone().map(|c| f(&c)))
    }

    /// `"a1,a2,a3,a4,a6"` in parseable form.
    pub fn to_coeff_string(&self) -> String {
        self.a.iter().map(Scalar::pretty).collect::<Vec<_>>().join(",")
    }
}

impl<R: Scalar> fmt::Debug for WeierstrassCurve<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeierstrassCurve[{}]", self.to_coeff_string())
    }
}

impl<R: Scalar> fmt::Display for WeierstrassCurve<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::from("y^2");
        let mut rhs = String::from("x^3");
        let push = |side: &mut String, c: &R, mono: &str| {
            if c.is_zero() {
                return;
            }
            let text = match c.as_rational() {
                Some(q) if q.is_one() && !mono.is_empty() => format!(" + {mono}"),
                Some(q) if q == -Rational::one() && !mono.is_empty() => format!(" - {mono}"),
                Some(q) if q < Rational::zero() => {
                    let m = c.neg().pretty();
                    if mono.is_empty() {
                        format!(" - {m}")
                    } else {
                        format!(" - {m}*{mono}")
                    }
                }
                _ => {
                    let m = if c.as_rational().is_some() { c.pretty() } else { format!("({})", c.pretty()) };
                    if mono.is_empty() {
                        format!(" + {m}")
                    } else {
                        format!(" + {m}*{mono}")
                    }
                }
            };
            side.push_str(&text);
        };
        push(&mut lhs, &self.a[0], "x*y");
        push(&mut lhs, &self.a[2], "y");
        push(&mut rhs, &self.a[1], "x^2");
        push(&mut rhs, &self.a[3], "x");
        push(&mut rhs, &self.a[4], "");
        write!(f, "{lhs} = {rhs}")
    }
}

impl<R: Scalar> VariableChange<R> {
    pub fn identity() -> Self {
        VariableChange { mu: Rational::one(), r: R::zero(), s: R::zero(), t: R::zero() }
    }

    /// The change undoing this one.
    pub fn inverse(&self) -> Self {
        let inv = self.mu.recip();
        let inv2 = &inv * &inv;
        let inv3 = &inv2 * &inv;
        VariableChange {
            mu: inv.clone(),
            r: self.r.neg().scale_q(&inv2),
            s: self.s.neg().scale_q(&inv),
            t: self.r.mul(&self.s).sub(&self.t).scale_q(&inv3),
        }
    }
}

impl LinearFunction {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        LinearFunction { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        LinearFunction::new(crate::exactmath::int(a), crate::exactmath::int(b), crate::exactmath::int(c))
    }

    /// `u = y`.
    pub fn y() -> Self {
        LinearFunction::from_i64(1, 0, 0)
    }

    /// `u = x + y`.
    pub fn x_plus_y() -> Self {
        LinearFunction::from_i64(1, 1, 0)
    }

    /// Parses `"a,b,c"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected \"a,b,c\" for u, got {s:?}")));
        }
        Ok(LinearFunction::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        ))
    }

    /// Admissible when `a != 0` and `2b - a1*a != 0`, which makes `x` and
    /// `y` rational functions of `u` and its conjugate.
    pub fn check_admissible<R: Scalar>(&self, curve: &WeierstrassCurve<R>) -> Result<()> {
        if self.a.is_zero() {
            return Err(Error::InadmissibleU("the coefficient of y is zero".into()));
        }
        let two_b = R::from_rational(&(&self.b + &self.b));
        if two_b.sub(&curve.a1().scale_q(&self.a)).is_zero() {
            return Err(Error::InadmissibleU("2b - a1*a vanishes".into()));
        }
        Ok(())
    }

    /// `mu = 1/a`, `r = 0`, `s = -b/a`, `t = -c/a`.
    pub fn variable_change<R: Scalar>(&self) -> VariableChange<R> {
        let inv = self.a.recip();
        VariableChange {
            mu: inv.clone(),
            r: R::zero(),
            s: R::from_rational(&(-&self.b * &inv)),
            t: R::from_rational(&(-&self.c * &inv)),
        }
    }

    /// Evaluates `u` at a point.
    pub fn eval<R: Scalar>(&self, x: &R, y: &R) -> R {
        y.scale_q(&self.a).add(&x.scale_q(&self.b)).add(&R::from_rational(&self.c))
    }

    pub fn to_coeff_string(&self) -> String {
        use crate::exactmath::format_rational;
        format!("{},{},{}", format_rational(&self.a), format_rational(&self.b), format_rational(&self.c))
    }
}

impl fmt::Display for LinearFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (c, mono) in [(&self.a, "y"), (&self.b, "x"), (&self.c, "")] {
            if c.is_zero() {
                continue;
            }
            let body = crate::exactmath::format_rational(c);
            terms.push(match (mono, body.as_str()) {
                ("", _) => body.clone(),
                (_, "1") => mono.to_string(),
                (_, "-1") => format!("-{mono}"),
                _ => format!("{body}*{mono}"),
            });
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {t}")),
            }
        }
        f.write_str(&out)
    }
}

/// A curve over `Q` or over `Q[t]`, as read from user input.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyCurve {
    Q(WeierstrassCurve<Rational>),
    Qt(WeierstrassCurve<Qt>),
}

impl AnyCurve {
    /// Parses `"a1,a2,a3,a4,a6"`; entries mentioning `t` give a curve
    /// over `Q[t]`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!(
                "expected five comma-separated coefficients, got {}",
                parts.len()
            )));
        }
        let polys = parts.iter().map(|p| Qt::parse(p)).collect::<Result<Vec<_>>>()?;
        let arr: [Qt; 5] = polys.try_into().expect("five entries");
        if arr.iter().all(|p| p.degree().unwrap_or(0) == 0) {
            Ok(AnyCurve::Q(WeierstrassCurve::from_array(
                arr.map(|p| p.as_rational().expect("constant")),
            )?))
        } else {
            Ok(AnyCurve::Qt(WeierstrassCurve::from_array(arr)?))
        }
    }

    pub fn to_coeff_string(&self) -> String {
        match self {
            AnyCurve::Q(c) => c.to_coeff_string(),
            AnyCurve::Qt(c) => c.to_coeff_string(),
        }
    }

    pub fn ring_tag(&self) -> &'static str {
        match self {
            AnyCurve::Q(_) => Rational::TAG,
            AnyCurve::Qt(_) => Qt::TAG,
        }
    }
}

impl fmt::Display for AnyCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyCurve::Q(c) => c.fmt(f),
            AnyCurve::Qt(c) => c.fmt(f),
        }
    }
}

/// Why a curve has no usable reduction at `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionSkip {
    /// Some coefficient has negative valuation at `p`.
    NotIntegral,
    /// `p` divides the discriminant.
    Bad,
}

/// A curve over the prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpCurve {
    pub p: u64,
    pub a: [u64; 5],
}

/// Reduces a curve with `p`-integral coefficients modulo `p`.
pub fn reduce_mod_p(
    curve: &WeierstrassCurve<Rational>,
    p: u64,
) -> Result<std::result::Result<FpCurve, ReductionSkip>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut a = [0u64; 5];
    for (slot, c) in a.iter_mut().zip(curve.coefficients()) {
        match reduce_rational(c, p) {
            Some(v) => *slot = v,
            None => return Ok(Err(ReductionSkip::NotIntegral)),
        }
    }
    if reduce_rational(&curve.discriminant(), p) == Some(0) {
        return Ok(Err(ReductionSkip::Bad));
    }
    Ok(Ok(FpCurve { p, a }))
}

impl FpCurve {
    /// Number of points including the point at infinity.
    pub fn count_points(&self) -> u64 {
        let p = self.p;
        let [a1, a2, a3, a4, a6] = self.a;
        if p <= 3 {
            let mut count = 1;
            for x in 0..p {
                let rhs = (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
                for y in 0..p {
                    let lhs = (y * y + a1 * x % p * y + a3 * y) % p;
                    if lhs == rhs {
                        count += 1;
                    }
                }
            }
            return count;
        }
        // y^2 + (a1 x + a3) y = g(x) has 1 + (D/p) solutions with
        // D = (a1 x + a3)^2 + 4 g(x).
        let mut is_square = vec![false; p as usize];
        for y in 0..p {
            is_square[mul_mod(y, y, p) as usize] = true;
        }
        let b2 = (mul_mod(a1, a1, p) + 4 * a2) % p;
        let b4 = (2 * a4 + mul_mod(a1, a3, p)) % p;
        let b6 = (mul_mod(a3, a3, p) + 4 * a6) % p;
        let mut count: i64 = 1 + p as i64;
        for x in 0..p {
            let mut d = 4 % p;
            d = (mul_mod(d, x, p) + b2) % p;
            d = (mul_mod(d, x, p) + 2 * b4) % p;
            d = (mul_mod(d, x, p) + b6) % p;
            if d != 0 {
                count += if is_square[d as usize] { 1 } else { -1 };
            }
        }
        count as u64
    }

    /// `p + 1 - #E(F_p)`, checked against the Hasse bound.
    pub fn trace_of_frobenius(&self) -> Result<i64> {
        let ap = self.p as i64 + 1 - self.count_points() as i64;
        if (ap as i128) * (ap as i128) > 4 * self.p as i128 {
            return Err(Error::Internal(format!(
                "a_{} = {ap} violates the Hasse bound",
                self.p
            )));
        }
        Ok(ap)
    }
}

/// Trace of Frobenius at a prime of good reduction.
pub fn ap(curve: &WeierstrassCurve<Rational>, p: u64) -> Result<i64> {
    match reduce_mod_p(curve, p)? {
        Ok(fp) => fp.trace_of_frobenius(),
        Err(ReductionSkip::NotIntegral) => Err(Error::NotIntegral(p)),
        Err(ReductionSkip::Bad) => Err(Error::BadReduction(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, primes_up_to, rat};
    use proptest::prelude::*;

    type C = WeierstrassCurve<Rational>;

    fn q_curve(a: [i64; 5]) -> C {
        C::from_array(a.map(int)).unwrap()
    }

    fn borel_curve() -> C {
        C::new(int(1), int(0), int(0), int(0), rat(-4, 13)).unwrap()
    }

    #[test]
    fn b_invariant_examples() {
        let b = q_curve([0, 0, 1, 0, 0]).b_invariants();
        assert_eq!((b.b2, b.b4, b.b6, b.b8), (int(0), int(0), int(1), int(0)));
        let b = C::short(int(3), int(-5)).unwrap().b_invariants();
        assert_eq!((b.b2, b.b4, b.b6, b.b8), (int(0), int(6), int(-20), int(-9)));
        let serre = WeierstrassCurve::<Qt>::new(Qt::one(), Qt::zero(), Qt::zero(), Qt::zero(), Qt::x()).unwrap();
        let b = serre.b_invariants();
        assert_eq!(b.b2, Qt::one());
        assert_eq!(b.b6, Qt::from_i64s(&[0, 4]));
        assert_eq!(b.b8, Qt::x());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(C::short(int(0), int(1)).unwrap().discriminant(), int(-432));
        assert_eq!(C::short(int(-1), int(0)).unwrap().discriminant(), int(64));
        assert!(matches!(C::short(int(0), int(0)), Err(Error::SingularCurve)));
        // 11a1 has discriminant -11^5
        assert_eq!(q_curve([0, -1, 1, -10, -20]).discriminant(), int(-161051));
    }

    #[test]
    fn transform_examples() {
        let e = borel_curve();
        assert_eq!(e.transform_for_u(&LinearFunction::y()).unwrap(), e);
        // u = x + y on y^2 = x^3 + A x + B: y^2 - 2xy = x^3 - x^2 + A x + B
        let e = C::short(int(2), int(3)).unwrap();
        let t = e.transform_for_u(&LinearFunction::x_plus_y()).unwrap();
        assert_eq!(t.coefficients(), &[int(-2), int(-1), int(0), int(2), int(3)]);
        assert!(e.transform_for_u(&LinearFunction::from_i64(0, 1, 0)).is_err());
    }

    #[test]
    fn admissibility() {
        let short = C::short(int(0), int(1)).unwrap();
        assert!(LinearFunction::y().check_admissible(&short).is_err());
        assert!(LinearFunction::x_plus_y().check_admissible(&short).is_ok());
        assert!(LinearFunction::y().check_admissible(&borel_curve()).is_ok());
        // 2b - a1 a = 2 - 2 = 0
        let e = q_curve([2, 0, 0, 0, 1]);
        assert!(LinearFunction::x_plus_y().check_admissible(&e).is_err());
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_mod_p(&borel_curve(), 13).unwrap(), Err(ReductionSkip::NotIntegral));
        let e = C::short(int(0), int(1)).unwrap();
        assert_eq!(reduce_mod_p(&e, 2).unwrap(), Err(ReductionSkip::Bad));
        assert_eq!(reduce_mod_p(&e, 3).unwrap(), Err(ReductionSkip::Bad));
        assert!(reduce_mod_p(&e, 5).unwrap().is_ok());
        assert!(reduce_mod_p(&e, 4).is_err());
    }

    #[test]
    fn point_count_examples() {
        assert_eq!(ap(&C::short(int(0), int(1)).unwrap(), 5).unwrap(), 0);
        let e = C::short(int(-1), int(0)).unwrap();
        assert_eq!(reduce_mod_p(&e, 3).unwrap().unwrap().count_points(), 4);
        assert_eq!(ap(&e, 3).unwrap(), 0);
        // 11a1: a_2 = -2, a_3 = -1, a_5 = 1, a_7 = -2
        let e = q_curve([0, -1, 1, -10, -20]);
        let traces: Vec<i64> = [2, 3, 5, 7].iter().map(|&p| ap(&e, p).unwrap()).collect();
        assert_eq!(traces, vec![-2, -1, 1, -2]);
        assert!(matches!(ap(&e, 11), Err(Error::BadReduction(11))));
    }

    /// Brute force over all (x, y) for every prime, the independent oracle.
    fn brute_count(e: &FpCurve) -> u64 {
        let p = e.p;
        let [a1, a2, a3, a4, a6] = e.a;
        let mut count = 1;
        for x in 0..p {
            for y in 0..p {
                let lhs = (y * y + a1 * x % p * y + a3 * y) % p;
                let rhs = (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
                if lhs == rhs {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn hasse_bound_and_brute_force() {
        for a in [[0, -1, 1, -10, -20], [1, 0, 0, 0, 1], [0, 0, 1, -1, 0], [1, -1, 1, 3, -7]] {
            let e = q_curve(a);
            for p in primes_up_to(10_000) {
                if let Ok(fp) = reduce_mod_p(&e, p).unwrap() {
                    let t = fp.trace_of_frobenius().unwrap();
                    assert!(t * t <= 4 * p as i64);
                    if p < 60 {
                        assert_eq!(fp.count_points(), brute_count(&fp), "{a:?} mod {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn parse_curves() {
        match AnyCurve::parse("1,0,0,0,\u{2212}4/13").unwrap() {
            AnyCurve::Q(c) => assert_eq!(c, borel_curve()),
            other => panic!("{other:?}"),
        }
        match AnyCurve::parse("1,0,0,0,t").unwrap() {
            AnyCurve::Qt(c) => assert_eq!(c.a6(), &Qt::x()),
            other => panic!("{other:?}"),
        }
        assert!(AnyCurve::parse("0,0,0,0,0").is_err());
        assert!(AnyCurve::parse("0,0,0,1").is_err());
        let c = AnyCurve::parse("1,0,0,0,2*t^2-1").unwrap();
        assert_eq!(AnyCurve::parse(&c.to_coeff_string()).unwrap(), c);
        assert_eq!(borel_curve().to_string(), "y^2 + x*y = x^3 - 4/13");
    }

    fn rat_strategy() -> impl Strategy<Value = Rational> {
        (-6i64..7, 1i64..4).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn b8_identity(a in prop::array::uniform5(rat_strategy())) {
            let e = WeierstrassCurve { a };
            let b = e.b_invariants();
            prop_assert_eq!(int(4) * &b.b8, &b.b2 * &b.b6 - &b.b4 * &b.b4);
        }

        #[test]
        fn b8_identity_over_qt(a in prop::array::uniform5(prop::collection::vec(-4i64..5, 0..3))) {
            let e = WeierstrassCurve { a: a.map(|c| Qt::from_i64s(&c)) };
            let b = e.b_invariants();
            prop_assert_eq!(b.b8.scale_q(&int(4)), b.b2.mul(&b.b6).sub(&b.b4.mul(&b.b4)));
        }

        #[test]
        fn change_of_variables_round_trips(a in prop::array::uniform5(rat_strategy()),
                                           u in (prop::sample::select(vec![-3i64, -2, -1, 1, 2, 5]), -4i64..5, -4i64..5),
                                           r in rat_strategy()) {
            let Ok(e) = C::from_array(a) else { return Ok(()); };
            let ch = VariableChange { mu: int(u.0), r, s: int(u.1), t: int(u.2) };
            let moved = e.change_variables(&ch).unwrap();
            prop_assert_eq!(moved.change_variables(&ch.inverse()).unwrap(), e.clone());
            // discriminant scales by mu^-12
            prop_assert_eq!(moved.discriminant() * int(u.0).pow(12), e.discriminant());
            let f = LinearFunction::from_i64(u.0, u.1, u.2);
            let t = e.transform_for_u(&f).unwrap();
            prop_assert_eq!(t.discriminant(), e.discriminant() * int(u.0).pow(12));
        }

        #[test]
        fn transform_sends_points_to_points(a in prop::array::uniform5(-5i64..6),
                                            u in (prop::sample::select(vec![-2i64, -1, 1, 3]), -4i64..5, -4i64..5),
                                            x0 in -5i64..6) {
            // w_E(x0, y) maps to a^-6 w_E'(a^2 x0, a^2 u(x0, y)) as polynomials in y
            let Ok(e) = C::from_array(a.map(int)) else { return Ok(()); };
            let f = LinearFunction::from_i64(u.0, u.1, u.2);
            let t = e.transform_for_u(&f).unwrap();
            let x = int(x0);
            let a2 = int(u.0 * u.0);
            let w = |c: &C, x: &Rational, y: &Poly<Rational>| {
                let [a1, a2, a3, a4, a6] = c.coefficients().clone();
                let lin = Poly::constant(a1 * x + a3);
                y.mul(y).add(&y.mul(&lin)).sub(&Poly::constant(x * x * x + a2 * x * x + a4 * x + a6))
            };
            let y = Poly::<Rational>::x();
            let lhs = w(&e, &x, &y);
            let y_new = y.scale(&int(u.0)).add(&Poly::constant(int(u.1) * &x + int(u.2))).scale(&a2);
            let rhs = w(&t, &(&a2 * &x), &y_new);
            // rhs = a^6 * lhs
            prop_assert_eq!(rhs, lhs.scale(&a2.pow(3)));
        }
    }
}
