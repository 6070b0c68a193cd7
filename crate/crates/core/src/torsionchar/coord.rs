//! Elements `p(x) + q(x)*y` of the coordinate ring of a curve, and the
//! finite quotient cut out by a primitive division polynomial.

use crate::curve::{LinearFunction, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::polyring::{Poly, Ring};
use crate::scalar::Scalar;

/// `p(x) + q(x) y`, kept reduced by the curve equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordElem<R: Ring> {
    pub p: Poly<R>,
    pub q: Poly<R>,
}

impl<R: Scalar> CoordElem<R> {
    pub fn new(p: Poly<R>, q: Poly<R>) -> Self {
        CoordElem { p, q }
    }

    pub fn zero() -> Self {
        CoordElem::new(Poly::zero(), Poly::zero())
    }

    pub fn one() -> Self {
        CoordElem::new(Poly::one(), Poly::zero())
    }

    pub fn from_x_poly(p: Poly<R>) -> Self {
        CoordElem::new(p, Poly::zero())
    }

    pub fn x() -> Self {
        CoordElem::from_x_poly(Poly::x())
    }

    pub fn y() -> Self {
        CoordElem::new(Poly::zero(), Poly::one())
    }

    /// `a y + b x + c`.
    pub fn from_linear(u: &LinearFunction) -> Self {
        CoordElem::new(
            Poly::new(vec![R::from_rational(&u.c), R::from_rational(&u.b)]),
            Poly::constant(R::from_rational(&u.a)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        CoordElem::new(self.p.add(&rhs.p), self.q.add(&rhs.q))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        CoordElem::new(self.p.sub(&rhs.p), self.q.sub(&rhs.q))
    }

    pub fn neg(&self) -> Self {
        CoordElem::new(self.p.neg(), self.q.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        CoordElem::new(self.p.scale(c), self.q.scale(c))
    }

    /// Product with `y^2` replaced by `x^3 + a2 x^2 + a4 x + a6 - (a1 x + a3) y`.
    pub fn mul(&self, rhs: &Self, curve: &WeierstrassCurve<R>) -> Self {
        let qq = self.q.mul(&rhs.q);
        let p = self.p.mul(&rhs.p).add(&qq.mul(&curve.cubic()));
        let q = self
            .p
            .mul(&rhs.q)
            .add(&self.q.mul(&rhs.p))
            .sub(&qq.mul(&curve.y_linear_coeff()));
        CoordElem::new(p, q)
    }

    pub fn pow(&self, e: u32, curve: &WeierstrassCurve<R>) -> Self {
        let mut acc = CoordElem::one();
        for _ in 0..e {
            acc = acc.mul(self, curve);
        }
        acc
    }
}

/// `K[x, y] / (psi_tilde_n, w_E)`, a free module of rank `2d` over `K`
/// with basis `1, .., x^(d-1), y, .., x^(d-1) y`.
#[derive(Debug, Clone)]
pub struct QuotientRing<R: Scalar> {
    curve: WeierstrassCurve<R>,
    modulus: Poly<R>,
}

impl<R: Scalar> QuotientRing<R> {
    /// `psi` is the primitive division polynomial; it is normalized by its
    /// leading coefficient, which must be a nonzero rational.
    pub fn new(curve: WeierstrassCurve<R>, psi: &Poly<R>) -> Result<Self> {
        let lead = psi
            .lc()
            .as_rational()
            .filter(|q| !Ring::is_zero(q))
            .ok_or_else(|| Error::Internal("leading coefficient is not a nonzero constant".into()))?;
        if psi.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidArgument("modulus must have positive degree".into()));
        }
        let modulus = psi.scale(&R::from_rational(&lead.recip()));
        Ok(QuotientRing { curve, modulus })
    }

    pub fn curve(&self) -> &WeierstrassCurve<R> {
        &self.curve
    }

    pub fn modulus(&self) -> &Poly<R> {
        &self.modulus
    }

    /// `d`, the degree of the modulus.
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("positive degree")
    }

    pub fn dimension(&self) -> usize {
        2 * self.degree()
    }

    pub fn reduce(&self, e: &CoordElem<R>) -> CoordElem<R> {
        CoordElem::new(e.p.rem_monic(&self.modulus), e.q.rem_monic(&self.modulus))
    }

    pub fn mul(&self, a: &CoordElem<R>, b: &CoordElem<R>) -> CoordElem<R> {
        self.reduce(&a.mul(b, &self.curve))
    }

    /// Coordinates on the basis `1, .., x^(d-1), y, .., x^(d-1) y`.
    pub fn coordinates(&self, e: &CoordElem<R>) -> Vec<R> {
        let e = self.reduce(e);
        let d = self.degree();
        (0..d).map(|i| e.p.coeff(i)).chain((0..d).map(|i| e.q.coeff(i))).collect()
    }

    pub fn basis_element(&self, k: usize) -> CoordElem<R> {
        let d = self.degree();
        let mono = Poly::monomial(R::one(), k % d);
        if k < d {
            CoordElem::from_x_poly(mono)
        } else {
            CoordElem::new(Poly::zero(), mono)
        }
    }
}
