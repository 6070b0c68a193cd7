use std::fmt;

use super::ring::{Domain, Field, Ring};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and `degree()` is `None` for it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Division left a nonzero remainder.
#[derive(Debug, Clone, PartialEq)]
pub struct InexactDivision<R: Ring> {
    pub quotient: Poly<R>,
    pub remainder: Poly<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Ring::is_one)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(at).add(c))
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| acc.mul(inner).add(&Poly::constant(c.clone())))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Self {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Poly<S>, E> {
        Ok(Poly::new(self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }

    /// Remainder modulo a monic polynomial; works over any ring.
    pub fn rem_monic(&self, g: &Self) -> Self {
        assert!(g.is_monic(), "rem_monic needs a monic divisor");
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        for k in (0..rem.len() - dg).rev() {
            let top = rem[k + dg].clone();
            if top.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                if !gc.is_zero() {
                    rem[k + j] = rem[k + j].sub(&top.mul(gc));
                }
            }
        }
        rem.truncate(dg);
        Self::new(rem)
    }
}

impl<R: Domain> Poly<R> {
    /// Quotient `self / g`, which must be exact.
    ///
    /// Each step divides by the leading coefficient of `g` inside `R`; a
    /// step that fails there, or a nonzero final remainder, is reported
    /// with the partial quotient and the remainder.
    pub fn exact_divide(&self, g: &Self) -> Result<Self, InexactDivision<R>> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let dg = g.coeffs.len() - 1;
        let lead = g.lc();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(InexactDivision {
                    quotient: Self::zero(),
                    remainder: self.clone(),
                })
            };
        }
        let mut quot = vec![R::zero(); rem.len() - dg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dg];
            if top.is_zero() {
                continue;
            }
            let Some(q) = top.div_exact(&lead) else {
                return Err(InexactDivision {
                    quotient: Self::new(quot),
                    remainder: Self::new(rem),
                });
            };
            for (j, gc) in g.coeffs.iter().enumerate() {
                if !gc.is_zero() {
                    rem[k + j] = rem[k + j].sub(&q.mul(gc));
                }
            }
            quot[k] = q;
        }
        let remainder = Self::new(rem);
        if remainder.is_zero() {
            Ok(Self::new(quot))
        } else {
            Err(InexactDivision {
                quotient: Self::new(quot),
                remainder,
            })
        }
    }
}

impl<R: Field> Poly<R> {
    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn div_rem(&self, g: &Self) -> (Self, Self) {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return (Self::zero(), self.clone());
        }
        let inv = g.lc().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); rem.len() - dg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dg];
            if top.is_zero() {
                continue;
            }
            let q = top.mul(&inv);
            for (j, gc) in g.coeffs.iter().enumerate() {
                if !gc.is_zero() {
                    rem[k + j] = rem[k + j].sub(&q.mul(gc));
                }
            }
            quot[k] = q;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.div_rem(g).1
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn size_hint(&self) -> usize {
        self.coeffs.len() * 64 + self.coeffs.iter().map(Ring::size_hint).sum::<usize>()
    }
}

impl<R: Domain> Domain for Poly<R> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        self.exact_divide(d).ok()
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<R: Ring> Default for Poly<R> {
    fn default() -> Self {
        Self::zero()
    }
}
