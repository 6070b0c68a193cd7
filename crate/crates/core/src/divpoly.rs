//! Division polynomials and primitive division polynomials.
//!
//! `psi_n` is stored through a univariate cofactor `f_n`: `psi_n = f_n` for
//! odd `n` and `psi_n = psi_2 * f_n` for even `n`, with
//! `psi_2 = 2y + a1 x + a3` and `psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::curve::{BInvariants, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::polyring::Poly;
use crate::scalar::Scalar;
use crate::torsionchar::CoordElem;

/// `psi_n` as a cofactor, with the implicit `psi_2` factor for even `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisionPolynomial<R: Scalar> {
    pub n: usize,
    pub cofactor: Poly<R>,
    /// True iff `psi_n = psi_2 * cofactor` (even `n`).
    pub has_psi2: bool,
}

impl<R: Scalar> DivisionPolynomial<R> {
    /// `psi_n` in the form `p(x) + q(x) y`.
    pub fn to_coord_elem(&self, curve: &WeierstrassCurve<R>) -> CoordElem<R> {
        if self.has_psi2 {
            CoordElem::new(
                curve.y_linear_coeff().mul(&self.cofactor),
                self.cofactor.scale(&R::from_i64(2)),
            )
        } else {
            CoordElem::from_x_poly(self.cofactor.clone())
        }
    }

    /// `psi_n^2` as a polynomial in `x`.
    pub fn square_univariate(&self, curve: &WeierstrassCurve<R>) -> Poly<R> {
        let sq = self.cofactor.mul(&self.cofactor);
        if self.has_psi2 {
            sq.mul(&curve.psi2_squared())
        } else {
            sq
        }
    }
}

/// Memoized division polynomials of one curve. Safe to share between
/// threads; values are immutable once cached.
pub struct DivisionPolynomials<R: Scalar> {
    curve: WeierstrassCurve<R>,
    /// `(psi_2^2)^2`
    psi2_fourth: Poly<R>,
    cofactors: Mutex<HashMap<usize, Arc<Poly<R>>>>,
    primitive: Mutex<HashMap<usize, Arc<Poly<R>>>>,
}

impl<R: Scalar> DivisionPolynomials<R> {
    pub fn new(curve: &WeierstrassCurve<R>) -> Self {
        let sq = curve.psi2_squared();
        DivisionPolynomials {
            curve: curve.clone(),
            psi2_fourth: sq.mul(&sq),
            cofactors: Mutex::new(HashMap::new()),
            primitive: Mutex::new(HashMap::new()),
        }
    }

    pub fn curve(&self) -> &WeierstrassCurve<R> {
        &self.curve
    }

    fn base_cofactor(&self, n: usize) -> Poly<R> {
        let BInvariants { b2, b4, b6, b8 } = self.curve.b_invariants();
        let c = |k: i64| R::from_i64(k);
        match n {
            0 => Poly::zero(),
            1 | 2 => Poly::one(),
            3 => Poly::new(vec![b8, c(3).mul(&b6), c(3).mul(&b4), b2, c(3)]),
            4 => Poly::new(vec![
                b4.mul(&b8).sub(&b6.mul(&b6)),
                b2.mul(&b8).sub(&b4.mul(&b6)),
                c(10).mul(&b8),
                c(10).mul(&b6),
                c(5).mul(&b4),
                b2,
                c(2),
            ]),
            _ => unreachable!("base case"),
        }
    }

    /// The cofactor `f_n`.
    pub fn cofactor(&self, n: usize) -> Arc<Poly<R>> {
        if let Some(hit) = self.cofactors.lock().expect("cache lock").get(&n) {
            return hit.clone();
        }
        let value = if n <= 4 {
            self.base_cofactor(n)
        } else if n % 2 == 1 {
            let m = (n - 1) / 2;
            let (fm2, fm, fm1, fp1) = (self.cofactor(m + 2), self.cofactor(m), self.cofactor(m - 1), self.cofactor(m + 1));
            let first = fm2.mul(&fm.pow(3));
            let second = fm1.mul(&fp1.pow(3));
            if m % 2 == 0 {
                self.psi2_fourth.mul(&first).sub(&second)
            } else {
                first.sub(&self.psi2_fourth.mul(&second))
            }
        } else {
            let m = n / 2;
            let (fm, fp2, fm1, fm2, fp1) = (
                self.cofactor(m),
                self.cofactor(m + 2),
                self.cofactor(m - 1),
                self.cofactor(m - 2),
                self.cofactor(m + 1),
            );
            let inner = fp2.mul(&fm1.pow(2)).sub(&fm2.mul(&fp1.pow(2)));
            fm.mul(&inner)
        };
        let value = Arc::new(value);
        self.cofactors
            .lock()
            .expect("cache lock")
            .entry(n)
            .or_insert(value)
            .clone()
    }

    /// `psi_n` for `n >= 1`.
    pub fn psi(&self, n: usize) -> Result<DivisionPolynomial<R>> {
        if n == 0 {
            return Err(Error::InvalidArgument("division polynomial index must be at least 1".into()));
        }
        Ok(DivisionPolynomial {
            n,
            cofactor: (*self.cofactor(n)).clone(),
            has_psi2: n % 2 == 0,
        })
    }

    /// Primitive division polynomial for `n >= 3`: the cofactor divided by
    /// every `psi_tilde_m` with `m | n`, `3 <= m < n`.
    pub fn psi_tilde(&self, n: usize) -> Result<Arc<Poly<R>>> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "primitive division polynomial needs n >= 3, got {n}"
            )));
        }
        if let Some(hit) = self.primitive.lock().expect("cache lock").get(&n) {
            return Ok(hit.clone());
        }
        let mut divisor = Poly::one();
        for m in (3..n).filter(|m| n % m == 0) {
            divisor = divisor.mul(&*self.psi_tilde(m)?);
        }
        let value = self
            .cofactor(n)
            .exact_divide(&divisor)
            .map_err(|e| Error::InexactDivision {
                remainder: format!("{:?}", e.remainder),
            })?;
        let value = Arc::new(value);
        Ok(self
            .primitive
            .lock()
            .expect("cache lock")
            .entry(n)
            .or_insert(value)
            .clone())
    }
}

/// `psi_n` with a fresh cache.
pub fn psi<R: Scalar>(curve: &WeierstrassCurve<R>, n: usize) -> Result<DivisionPolynomial<R>> {
    DivisionPolynomials::new(curve).psi(n)
}

/// `psi_tilde_n` with a fresh cache.
pub fn psi_tilde<R: Scalar>(curve: &WeierstrassCurve<R>, n: usize) -> Result<Poly<R>> {
    Ok((*DivisionPolynomials::new(curve).psi_tilde(n)?).clone())
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Jordan's totient `J_2(n) = n^2 prod_{p | n} (1 - p^-2)`, the number of
/// points of exact order `n` in `(Z/n)^2`.
pub fn jordan_j2(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n * n, |acc, p| acc / (p * p) * (p * p - 1))
}

/// `deg psi_tilde_n = J_2(n) / 2` for `n >= 3`.
pub fn primitive_degree(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "primitive degree needs n >= 3, got {n}"
        )));
    }
    Ok(jordan_j2(n) / 2)
}

/// Leading coefficient of `psi_tilde_n`: `p` if `n` is a power of the prime
/// `p`, else 1.
pub fn primitive_leading_coefficient(n: u64) -> u64 {
    match prime_factors(n).as_slice() {
        [p] => *p,
        _ => 1,
    }
}

/// `Some(p)` if `n = p^k` with `k >= 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match prime_factors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}
