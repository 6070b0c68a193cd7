//! Polynomials over a prime field `F_p` (`p < 2^63`), enough for
//! distinct-degree factorization.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactmath::{is_prime, mul_mod, pow_mod, Rational};

use super::poly::Poly;

/// Polynomial over `F_p`, ascending coefficients in `0..p`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

/// Why a prime cannot be used for a degree pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    /// `p` divides a denominator or the leading coefficient.
    NotIntegral,
    /// The reduction is not squarefree (`p` divides the discriminant).
    Ramified,
}

/// Reduces an integer modulo `p` into `0..p`.
pub fn reduce_integer(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Reduces a rational modulo `p`; `None` if `p` divides the denominator.
pub fn reduce_rational(q: &Rational, p: u64) -> Option<u64> {
    let den = reduce_integer(q.denom(), p);
    if den == 0 {
        return None;
    }
    let num = reduce_integer(q.numer(), p);
    Some(mul_mod(num, inv_mod(den, p), p))
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    /// Reduction of a rational polynomial; `None` if some denominator is
    /// divisible by `p`.
    pub fn from_rational(f: &Poly<Rational>, p: u64) -> Option<Self> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| reduce_rational(c, p))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(p, coeffs))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        FpPoly::new(p, coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::new(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        FpPoly::new(p, out)
    }

    pub fn div_rem(&self, g: &Self) -> (Self, Self) {
        assert!(!g.is_zero());
        let p = self.p;
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return (FpPoly::new(p, Vec::new()), self.clone());
        }
        let inv = inv_mod(*g.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dg];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dg];
            if top == 0 {
                continue;
            }
            let q = mul_mod(top, inv, p);
            for (j, &gc) in g.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(q, gc, p)) % p;
            }
            quot[k] = q;
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, g: &Self) -> Self {
        self.div_rem(g).1
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                FpPoly::new(self.p, self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect())
            }
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = FpPoly::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, by
    /// distinct-degree factorization.
    pub fn factor_degrees(&self) -> Vec<usize> {
        let p = self.p;
        let mut f = self.monic();
        let mut degrees = Vec::new();
        let x = FpPoly::x(p);
        let mut h = x.clone();
        let mut i = 0;
        while let Some(d) = f.degree() {
            if d == 0 {
                break;
            }
            i += 1;
            if 2 * i > d {
                degrees.push(d);
                break;
            }
            h = h.pow_mod(p, &f);
            let g = h.sub(&x).gcd(&f);
            if let Some(dg) = g.degree() {
                if dg > 0 {
                    degrees.extend(std::iter::repeat(i).take(dg / i));
                    f = f.div_rem(&g).0;
                    h = h.rem(&f);
                }
            }
        }
        degrees.sort_unstable();
        degrees
    }
}

/// Sorted degrees of the irreducible factors of `f mod p`.
///
/// Returns `Ok(Err(reason))` when `p` is a bad prime for `f`; that is a
/// skip signal, not a failure.
pub fn mod_p_degree_pattern(
    f: &Poly<Rational>,
    p: u64,
) -> Result<std::result::Result<Vec<usize>, SkipReason>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let Some(deg) = f.degree() else {
        return Err(Error::InvalidArgument("degree pattern of zero".into()));
    };
    let Some(fp) = FpPoly::from_rational(f, p) else {
        return Ok(Err(SkipReason::NotIntegral));
    };
    if fp.degree() != Some(deg) {
        return Ok(Err(SkipReason::NotIntegral));
    }
    if deg == 0 {
        return Ok(Ok(Vec::new()));
    }
    if fp.gcd(&fp.derivative()).degree() != Some(0) {
        return Ok(Err(SkipReason::Ramified));
    }
    Ok(Ok(fp.factor_degrees()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pattern(cs: &[i64], p: u64) -> std::result::Result<Vec<usize>, SkipReason> {
        mod_p_degree_pattern(&Poly::from_i64s(cs), p).unwrap()
    }

    /// Counts irreducible factors by brute force: monic irreducibles of
    /// each degree are enumerated and divided out.
    fn brute_pattern(cs: &[i64], p: u64) -> Vec<usize> {
        let mut f = FpPoly::from_rational(&Poly::from_i64s(cs), p).unwrap().monic();
        let mut out = Vec::new();
        let mut d = 1;
        while f.degree().unwrap() > 0 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut v = idx;
                for _ in 0..d {
                    c.push(v % p);
                    v /= p;
                }
                c.push(1);
                let g = FpPoly::new(p, c);
                loop {
                    let (q, r) = f.div_rem(&g);
                    if !r.is_zero() {
                        break;
                    }
                    out.push(d);
                    f = q;
                }
            }
            d += 1;
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn examples() {
        assert_eq!(pattern(&[1, 0, 1], 5), Ok(vec![1, 1]));
        assert_eq!(pattern(&[1, 0, 1], 3), Ok(vec![2]));
        assert_eq!(pattern(&[1, 1, 0, 0, 1], 2), Ok(vec![4]));
        assert_eq!(pattern(&[1, 0, 1], 2), Err(SkipReason::Ramified));
        assert_eq!(pattern(&[1, 0, 3], 3), Err(SkipReason::NotIntegral));
        assert!(mod_p_degree_pattern(&Poly::from_i64s(&[1, 1]), 9).is_err());
    }

    #[test]
    fn matches_brute_force() {
        let polys: [&[i64]; 5] = [
            &[1, 1, 0, 0, 1],
            &[1, 0, 0, 0, 1],
            &[1, 1, 1, 1, 1],
            &[-2, 3, 0, 5, 1, 1],
            &[7, 0, -1, 2, 0, 0, 1],
        ];
        for cs in polys {
            for p in [3u64, 5, 7, 11] {
                if let Ok(pat) = pattern(cs, p) {
                    assert_eq!(pat, brute_pattern(cs, p), "{cs:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn x4_plus_1_always_splits() {
        for p in [3u64, 5, 7, 11, 13] {
            let pat = pattern(&[1, 0, 0, 0, 1], p).unwrap();
            assert!(pat.iter().all(|&d| d <= 2), "{pat:?}");
        }
    }

    #[test]
    fn cyclotomic_5_patterns() {
        // all factors have degree ord_5(p)
        for p in [3u64, 7, 11, 13, 19, 29, 31] {
            let ord = (1..=4).find(|&k| pow_mod(p, k, 5) == 1).unwrap() as usize;
            assert_eq!(pattern(&[1, 1, 1, 1, 1], p).unwrap(), vec![ord; 4 / ord]);
        }
    }
}
