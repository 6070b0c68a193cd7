//! Arbitrary-precision integers and rationals, valuations, square tests and
//! small-prime utilities.
//!
//! `Integer` and `Rational` are the `num` crate's big integer and big
//! rational types. `BigRational` is always reduced with a positive
//! denominator, so structural equality is value equality.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// A p-adic valuation; `Infinite` is the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Exponent of `p` in a nonzero integer, by repeated exact division.
fn integer_valuation(n: &Integer, p: &Integer) -> i64 {
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// The p-adic valuation of `q`.
pub fn valuation_p(q: &Rational, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    Ok(valuation_unchecked(q, p))
}

pub(crate) fn valuation_unchecked(q: &Rational, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let p = Integer::from(p);
    Valuation::Finite(integer_valuation(q.numer(), &p) - integer_valuation(q.denom(), &p))
}

/// The nonnegative rational square root of `q`, if it exists.
pub fn is_square(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = integer_sqrt_exact(q.numer())?;
    let d = integer_sqrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

fn integer_sqrt_exact(n: &Integer) -> Option<Integer> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// All primes `<= bound`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Parses `"num/den"`, `"num"`, accepting a Unicode minus sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let cleaned = s.trim().replace('\u{2212}', "-");
    let parse_int = |t: &str| {
        t.trim()
            .parse::<Integer>()
            .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
    };
    match cleaned.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(&cleaned)?)),
    }
}

/// `"num/den"`, or `"num"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Divisors of a nonzero integer, positive only, by trial division.
pub(crate) fn positive_divisors(n: &Integer) -> Vec<Integer> {
    let mut n = n.abs();
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    let mut d = Integer::from(2u32);
    while &d * &d <= n {
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += if d == Integer::from(2u32) { 1u32 } else { 2u32 };
    }
    if n > Integer::one() {
        factors.push((n, 1));
    }
    let mut divisors = vec![Integer::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation_p(&int(0), 3).unwrap(), Valuation::Infinite);
        assert_eq!(valuation_p(&rat(-851, 351), 3).unwrap(), Valuation::Finite(-3));
        assert_eq!(valuation_p(&rat(9, 4), 3).unwrap(), Valuation::Finite(2));
        assert_eq!(valuation_p(&rat(9, 4), 2).unwrap(), Valuation::Finite(-2));
        assert_eq!(valuation_p(&rat(1, 2), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn square_examples() {
        assert_eq!(is_square(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(is_square(&int(-1)), None);
        // 15^2 = 225 < 229 < 256 = 16^2
        assert_eq!(is_square(&int(229)), None);
        assert_eq!(is_square(&int(0)), Some(int(0)));
    }

    #[test]
    fn sieve() {
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        // trial-division oracle
        let naive = (2u64..=10_000)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .count();
        assert_eq!(naive, 1229);
        assert_eq!(primes_up_to(10_000).len(), naive);
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let sieve = primes_up_to(20_000);
        let mr: Vec<u64> = (0..=20_000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, mr);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn divisors() {
        let d: Vec<i64> = positive_divisors(&Integer::from(-12))
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("\u{2212}4/13").unwrap(), rat(-4, 13));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rat(3, 2));
        assert_eq!(format_rational(&rat(-851, 351)), "-851/351");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn valuation_is_additive(q in small_rational(), r in small_rational(),
                                 p in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
            let lhs = valuation_p(&(&q * &r), p).unwrap();
            let rhs = valuation_p(&q, p).unwrap() + valuation_p(&r, p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn square_of_rational_is_square(q in small_rational()) {
            prop_assert_eq!(is_square(&(&q * &q)), Some(num_traits::Signed::abs(&q)));
        }

        #[test]
        fn arithmetic_is_exact(q in small_rational(), r in small_rational()) {
            prop_assert_eq!(&(&q + &r) - &r, q);
        }
    }
}
