//! Base rings for curve coefficients: `Q` and `Q[t]`.

use std::fmt;

use num_integer::Integer as _;
use num_traits::Signed;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactmath::{format_rational, parse_rational, valuation_unchecked, Integer, Rational, Valuation};
use crate::linalg::{charpoly_berkowitz, Matrix};
use crate::polyring::{Domain, Poly, Ring};

/// Polynomials in `t` over `Q`.
pub type Qt = Poly<Rational>;

/// A coefficient ring that is a `Q`-algebra and an integral domain.
pub trait Scalar: Domain {
    /// Short ring tag used in JSON output: `"Q"` or `"Qt"`.
    const TAG: &'static str;

    fn from_rational(q: &Rational) -> Self;

    /// Multiplication by a rational constant.
    fn scale_q(&self, q: &Rational) -> Self;

    /// `Some(q)` if the element is the constant `q`.
    fn as_rational(&self) -> Option<Rational>;

    /// p-adic valuation; for `Q[t]` the minimum over the `t`-coefficients.
    fn valuation(&self, p: u64) -> Valuation;

    /// `det(x*I - m)`.
    fn charpoly(m: &Matrix<Self>) -> Poly<Self>;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self>;

    /// Human-readable form.
    fn pretty(&self) -> String;

    /// Substitutes a rational value for `t` (identity over `Q`).
    fn specialize(&self, t: &Rational) -> Rational;

    /// Parses a scalar written as an expression.
    fn parse(s: &str) -> Result<Self>;
}

impl Scalar for Rational {
    const TAG: &'static str = "Q";

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn scale_q(&self, q: &Rational) -> Self {
        self * q
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn valuation(&self, p: u64) -> Valuation {
        valuation_unchecked(self, p)
    }

    fn charpoly(m: &Matrix<Self>) -> Poly<Self> {
        charpoly_rational(m)
    }

    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
            other => Err(Error::Parse(format!("expected a rational, got {other}"))),
        }
    }

    fn pretty(&self) -> String {
        format_rational(self)
    }

    fn specialize(&self, _t: &Rational) -> Rational {
        self.clone()
    }

    fn parse(s: &str) -> Result<Self> {
        let p = parse_qt(s)?;
        match p.degree() {
            None => Ok(Rational::zero()),
            Some(0) => Ok(p.coeff(0)),
            Some(_) => Err(Error::Parse(format!("expected a rational number, got {s:?}"))),
        }
    }
}

impl Scalar for Qt {
    const TAG: &'static str = "Qt";

    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }

    fn scale_q(&self, q: &Rational) -> Self {
        self.scale(q)
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }

    fn valuation(&self, p: u64) -> Valuation {
        self.coeffs()
            .iter()
            .map(|c| valuation_unchecked(c, p))
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    fn charpoly(m: &Matrix<Self>) -> Poly<Self> {
        charpoly_berkowitz(m)
    }

    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(Scalar::to_json).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Array(items) => Ok(Poly::new(
                items.iter().map(Rational::from_json).collect::<Result<Vec<_>>>()?,
            )),
            other => Ok(Poly::constant(Rational::from_json(other)?)),
        }
    }

    fn pretty(&self) -> String {
        pretty_poly(self, "t")
    }

    fn specialize(&self, t: &Rational) -> Rational {
        self.eval(t)
    }

    fn parse(s: &str) -> Result<Self> {
        parse_qt(s)
    }
}

/// `det(x*I - m)` over Q via the division-free route on `D*m`, `D` the
/// common denominator: `chi_m(x) = D^-n chi_{Dm}(D x)`. Elimination over Q
/// is far slower here because entries grow during the reduction.
pub fn charpoly_rational(m: &Matrix<Rational>) -> Poly<Rational> {
    let mut d = Integer::from(1);
    for row in m.rows() {
        for c in row {
            d = d.lcm(c.denom());
        }
    }
    let dq = Rational::from_integer(d);
    let scaled = m.map(|c| (c * &dq).to_integer());
    let chi = charpoly_berkowitz(&scaled);
    let n = chi.degree().unwrap_or(0);
    let mut factor = Rational::one();
    let mut coeffs: Vec<Rational> = Vec::with_capacity(n + 1);
    for i in (0..=n).rev() {
        coeffs.push(Rational::from_integer(chi.coeff(i)) * &factor);
        factor /= &dq;
    }
    coeffs.reverse();
    Poly::new(coeffs)
}

/// Writes `f` with descending powers of `var`, e.g. `2*t^2 - 1/3*t + 5`.
pub fn pretty_poly(f: &Poly<Rational>, var: &str) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", format_rational(&mag), mono));
        }
    }
    out
}

/// Generic pretty printer for polynomials over a scalar ring, with the
/// coefficient in parentheses when it is not a plain rational.
pub fn pretty_poly_over<S: Scalar>(f: &Poly<S>, var: &str) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<String> = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let coeff = match c.as_rational() {
            Some(q) => {
                if mono.is_empty() {
                    format_rational(&q)
                } else if q.is_one() {
                    mono.clone()
                } else if q == -Rational::one() {
                    format!("-{mono}")
                } else {
                    format!("{}*{}", format_rational(&q), mono)
                }
            }
            None => {
                if mono.is_empty() {
                    format!("({})", c.pretty())
                } else {
                    format!("({})*{}", c.pretty(), mono)
                }
            }
        };
        terms.push(coeff);
    }
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

/// Parses an expression in `t` with rational constants: `+ - * / ^`,
/// parentheses, and integer exponents. Division only by constants.
pub fn parse_qt(s: &str) -> Result<Qt> {
    let cleaned: String = s.replace('\u{2212}', "-");
    let tokens = tokenize(&cleaned)?;
    let mut parser = ExprParser { tokens: &tokens, pos: 0, src: s };
    let value = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(num_bigint::BigInt),
    Var,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Num(digits.parse().expect("digits")));
            }
            't' => {
                out.push(Token::Var);
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Token::Op(c));
                i += 1;
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    Ok(out)
}

struct ExprParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    src: &'a str,
}

impl ExprParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Qt> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Qt> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let rhs = self.unary()?;
                let q = match rhs.degree() {
                    Some(0) => rhs.coeff(0),
                    None => return Err(self.error("division by zero")),
                    Some(_) => return Err(self.error("division by a non-constant")),
                };
                acc = acc.scale(&q.recip());
            } else if matches!(self.peek(), Some(Token::Var) | Some(Token::Op('('))) {
                // implicit multiplication: 2t, 3(t+1)
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Qt> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Qt> {
        let base = self.atom()?;
        if self.eat('^') {
            let Some(Token::Num(e)) = self.peek().cloned() else {
                return Err(self.error("expected an integer exponent"));
            };
            self.pos += 1;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Qt> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(Rational::from_integer(n)))
            }
            Some(Token::Var) => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.error("expected a number, t, or '('")),
        }
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_poly(self, "x"))
    }
}
