use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::{bareiss_determinant, Matrix};

use super::poly::Poly;
use super::ring::{Domain, Field, Ring};

/// Sylvester matrix of `f` and `g`: `deg g` shifted rows of `f` first,
/// then `deg f` shifted rows of `g`; columns run from the highest power
/// down.
pub fn sylvester_matrix<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Matrix<R> {
    let m = f.degree().expect("nonzero f");
    let n = g.degree().expect("nonzero g");
    let size = m + n;
    let mut out = Matrix::zeros(size, size);
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            out.set(row, row + k, c.clone());
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            out.set(n + row, row + k, c.clone());
        }
    }
    out
}

/// `Res(f, g)`, the determinant of the Sylvester matrix.
///
/// With this row order `Res(f, g) = lc(f)^deg(g) * prod g(alpha)` over the
/// roots `alpha` of `f`.
pub fn resultant<R: Domain>(f: &Poly<R>, g: &Poly<R>) -> Result<R> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidArgument("resultant of the zero polynomial".into()));
    }
    Ok(bareiss_determinant(&sylvester_matrix(f, g)))
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant<F: Field>(f: &Poly<F>) -> Result<F> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => {
            return Err(Error::InvalidArgument(
                "discriminant needs degree at least 2".into(),
            ))
        }
    };
    let r = resultant(f, &f.derivative())?.div(&f.lc());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { r.neg() } else { r })
}

/// Discriminant of a rational polynomial.
pub fn discriminant_q(f: &Poly<Rational>) -> Result<Rational> {
    discriminant(f)
}
