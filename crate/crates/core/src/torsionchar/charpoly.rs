use std::fmt;

use crate::curve::{LinearFunction, WeierstrassCurve};
use crate::divpoly::DivisionPolynomials;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::linalg::Matrix;
use crate::polyring::{resultant, Poly, Ring};
use crate::scalar::Scalar;

use super::coord::{CoordElem, QuotientRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Matrix,
    Resultant,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Matrix => "matrix",
            Method::Resultant => "resultant",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matrix" => Ok(Method::Matrix),
            "resultant" => Ok(Method::Resultant),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// The characteristic polynomial of multiplication by `u` on the
/// coordinate ring of the points of exact order `n`, i.e. the monic
/// polynomial whose roots are the values `u(P)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyResult<R: Scalar> {
    pub chi: Poly<R>,
    pub curve: WeierstrassCurve<R>,
    pub u: LinearFunction,
    pub n: usize,
    pub method: Method,
}

impl<R: Scalar> CharPolyResult<R> {
    pub fn degree(&self) -> usize {
        self.chi.degree().unwrap_or(0)
    }
}

fn check_inputs<R: Scalar>(curve: &WeierstrassCurve<R>, u: &LinearFunction, n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "characteristic polynomial needs n >= 3 (use the n = 2 variant), got {n}"
        )));
    }
    u.check_admissible(curve)
}

/// Matrix of multiplication by `u` on `K[x, y] / (psi_tilde_n, w_E)`.
pub fn multiplication_matrix<R: Scalar>(ring: &QuotientRing<R>, u: &LinearFunction) -> Matrix<R> {
    let dim = ring.dimension();
    let u_elem = CoordElem::from_linear(u);
    let mut m = Matrix::zeros(dim, dim);
    for j in 0..dim {
        let image = ring.mul(&u_elem, &ring.basis_element(j));
        for (i, c) in ring.coordinates(&image).into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    m
}

/// `chi_{u,n}` as the characteristic polynomial of the multiplication
/// matrix.
pub fn charpoly_matrix<R: Scalar>(
    curve: &WeierstrassCurve<R>,
    u: &LinearFunction,
    n: usize,
) -> Result<CharPolyResult<R>> {
    charpoly_matrix_with(&DivisionPolynomials::new(curve), u, n)
}

pub fn charpoly_matrix_with<R: Scalar>(
    divpolys: &DivisionPolynomials<R>,
    u: &LinearFunction,
    n: usize,
) -> Result<CharPolyResult<R>> {
    let curve = divpolys.curve();
    check_inputs(curve, u, n)?;
    let ring = QuotientRing::new(curve.clone(), &*divpolys.psi_tilde(n)?)?;
    let chi = R::charpoly(&multiplication_matrix(&ring, u));
    Ok(CharPolyResult {
        chi,
        curve: curve.clone(),
        u: u.clone(),
        n,
        method: Method::Matrix,
    })
}

/// `w_E(X, Y) = Y^2 + a1 X Y + a3 Y - X^3 - a2 X^2 - a4 X - a6` as a
/// polynomial in `X` with coefficients in `R[Y]`.
pub fn curve_equation_in_x<R: Scalar>(curve: &WeierstrassCurve<R>) -> Poly<Poly<R>> {
    let [a1, a2, a3, a4, a6] = curve.coefficients();
    Poly::new(vec![
        Poly::new(vec![a6.neg(), a3.clone(), R::one()]),
        Poly::new(vec![a4.neg(), a1.clone()]),
        Poly::constant(a2.neg()),
        Poly::constant(R::from_i64(-1)),
    ])
}

/// `chi_{y,n} = Res_X(psi_tilde_n, w_E) / r^3`, with `r` the leading
/// coefficient of `psi_tilde_n`.
fn charpoly_y_by_resultant<R: Scalar>(divpolys: &DivisionPolynomials<R>, n: usize) -> Result<Poly<R>> {
    let psi = divpolys.psi_tilde(n)?;
    let lead = psi
        .lc()
        .as_rational()
        .ok_or_else(|| Error::Internal("non-constant leading coefficient".into()))?;
    let psi_y: Poly<Poly<R>> = psi.map(|c| Poly::constant(c.clone()));
    let res = resultant(&psi_y, &curve_equation_in_x(divpolys.curve()))?;
    let inv = (&lead * &lead * &lead).recip();
    Ok(res.map(|c| c.scale_q(&inv)))
}

/// `chi_{u,n}` through the resultant on the curve where `u` is the
/// `y`-coordinate.
pub fn charpoly_resultant<R: Scalar>(
    curve: &WeierstrassCurve<R>,
    u: &LinearFunction,
    n: usize,
) -> Result<CharPolyResult<R>> {
    check_inputs(curve, u, n)?;
    let moved = curve.transform_for_u(u)?;
    let chi_y = charpoly_y_by_resultant(&DivisionPolynomials::new(&moved), n)?;
    // On the moved curve y' = a^2 u, so chi_u(T) = a^(-2D) chi_y'(a^2 T).
    let dim = chi_y.degree().unwrap_or(0);
    let a2 = &u.a * &u.a;
    let a2_inv = a2.recip();
    let mut factor = Rational::one();
    for _ in 0..dim {
        factor *= &a2_inv;
    }
    let coeffs = chi_y
        .coeffs()
        .iter()
        .map(|c| {
            let out = c.scale_q(&factor);
            factor *= &a2;
            out
        })
        .collect();
    let chi = Poly::new(coeffs);
    if !chi.is_monic() {
        return Err(Error::Internal("resultant route produced a non-monic polynomial".into()));
    }
    Ok(CharPolyResult {
        chi,
        curve: curve.clone(),
        u: u.clone(),
        n,
        method: Method::Resultant,
    })
}

/// Dispatch on the method.
pub fn charpoly<R: Scalar>(
    curve: &WeierstrassCurve<R>,
    u: &LinearFunction,
    n: usize,
    method: Method,
) -> Result<CharPolyResult<R>> {
    match method {
        Method::Matrix => charpoly_matrix(curve, u, n),
        Method::Resultant => charpoly_resultant(curve, u, n),
    }
}

/// `chi_{x,2} = psi_2^2 / 4`, the monic cubic whose roots are the
/// `x`-coordinates of the points of order two.
pub fn charpoly_n2<R: Scalar>(curve: &WeierstrassCurve<R>) -> CharPolyResult<R> {
    let quarter = Rational::new(1.into(), 4.into());
    CharPolyResult {
        chi: curve.psi2_squared().map(|c| c.scale_q(&quarter)),
        curve: curve.clone(),
        u: LinearFunction::from_i64(0, 1, 0),
        n: 2,
        method: Method::Matrix,
    }
}
