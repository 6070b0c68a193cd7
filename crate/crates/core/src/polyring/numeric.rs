//! Simultaneous complex root finding (Aberth-Ehrlich iteration).
//!
//! Only used as a validation oracle; results are never fed back into exact
//! computations.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

use super::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    pub max_iterations: usize,
    /// Stop once every root moves less than this (relative to its size).
    pub step_tolerance: f64,
    /// Accept only if every relative residual is below this.
    pub residual_tolerance: f64,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            max_iterations: 1000,
            step_tolerance: 1e-12,
            residual_tolerance: 1e-8,
        }
    }
}

pub fn to_f64_coeffs(f: &Poly<Rational>) -> Vec<f64> {
    f.coeffs().iter().map(rational_to_f64).collect()
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// `|f(z)| / sum |c_i| max(1, |z|)^i`. Normwise rather than per point, so
/// a root computed as `1e-17` in place of an exact `0` still scores near
/// zero.
pub fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let mut value = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let r = z.norm().max(1.0);
    for c in coeffs.iter().rev() {
        value = value * z + c;
        scale = scale * r + c.abs();
    }
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}

pub fn eval_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// All `deg f` complex roots of a squarefree rational polynomial.
pub fn numeric_roots(f: &Poly<Rational>, opts: RootOptions) -> Result<Vec<Complex64>> {
    numeric_roots_f64(&to_f64_coeffs(f), opts)
}

pub fn numeric_roots_f64(coeffs: &[f64], opts: RootOptions) -> Result<Vec<Complex64>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidArgument("coefficient not representable as f64".into()));
    }
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let deriv: Vec<f64> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();

    // Fujiwara-style radius for the starting circle.
    let radius = (0..n)
        .map(|i| monic[i].abs().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * (1.0 + 0.01 * k as f64 / n as f64), angle)
        })
        .collect();

    for _ in 0..opts.max_iterations {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let p = eval_complex(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let dp = eval_complex(&deriv, z[i]);
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < opts.step_tolerance {
            let worst = z
                .iter()
                .map(|&r| relative_residual(&monic, r))
                .fold(0.0f64, f64::max);
            if worst <= opts.residual_tolerance {
                return Ok(z);
            }
        }
    }
    let worst = z
        .iter()
        .map(|&r| relative_residual(&monic, r))
        .fold(0.0f64, f64::max);
    if worst <= opts.residual_tolerance {
        return Ok(z);
    }
    Err(Error::NonConvergence {
        iterations: opts.max_iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    #[test]
    fn sqrt_two() {
        let r = sorted(numeric_roots(&Poly::from_i64s(&[-2, 0, 1]), RootOptions::default()).unwrap());
        assert!((r[0].re + 2f64.sqrt()).abs() < 1e-10 && r[0].im.abs() < 1e-10);
        assert!((r[1].re - 2f64.sqrt()).abs() < 1e-10 && r[1].im.abs() < 1e-10);
    }

    #[test]
    fn cube_roots_of_unity() {
        let r = numeric_roots(&Poly::from_i64s(&[-1, 0, 0, 1]), RootOptions::default()).unwrap();
        for z in &r {
            assert!((z.powu(3) - 1.0).norm() < 1e-10);
        }
        let re_sum: f64 = r.iter().map(|z| z.re).sum();
        assert!(re_sum.abs() < 1e-10);
    }

    #[test]
    fn psi3_of_cube_curve() {
        // 3x^4 + 3x = 3x(x+1)(x^2-x+1)
        let r = sorted(numeric_roots(&Poly::from_i64s(&[0, 3, 0, 0, 3]), RootOptions::default()).unwrap());
        let expected = sorted(vec![
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, -0.75f64.sqrt()),
            Complex64::new(0.5, 0.75f64.sqrt()),
        ]);
        for (a, b) in r.iter().zip(&expected) {
            assert!((a - b).norm() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn reconstruction_degree_24() {
        // pseudo-random integer coefficients in [-9, 9], monic
        let mut state = 12345u64;
        let mut cs: Vec<i64> = (0..24)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 19) as i64 - 9
            })
            .collect();
        cs.push(1);
        let f = Poly::<Rational>::from_i64s(&cs);
        let roots = numeric_roots(&f, RootOptions::default()).unwrap();
        let mut prod = vec![Complex64::new(1.0, 0.0)];
        for z in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); prod.len() + 1];
            for (i, c) in prod.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * z;
            }
            prod = next;
        }
        for (a, &b) in prod.iter().zip(&cs) {
            let b = b as f64;
            assert!((a - b).norm() <= 1e-6 * b.abs().max(1.0), "{a} vs {b}");
        }
    }
}
