//! Dense matrices over exact rings: fraction-free determinants and
//! characteristic polynomials.

use rayon::prelude::*;

use crate::polyring::{Domain, Field, Poly, Ring};

/// Row-major dense square or rectangular matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: Vec<Vec<R>>,
    ncols: usize,
}

/// Row updates are spread over threads only above this many entries.
const PARALLEL_THRESHOLD: usize = 256;

impl<R: Ring> Matrix<R> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            rows: vec![vec![R::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        Matrix { rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    fn is_square(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
            ncols: self.ncols,
        }
    }

    /// `x*I - self` with entries in `R[x]`.
    pub fn characteristic_matrix(&self) -> Matrix<Poly<R>> {
        assert!(self.is_square());
        let mut out = self.map(|a| Poly::constant(a.neg()));
        for i in 0..self.nrows() {
            let d = Poly::new(vec![self.rows[i][i].neg(), R::one()]);
            out.set(i, i, d);
        }
        out
    }
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division is exact in `R`. The pivot in each column is the nonzero
/// candidate with the smallest `size_hint`, which keeps constant pivots in
/// play when the matrix mixes constants and polynomials.
pub fn bareiss_determinant<R: Domain>(matrix: &Matrix<R>) -> R {
    assert!(matrix.is_square(), "determinant of a non-square matrix");
    let n = matrix.nrows();
    if n == 0 {
        return R::one();
    }
    let mut m = matrix.rows.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        let pivot_row = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].size_hint());
        let Some(p) = pivot_row else {
            return R::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        let update = |row: &mut Vec<R>| {
            let factor = row[k].clone();
            if factor.is_zero() {
                if pivot == &prev {
                    return;
                }
                for entry in row.iter_mut().skip(k + 1) {
                    if !entry.is_zero() {
                        *entry = pivot
                            .mul(entry)
                            .div_exact(&prev)
                            .expect("Bareiss division is exact");
                    }
                }
                return;
            }
            for j in k + 1..n {
                let t = pivot.mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                row[j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[k] = R::zero();
        };
        if (n - k) * (n - k) >= PARALLEL_THRESHOLD {
            tail.par_iter_mut().for_each(update);
        } else {
            tail.iter_mut().for_each(update);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// `det(x*I - A)` over a field, via reduction to upper Hessenberg form.
pub fn charpoly_hessenberg<F: Field>(matrix: &Matrix<F>) -> Poly<F> {
    assert!(matrix.is_square());
    let n = matrix.nrows();
    let mut h = matrix.rows.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let t_inv = h[m][m - 1].inv().expect("nonzero pivot");
        for i in m + 1..n {
            if h[i][m - 1].is_zero() {
                continue;
            }
            let u = h[i][m - 1].mul(&t_inv);
            // row_i -= u * row_m
            let (upper, lower) = h.split_at_mut(i);
            let row_m = &upper[m];
            for (a, b) in lower[0].iter_mut().zip(row_m.iter()) {
                if !b.is_zero() {
                    *a = a.sub(&u.mul(b));
                }
            }
            // col_m += u * col_i
            for row in h.iter_mut() {
                if !row[i].is_zero() {
                    row[m] = row[m].add(&u.mul(&row[i]));
                }
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im * prod_{j=i+1..m} h_{j,j-1} * p_{i-1}
    let mut p: Vec<Poly<F>> = Vec::with_capacity(n + 1);
    p.push(Poly::one());
    for m in 0..n {
        let mut next = Poly::new(vec![h[m][m].neg(), F::one()]).mul(&p[m]);
        let mut t = F::one();
        for i in (0..m).rev() {
            t = t.mul(&h[i + 1][i]);
            if t.is_zero() {
                break;
            }
            if !h[i][m].is_zero() {
                next = next.sub(&p[i].scale(&h[i][m].mul(&t)));
            }
        }
        p.push(next);
    }
    p.pop().expect("nonempty")
}

/// `det(x*I - A)` over any commutative ring (Berkowitz, division free).
pub fn charpoly_berkowitz<R: Ring>(matrix: &Matrix<R>) -> Poly<R> {
    assert!(matrix.is_square());
    let n = matrix.nrows();
    let a = &matrix.rows;
    // descending coefficients of the char poly of the leading r x r block
    let mut v: Vec<R> = vec![R::one()];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        let mut col = Vec::with_capacity(r + 2);
        col.push(R::one());
        col.push(a[r][r].neg());
        let mut w: Vec<R> = (0..r).map(|i| a[i][r].clone()).collect();
        for k in 0..r {
            let dot = (0..r)
                .filter(|&j| !a[r][j].is_zero() && !w[j].is_zero())
                .fold(R::zero(), |acc, j| acc.add(&a[r][j].mul(&w[j])));
            col.push(dot.neg());
            if k + 1 < r {
                w = matvec(a, &w, r);
            }
        }
        let mut next = vec![R::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i + 1) {
                if !vj.is_zero() && !col[i - j].is_zero() {
                    *slot = slot.add(&col[i - j].mul(vj));
                }
            }
        }
        v = next;
    }
    v.reverse();
    Poly::new(v)
}

/// Leading `r x r` block of `a` times `w`.
fn matvec<R: Ring>(a: &[Vec<R>], w: &[R], r: usize) -> Vec<R> {
    let row = |i: usize| {
        (0..r)
            .filter(|&j| !a[i][j].is_zero() && !w[j].is_zero())
            .fold(R::zero(), |acc, j| acc.add(&a[i][j].mul(&w[j])))
    };
    if r * r >= PARALLEL_THRESHOLD {
        (0..r).into_par_iter().map(row).collect()
    } else {
        (0..r).map(row).collect()
    }
}
