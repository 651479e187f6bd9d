//! Dense matrices over an exact commutative ring and their characteristic
//! polynomials.

use super::poly::MultiPoly;
use super::ring::Ring;
use super::upoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &Matrix<R>) -> Result<Matrix<R>> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<R> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!("vector of length {} against {} rows", v.len(), self.rows)));
        }
        let mut out = vec![R::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let b = self.get(k, j);
                if !b.is_zero() {
                    *slot = slot.add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Result<Matrix<R>> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The submatrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Matrix<R> {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    /// Coefficients of `det(lambda I - M)`, lowest degree first.
    ///
    /// Berkowitz's algorithm: division free, so exact over any commutative ring.
    pub fn char_poly_coeffs(&self) -> Result<Vec<R>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "characteristic polynomial of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        // Highest degree first while building.
        let mut v: Vec<R> = vec![R::one()];
        for r in 0..n {
            // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
            let mut col = Vec::with_capacity(r + 2);
            col.push(R::one());
            col.push(self.get(r, r).neg());
            // w = A_r^k C, starting with C = column r above the diagonal.
            let mut w: Vec<R> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let dot = (0..r).fold(R::zero(), |acc, j| acc.add(&self.get(r, j).mul(&w[j])));
                col.push(dot.neg());
                if k + 1 < r {
                    w = (0..r)
                        .map(|i| (0..r).fold(R::zero(), |acc, j| acc.add(&self.get(i, j).mul(&w[j]))))
                        .collect();
                }
            }
            let mut next = Vec::with_capacity(r + 2);
            for i in 0..r + 2 {
                let mut acc = R::zero();
                for (j, vj) in v.iter().enumerate() {
                    if i >= j && !vj.is_zero() {
                        acc = acc.add(&col[i - j].mul(vj));
                    }
                }
                next.push(acc);
            }
            v = next;
        }
        v.reverse();
        Ok(v)
    }
}

/// Characteristic polynomial `det(lambda I - M)` of a polynomial matrix.
///
/// The result's formal variable stands for lambda. Entries must be honest
/// polynomials (no negative exponents).
pub fn char_poly(m: &Matrix<MultiPoly>) -> Result<UniPoly> {
    if m.data.iter().any(MultiPoly::has_negative_exponents) {
        return Err(Error::Precondition("char_poly needs entries without negative exponents".into()));
    }
    Ok(UniPoly::new(m.char_poly_coeffs()?))
}

/// Evaluates a polynomial (coefficients lowest first) at a square matrix.
pub fn eval_at_matrix<R: Ring>(coeffs: &[R], m: &Matrix<R>) -> Result<Matrix<R>> {
    let n = m.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(m)?;
        for i in 0..n {
            let v = acc.get(i, i).add(c);
            acc.set(i, i, v);
        }
    }
    Ok(acc)
}
