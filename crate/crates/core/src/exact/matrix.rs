//! Exact linear algebra: rank, determinant, kernels over exact fields, and
//! fraction-free Bareiss elimination for matrices of Laurent polynomials.

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::rational::Rat;

/// Exact field operations, enough for Gaussian elimination.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Field for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        Rat::one() / self.clone()
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn inv(&self) -> Self {
        Cyclotomic::inv(self)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn inv(&self) -> Self {
        RatFunc::inv(self)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

/// Dense rectangular matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("matrix is not square ({rows}x{cols})")]
pub struct NonSquare {
    pub rows: usize,
    pub cols: usize,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl<T: Field> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul_mat(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    /// Row-reduce in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.at(r, c).inv();
            for j in c..self.cols {
                let v = self.at(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j).sub(&f.mul(self.at(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of the right kernel (column vectors with `self * v = 0`).
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = vec![];
        for &f in &free {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.at(r, f).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> Result<T, NonSquare> {
        if self.rows != self.cols {
            return Err(NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = det.neg();
            }
            det = det.mul(m.at(c, c));
            let inv = m.at(c, c).inv();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..n {
                    let v = m.at(i, j).sub(&f.mul(m.at(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

impl Matrix<LaurentPoly> {
    /// Fraction-free Bareiss elimination. Returns (rank, determinant-so-far).
    /// The determinant value is meaningful only for square matrices of full
    /// rank; it is exact including sign.
    fn bareiss(&self) -> (usize, LaurentPoly) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut prev = LaurentPoly::one();
        let mut sign = false;
        let mut r = 0;
        let mut last_pivot = LaurentPoly::one();
        for c in 0..cols {
            if r == rows {
                break;
            }
            // Least-complexity pivot.
            let pivot_row = (r..rows)
                .filter(|&i| !m.at(i, c).is_zero())
                .min_by_key(|&i| m.at(i, c).complexity());
            let Some(p) = pivot_row else { continue };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
                sign = !sign;
            }
            let pivot = m.at(r, c).clone();
            for i in r + 1..rows {
                for j in c + 1..cols {
                    // m[i][j] = (pivot*m[i][j] - m[i][c]*m[r][j]) / prev
                    let t = pivot
                        .mul(m.at(i, j))
                        .sub(&m.at(i, c).mul(m.at(r, j)));
                    let v = t
                        .exact_div(&prev)
                        .expect("Bareiss division must be exact");
                    m.set(i, j, v);
                }
                m.set(i, c, LaurentPoly::zero());
            }
            prev = pivot.clone();
            last_pivot = pivot;
            r += 1;
        }
        let det = if sign { last_pivot.neg() } else { last_pivot };
        (r, det)
    }

    pub fn bareiss_rank(&self) -> usize {
        self.bareiss().0
    }

    /// Exact determinant of a square Laurent-polynomial matrix.
    pub fn bareiss_det(&self) -> Result<LaurentPoly, NonSquare> {
        if self.rows != self.cols {
            return Err(NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(LaurentPoly::one());
        }
        let (rank, det) = self.bareiss();
        if rank < self.rows {
            Ok(LaurentPoly::zero())
        } else {
            Ok(det)
        }
    }
}

impl Matrix<RatFunc> {
    /// Clear denominators rowwise, returning the polynomial matrix and the
    /// product of all row factors. Repeated denominators within a row are
    /// only counted once.
    fn cleared(&self) -> (Matrix<LaurentPoly>, RatFunc) {
        let mut factor = RatFunc::one();
        let m = Matrix::from_rows(
            (0..self.rows)
                .map(|i| {
                    let mut row_den = LaurentPoly::one();
                    for j in 0..self.cols {
                        let d = self.at(i, j).denominator();
                        if row_den.exact_div(d).is_none() {
                            row_den = row_den.mul(d);
                        }
                    }
                    factor = factor.mul(&RatFunc::from_poly(row_den.clone()));
                    (0..self.cols)
                        .map(|j| {
                            let e = self.at(i, j);
                            let rest = row_den
                                .exact_div(e.denominator())
                                .expect("row denominator divisible by entry denominator");
                            e.numerator().mul(&rest)
                        })
                        .collect()
                })
                .collect(),
        );
        (m, factor)
    }

    /// Exact rank via fraction-free elimination on the cleared matrix.
    pub fn rank_ff(&self) -> usize {
        let (m, _) = self.cleared();
        m.bareiss_rank()
    }

    /// Exact determinant via Bareiss on the cleared matrix.
    pub fn det_ff(&self) -> Result<RatFunc, NonSquare> {
        let (m, factor) = self.cleared();
        let det = m.bareiss_det()?;
        Ok(RatFunc::from_poly(det).div(&factor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::{var_z, VAR_Q};

    fn rf(n: i64) -> RatFunc {
        RatFunc::from_i64(n)
    }

    #[test]
    fn rank_of_small_matrices() {
        let id = Matrix::from_rows(vec![vec![rf(1), rf(0)], vec![rf(0), rf(1)]]);
        assert_eq!(id.rank(), 2);
        assert_eq!(id.rank_ff(), 2);
        let perm = Matrix::from_rows(vec![vec![rf(0), rf(1)], vec![rf(1), rf(0)]]);
        assert_eq!(perm.rank_ff(), 2);
        let zero: Matrix<RatFunc> = Matrix::from_rows(vec![vec![rf(0)]]);
        assert_eq!(zero.rank_ff(), 0);
    }

    #[test]
    fn determinant_formulas() {
        let x = RatFunc::var(var_z(1));
        let m = Matrix::from_rows(vec![vec![x.clone()]]);
        assert_eq!(m.det_ff().unwrap(), x);
        // [[a,b],[c,d]] -> ad - bc with Laurent entries
        let a = RatFunc::var(VAR_Q);
        let b = rf(2);
        let c = RatFunc::var(VAR_Q).inv();
        let d = rf(5);
        let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]);
        let expect = a.mul(&d).sub(&b.mul(&c));
        assert_eq!(m.det_ff().unwrap(), expect);
        assert_eq!(m.determinant().unwrap(), expect);
    }

    #[test]
    fn kernel_and_rank_agree() {
        let m = Matrix::from_rows(vec![
            vec![rf(1), rf(2), rf(3)],
            vec![rf(2), rf(4), rf(6)],
        ]);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let out = m.apply(&v);
            assert!(out.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let q = RatFunc::var(VAR_Q);
        let m = Matrix::from_rows(vec![
            vec![q.clone(), rf(1), q.pow(2)],
            vec![q.pow(2), q.clone(), q.pow(3)],
        ]);
        assert_eq!(m.rank_ff(), m.transpose().rank_ff());
    }
}
