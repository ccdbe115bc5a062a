use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactDiv, Field, Poly, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix over a commutative ring.
///
/// Arithmetic operators panic on shape mismatch, like indexing out of
/// bounds; constructors and the checked operations validate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Ordered index pairs `(i, j)`, `i < j`, in lexicographic order. This is
/// the basis `e_i ^ e_j` of the second exterior power.
pub fn wedge_basis(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::validation("matrix rows have different lengths"));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(entries: &[R]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { R::zero() })
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn from_columns(columns: &[Vec<R>]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|col| col.len() != r) {
            return Err(Error::validation("matrix columns have different lengths"));
        }
        Ok(Matrix::from_fn(r, c, |i, j| columns[j][i].clone()))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn trace(&self) -> R {
        (0..self.rows.min(self.cols)).fold(R::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && self.transpose() == -self
    }

    /// Rows `rows`, columns `cols`, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |i, j| self.get(row0 + i, col0 + j).clone())
    }

    /// `[[a, b], [c, d]]` assembled from four blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::validation("block shapes do not fit together"));
        }
        Ok(Matrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < a.rows, j < a.cols) {
                (true, true) => a.get(i, j).clone(),
                (true, false) => b.get(i, j - a.cols).clone(),
                (false, true) => c.get(i - a.rows, j).clone(),
                (false, false) => d.get(i - a.rows, j - a.cols).clone(),
            }
        }))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::validation(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self * rhs)
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    /// Kronecker product; row and column index `(i, k)` maps to `i * n + k`
    /// where `n` is the size of `rhs` (lexicographic tensor basis).
    pub fn kronecker(&self, rhs: &Self) -> Self {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (i, k) = (r / rhs.rows, r % rhs.rows);
            let (j, l) = (c / rhs.cols, c % rhs.cols);
            self.get(i, j).mul_ref(rhs.get(k, l))
        })
    }

    /// Second compound matrix: the action on `Λ²` in the lexicographic basis
    /// `e_i ^ e_j`, entries are the 2x2 minors.
    pub fn compound2(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::validation("second compound needs a square matrix"));
        }
        let basis = wedge_basis(self.rows);
        Ok(Matrix::from_fn(basis.len(), basis.len(), |r, c| {
            let (i, j) = basis[r];
            let (k, l) = basis[c];
            self.get(i, k)
                .mul_ref(self.get(j, l))
                .sub_ref(&self.get(i, l).mul_ref(self.get(j, k)))
        }))
    }

    /// `Λ²M` for a 4x4 matrix, in the basis e12, e13, e14, e23, e24, e34.
    pub fn exterior_square(&self) -> Result<Self> {
        if self.rows != 4 || self.cols != 4 {
            return Err(Error::validation(format!(
                "exterior square expects a 4x4 matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        self.compound2()
    }

    /// The derivation `v ^ w -> Av ^ w + v ^ Aw` on `Λ²`, i.e. `A ⊗ I + I ⊗ A`
    /// restricted to antisymmetric tensors.
    pub fn wedge_derivation(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::validation("wedge derivation needs a square matrix"));
        }
        let n = self.rows;
        let basis = wedge_basis(n);
        let index = |a: usize, b: usize| basis.iter().position(|&p| p == (a, b)).unwrap();
        let mut out = Matrix::<R>::zeros(basis.len(), basis.len());
        let mut accumulate = |row_pair: (usize, usize), col: usize, v: &R| {
            let (a, b) = row_pair;
            if a == b || v.is_zero() {
                return;
            }
            let (r, value) = if a < b { (index(a, b), v.clone()) } else { (index(b, a), v.neg_ref()) };
            let cur = out.get(r, col).add_ref(&value);
            out.set(r, col, cur);
        };
        for (col, &(i, j)) in basis.iter().enumerate() {
            for k in 0..n {
                accumulate((k, j), col, self.get(k, i));
                accumulate((i, k), col, self.get(k, j));
            }
        }
        Ok(out)
    }

    /// `det(tI - M)` by Berkowitz's algorithm: no divisions, so it works
    /// over any commutative ring.
    pub fn char_poly(&self) -> Result<Poly<R>> {
        if !self.is_square() {
            return Err(Error::validation(format!(
                "characteristic polynomial of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        // `v` holds det(tI - M_k) for the leading k x k block, highest degree first.
        let mut v: Vec<R> = vec![R::one()];
        for k in 0..n {
            // Leading block is k x k; row/column k is the new border.
            let a = self.get(k, k).clone();
            let row: Vec<R> = (0..k).map(|j| self.get(k, j).clone()).collect();
            let col: Vec<R> = (0..k).map(|i| self.get(i, k).clone()).collect();
            // Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
            let mut toeplitz = Vec::with_capacity(k + 2);
            toeplitz.push(R::one());
            toeplitz.push(a.neg_ref());
            let mut current = col;
            for _ in 0..k {
                let dot = row
                    .iter()
                    .zip(&current)
                    .fold(R::zero(), |acc, (r, c)| acc.add_ref(&r.mul_ref(c)));
                toeplitz.push(dot.neg_ref());
                current = (0..k)
                    .map(|i| {
                        (0..k).fold(R::zero(), |acc, j| acc.add_ref(&self.get(i, j).mul_ref(&current[j])))
                    })
                    .collect();
            }
            let mut next = Vec::with_capacity(k + 2);
            for i in 0..k + 2 {
                let mut acc = R::zero();
                for (j, vj) in v.iter().enumerate() {
                    if i >= j {
                        acc = acc.add_ref(&toeplitz[i - j].mul_ref(vj));
                    }
                }
                next.push(acc);
            }
            v = next;
        }
        v.reverse();
        Ok(Poly::new(v))
    }

    /// Determinant without divisions (from the characteristic polynomial).
    pub fn det_division_free(&self) -> Result<R> {
        let cp = self.char_poly()?;
        let c0 = cp.coeff(0);
        Ok(if self.rows % 2 == 1 { c0.neg_ref() } else { c0 })
    }

    /// Pfaffian by expansion along the first row, normalised so that
    /// `Pf([[0, 1], [-1, 0]]) = 1`.
    pub fn pfaffian(&self) -> Result<R> {
        if !self.is_square() || self.rows % 2 == 1 {
            return Err(Error::validation(format!(
                "Pfaffian needs an even square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if !self.is_antisymmetric() {
            return Err(Error::validation("Pfaffian needs an antisymmetric matrix"));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pfaffian_on(&idx))
    }

    fn pfaffian_on(&self, idx: &[usize]) -> R {
        if idx.is_empty() {
            return R::one();
        }
        let first = idx[0];
        let mut acc = R::zero();
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let entry = self.get(first, j);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().copied().filter(|&k| k != first && k != j).collect();
            let term = entry.mul_ref(&self.pfaffian_on(&rest));
            acc = if pos % 2 == 1 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
        }
        acc
    }
}

impl<R: ExactDiv> Matrix<R> {
    /// Determinant by fraction-free (Bareiss) elimination; every division is
    /// exact in an integral domain.
    pub fn det(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::validation(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut m = self.to_rows();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(R::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                    m[i][j] = num
                        .exact_quotient(&prev)
                        .ok_or_else(|| Error::internal("inexact Bareiss division"))?;
                }
                m[i][k] = R::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign_flip { d.neg_ref() } else { d })
    }
}

impl<R: Field> Matrix<R> {
    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::validation("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Matrix::<R>::identity(n).to_rows();
        for k in 0..n {
            let p = (k..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or_else(|| Error::validation("matrix is singular"))?;
            a.swap(k, p);
            inv.swap(k, p);
            let pivot_inv = a[k][k].inv().unwrap();
            for j in 0..n {
                a[k][j] = a[k][j].mul_ref(&pivot_inv);
                inv[k][j] = inv[k][j].mul_ref(&pivot_inv);
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = a[i][j].sub_ref(&f.mul_ref(&a[k][j]));
                    inv[i][j] = inv[i][j].sub_ref(&f.mul_ref(&inv[k][j]));
                }
            }
        }
        Matrix::from_rows(inv)
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot_inv = a[rank][col].inv().unwrap();
            let (top, bottom) = a.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in bottom {
                if row[col].is_zero() {
                    continue;
                }
                let f = row[col].mul_ref(&pivot_inv);
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = x.sub_ref(&f.mul_ref(p));
                }
            }
            rank += 1;
        }
        rank
    }
}

impl<'a, R: Ring> Add<&'a Matrix<R>> for &'a Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, rhs: &'a Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in matrix sum");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }
}

impl<'a, R: Ring> Sub<&'a Matrix<R>> for &'a Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, rhs: &'a Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in matrix difference");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }
}

impl<'a, R: Ring> Mul<&'a Matrix<R>> for &'a Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &'a Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, k| acc.add_ref(&self.get(i, k).mul_ref(rhs.get(k, j))))
        })
    }
}

impl<R: Ring> Neg for &Matrix<R> {
    type Output = Matrix<R>;
    fn neg(self) -> Matrix<R> {
        self.map(|a| a.neg_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    /// Permutation-sum determinant, independent of both elimination and
    /// Berkowitz.
    fn leibniz(m: &Matrix<Q>) -> Q {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut v = p.clone();
                    v.insert(pos, n - 1);
                    out.push(v);
                }
            }
            out
        }
        let n = m.rows();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                let prod = (0..n).fold(q(1), |acc, i| acc * m.get(i, p[i]));
                if inversions % 2 == 0 { prod } else { -prod }
            })
            .sum()
    }

    #[test]
    fn char_poly_examples() {
        let id = Matrix::<Q>::identity(2);
        // (t - 1)^2
        assert_eq!(id.char_poly().unwrap().coeffs(), &[q(1), q(-2), q(1)]);
        let d = Matrix::diagonal(&[q(1), q(-1), q(2), q(-2)]);
        assert_eq!(d.char_poly().unwrap().coeffs(), &[q(4), q(0), q(-5), q(0), q(1)]);
        assert!(qm(&[&[1, 2, 3]]).char_poly().unwrap_err().is_validation());
    }

    #[test]
    fn char_poly_of_polynomial_block() {
        type P = Poly<Q>;
        let beta = P::new(vec![q(1), q(2)]);
        let gamma = P::new(vec![q(0), q(0), q(3)]);
        let m = Matrix::from_rows(vec![vec![P::zero(), beta.clone()], vec![gamma.clone(), P::zero()]]).unwrap();
        let expected = Poly::new(vec![-(&beta * &gamma), P::zero(), P::one()]);
        assert_eq!(m.char_poly().unwrap(), expected);
    }

    #[test]
    fn determinants_agree_with_leibniz() {
        let m = qm(&[&[2, -1, 0, 3], &[1, 4, -2, 0], &[0, 5, 1, -1], &[3, 0, 2, 2]]);
        let expected = leibniz(&m);
        assert_eq!(m.det().unwrap(), expected);
        assert_eq!(m.det_division_free().unwrap(), expected);
        // zero pivot forces a row swap
        let s = qm(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]);
        assert_eq!(s.det().unwrap(), leibniz(&s));
    }

    #[test]
    fn pfaffian_examples() {
        let two = qm(&[&[0, 5], &[-5, 0]]);
        assert_eq!(two.pfaffian().unwrap(), q(5));
        // upper entries (a,b,c,d,e,f) = (1,2,3,4,5,6): af - be + cd = 6 - 10 + 12
        let four = qm(&[&[0, 1, 2, 3], &[-1, 0, 4, 5], &[-2, -4, 0, 6], &[-3, -5, -6, 0]]);
        assert_eq!(four.pfaffian().unwrap(), q(8));
        assert_eq!(four.pfaffian().unwrap().pow(2), four.det().unwrap());
        assert_eq!(Matrix::<Q>::zeros(4, 4).pfaffian().unwrap(), q(0));
        assert!(qm(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]).pfaffian().is_err());
        assert!(qm(&[&[0, 1], &[1, 0]]).pfaffian().is_err());
    }

    #[test]
    fn kronecker_examples() {
        let id2 = Matrix::<Q>::identity(2);
        assert_eq!(id2.kronecker(&id2), Matrix::identity(4));
        let omega = qm(&[&[0, 1], &[-1, 0]]);
        let expected = qm(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(omega.kronecker(&omega), expected);
        let a = Matrix::diagonal(&[q(1), q(-1)]);
        let b = Matrix::diagonal(&[q(2), q(-2)]);
        assert_eq!(a.kronecker(&b), Matrix::diagonal(&[q(2), q(-2), q(-2), q(2)]));
    }

    #[test]
    fn exterior_square_examples() {
        assert_eq!(Matrix::<Q>::identity(4).exterior_square().unwrap(), Matrix::identity(6));
        let d = Matrix::diagonal(&[q(1), q(-1), q(2), q(-2)]);
        let expected = Matrix::diagonal(&[q(-1), q(2), q(-2), q(-2), q(2), q(-4)]);
        assert_eq!(d.exterior_square().unwrap(), expected);
        assert!(Matrix::<Q>::identity(3).exterior_square().is_err());
    }

    #[test]
    fn wedge_derivation_of_diagonal() {
        let d = Matrix::diagonal(&[q(1), q(-1), q(2), q(-2)]);
        let expected = Matrix::diagonal(&[q(0), q(3), q(-1), q(1), q(-3), q(0)]);
        assert_eq!(d.wedge_derivation().unwrap(), expected);
    }

    #[test]
    fn inverse_and_rank() {
        let m = qm(&[&[2, 1], &[5, 3]]);
        assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(2));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_err());
        assert_eq!(qm(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn works_over_machine_integers_and_floats() {
        let m = Matrix::<i64>::from_rows(vec![vec![0, 2, -1, 3], vec![-2, 0, 4, 1], vec![1, -4, 0, 5], vec![-3, -1, -5, 0]]).unwrap();
        let pf = m.pfaffian().unwrap();
        assert_eq!(pf * pf, m.det().unwrap());
        let f = Matrix::<f64>::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(f.det_division_free().unwrap(), -2.0);
    }
}
