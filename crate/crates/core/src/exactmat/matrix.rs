use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals. Zero-sized shapes are allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_vec",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds from row vectors; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                op: "from_rows",
                left: (r, c),
                right: (1, bad.len()),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix from fixed-width rows; handy for literals.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |i, j| int(rows[i][j]))
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]` (0-based).
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut p = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            p[(i, j)] = Rational::one();
        }
        p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn check_same_shape(&self, other: &Matrix, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// Exact product; fails when `self.cols != other.rows`.
    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A^k` with `A^0 = I`, by repeated squaring.
    pub fn pow(&self, k: usize) -> Result<Matrix> {
        let n = self.require_square("mat_pow")?;
        let mut result = Matrix::identity(n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Square-only power for internal formula code where the shape is known.
    pub(crate) fn p(&self, k: usize) -> Matrix {
        self.pow(k).expect("power of a non-square matrix")
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn hstack(parts: &[&Matrix]) -> Result<Matrix> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if let Some(bad) = parts.iter().find(|m| m.rows != rows) {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                left: (rows, 0),
                right: bad.shape(),
            });
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for m in parts {
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        Ok(out)
    }

    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if let Some(bad) = parts.iter().find(|m| m.cols != cols) {
            return Err(Error::DimensionMismatch {
                op: "vstack",
                left: (0, cols),
                right: bad.shape(),
            });
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for m in parts {
            out.set_block(r0, 0, m);
            r0 += m.rows;
        }
        Ok(out)
    }

    /// `[[a, b], [c, d]]`; rows and columns of the four blocks must line up.
    pub fn block2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
        let top = Matrix::hstack(&[a, b])?;
        let bottom = Matrix::hstack(&[c, d])?;
        Matrix::vstack(&[&top, &bottom])
    }

    /// Block diagonal matrix.
    pub fn diag_blocks(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|m| m.rows).sum();
        let cols = blocks.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in blocks {
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Row-major vectorisation.
    pub fn vectorize(&self) -> &[Rational] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; public entry points validate shapes
// first and then use these inside formulas.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                (&self).$method(rhs)
            }
        }
        impl $trait<Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, mat_mul);

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::rational::frac;

    fn jordan(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| if j == i + 1 { int(1) } else { int(0) })
    }

    #[test]
    fn identity_is_neutral() {
        let x = Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        let i3 = Matrix::identity(3);
        assert_eq!(&i3 * &x, x);
        assert_eq!(&x * &i3, x);
    }

    #[test]
    fn mismatched_product_is_error() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(a.mat_mul(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn powers() {
        assert!(jordan(3).pow(3).unwrap().is_zero());
        assert!(!jordan(3).pow(2).unwrap().is_zero());
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert!(a.pow(0).unwrap().is_identity());
        let d = Matrix::diagonal(&[int(2), int(3)]);
        // repeated multiplication oracle
        let mut expect = Matrix::identity(2);
        for _ in 0..5 {
            expect = &expect * &d;
        }
        assert_eq!(d.pow(5).unwrap(), expect);
        assert_eq!(expect, Matrix::diagonal(&[int(32), int(243)]));
        assert!(matches!(Matrix::zeros(2, 3).pow(2), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn empty_shapes() {
        let a = Matrix::zeros(0, 3);
        let b = Matrix::zeros(3, 0);
        assert_eq!((&a * &b).shape(), (0, 0));
        assert_eq!((&b * &a).shape(), (3, 3));
        assert!((&b * &a).is_zero());
        assert!(Matrix::zeros(0, 0).pow(4).unwrap().is_identity());
    }

    #[test]
    fn blocks_assemble() {
        let a = Matrix::from_ints(&[[1]]);
        let b = Matrix::from_ints(&[[2, 3]]);
        let c = Matrix::from_ints(&[[4], [5]]);
        let d = Matrix::zeros(2, 2);
        let m = Matrix::block2(&a, &b, &c, &d).unwrap();
        assert_eq!(m, Matrix::from_ints(&[[1, 2, 3], [4, 0, 0], [5, 0, 0]]));
        assert_eq!(m.submatrix(1, 3, 0, 1), c);
        assert!(Matrix::block2(&a, &c, &b, &d).is_err());
        let dg = Matrix::diag_blocks(&[&a, &Matrix::zeros(0, 0), &d]);
        assert_eq!(dg.shape(), (3, 3));
    }

    #[test]
    fn permutation_matrix_moves_basis() {
        let p = Matrix::permutation(&[1, 2, 0]);
        let e0 = Matrix::from_ints(&[[1], [0], [0]]);
        assert_eq!(&p * &e0, Matrix::from_ints(&[[0], [1], [0]]));
        assert!((&p * &p.transpose()).is_identity());
    }

    #[test]
    fn scale_and_neg() {
        let a = Matrix::from_ints(&[[2, -4]]);
        assert_eq!(a.scale(&frac(1, 2)), Matrix::from_ints(&[[1, -2]]));
        assert_eq!(-&a, Matrix::from_ints(&[[-2, 4]]));
    }
}
