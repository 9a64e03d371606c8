//! Gauss-Jordan elimination and everything derived from it.
//!
//! Pivoting is deterministic: columns are processed left to right and the
//! pivot is the first nonzero entry at or below the current row.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced row echelon form together with the invertible `transform`
/// satisfying `transform * source = reduced`.
#[derive(Clone, Debug)]
pub struct RowReduction {
    pub reduced: Matrix,
    pub transform: Matrix,
    pub pivots: Vec<usize>,
}

/// `P * A * Q = [[I_r, 0], [0, 0]]` with `P`, `Q` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankNormalForm {
    pub p: Matrix,
    pub q: Matrix,
    pub rank: usize,
}

impl RankNormalForm {
    /// The `rows x cols` matrix `[[I_r, 0], [0, 0]]`.
    pub fn core(rows: usize, cols: usize, rank: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| {
            if i == j && i < rank {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let tmp = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = tmp;
    }
}

fn scale_row(m: &mut Matrix, r: usize, s: &Rational) {
    for j in 0..m.cols() {
        if !m[(r, j)].is_zero() {
            m[(r, j)] = &m[(r, j)] * s;
        }
    }
}

/// row[target] -= factor * row[source]
fn axpy_row(m: &mut Matrix, target: usize, source: usize, factor: &Rational) {
    for j in 0..m.cols() {
        if !m[(source, j)].is_zero() {
            let delta = factor * &m[(source, j)];
            m[(target, j)] -= delta;
        }
    }
}

pub fn row_reduce(a: &Matrix) -> RowReduction {
    let (m, n) = a.shape();
    let mut r = a.clone();
    let mut p = Matrix::identity(m);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(piv) = (row..m).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        swap_rows(&mut r, piv, row);
        swap_rows(&mut p, piv, row);
        let inv = r[(row, col)].recip();
        scale_row(&mut r, row, &inv);
        scale_row(&mut p, row, &inv);
        for i in 0..m {
            if i != row && !r[(i, col)].is_zero() {
                let f = r[(i, col)].clone();
                axpy_row(&mut r, i, row, &f);
                axpy_row(&mut p, i, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    RowReduction {
        reduced: r,
        transform: p,
        pivots,
    }
}

/// Rank by forward elimination only.
pub fn rank(a: &Matrix) -> usize {
    let (m, n) = a.shape();
    let mut r = a.clone();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(piv) = (row..m).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        swap_rows(&mut r, piv, row);
        for i in row + 1..m {
            if !r[(i, col)].is_zero() {
                let f = &r[(i, col)] / &r[(row, col)];
                axpy_row(&mut r, i, row, &f);
            }
        }
        row += 1;
    }
    row
}

pub fn is_invertible(a: &Matrix) -> bool {
    a.is_square() && rank(a) == a.rows()
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.require_square("inverse")?;
    let rr = row_reduce(a);
    if rr.pivots.len() < n {
        return Err(Error::SingularMatrix);
    }
    Ok(rr.transform)
}

/// Basis of the right null space, one vector per column.
pub fn null_space(a: &Matrix) -> Matrix {
    let n = a.cols();
    let rr = row_reduce(a);
    let free: Vec<usize> = (0..n).filter(|c| !rr.pivots.contains(c)).collect();
    let mut basis = Matrix::zeros(n, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[(f, k)] = Rational::one();
        for (i, &pc) in rr.pivots.iter().enumerate() {
            basis[(pc, k)] = -rr.reduced[(i, f)].clone();
        }
    }
    basis
}

/// Basis of the column space: the pivot columns of `a` itself.
pub fn column_space(a: &Matrix) -> Matrix {
    let rr = row_reduce(a);
    a.select_columns(&rr.pivots)
}

pub fn rank_normal_form(a: &Matrix) -> RankNormalForm {
    let n = a.cols();
    let rr = row_reduce(a);
    let r = rr.pivots.len();
    let non_pivots: Vec<usize> = (0..n).filter(|c| !rr.pivots.contains(c)).collect();
    let order: Vec<usize> = rr.pivots.iter().chain(&non_pivots).copied().collect();
    let perm = Matrix::identity(n).select_columns(&order);
    // reduced * perm = [[I_r, F], [0, 0]]; clear F with column operations.
    let f = rr.reduced.select_columns(&non_pivots).submatrix(0, r, 0, non_pivots.len());
    let mut clear = Matrix::identity(n);
    clear.set_block(0, r, &-&f);
    RankNormalForm {
        p: rr.transform,
        q: &perm * &clear,
        rank: r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::rational::{frac, int};

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&Matrix::identity(4)), 4);
        assert_eq!(rank(&Matrix::zeros(3, 5)), 0);
        assert_eq!(rank(&Matrix::zeros(0, 5)), 0);
        // two 2x2 nilpotent Jordan cells
        let a = Matrix::from_ints(&[[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(row_reduce(&a).pivots.len(), 2);
    }

    #[test]
    fn inverse_of_diagonal() {
        let d = Matrix::diagonal(&[int(2), frac(-1, 2)]);
        assert_eq!(inverse(&d).unwrap(), Matrix::diagonal(&[frac(1, 2), int(-2)]));
        assert!(inverse(&Matrix::identity(5)).unwrap().is_identity());
        assert_eq!(inverse(&Matrix::from_ints(&[[1, 2], [2, 4]])), Err(Error::SingularMatrix));
        assert!(matches!(inverse(&Matrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
        assert_eq!(inverse(&Matrix::zeros(0, 0)).unwrap().shape(), (0, 0));
    }

    #[test]
    fn null_space_is_annihilated() {
        let a = Matrix::from_ints(&[[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]);
        let ns = null_space(&a);
        assert_eq!(ns.cols(), 4 - rank(&a));
        assert!((&a * &ns).is_zero());
        assert_eq!(rank(&ns), ns.cols());
    }

    #[test]
    fn column_space_has_full_rank() {
        let a = Matrix::from_ints(&[[1, 2, 3], [2, 4, 7], [0, 0, 1]]);
        let cs = column_space(&a);
        assert_eq!(cs.cols(), 2);
        assert_eq!(rank(&Matrix::hstack(&[&cs, &a]).unwrap()), 2);
    }

    #[test]
    fn rank_normal_form_trivial_cases() {
        let z = Matrix::zeros(3, 2);
        let rnf = rank_normal_form(&z);
        assert_eq!(rnf.rank, 0);
        assert!(rnf.p.is_identity() && rnf.q.is_identity());

        let a = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let rnf = rank_normal_form(&a);
        assert_eq!(rnf.rank, 2);
        assert!((&(&rnf.p * &a) * &rnf.q).is_identity());
    }

    #[test]
    fn rank_normal_form_rank_one_reconstructs() {
        let a = Matrix::from_ints(&[[1, 2], [2, 4]]);
        let rnf = rank_normal_form(&a);
        assert_eq!(rnf.rank, 1);
        let core = RankNormalForm::core(2, 2, 1);
        assert_eq!(&(&rnf.p * &a) * &rnf.q, core);
        let back = &(&inverse(&rnf.p).unwrap() * &core) * &inverse(&rnf.q).unwrap();
        assert_eq!(back, a);
    }
}
