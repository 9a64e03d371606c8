//! Drazin index, {1}-inverses, core-nilpotent decomposition, Drazin and
//! group inverses, and the additive and product rules built on them.

mod additive;
mod special;

pub use additive::{additive_drazin_oneside, additive_drazin_orthogonal, hartwig_sum};
pub use special::{
    cline_drazin, drazin_via_special_sum, special_sum, split_one_inverse, ClineReport,
};

use crate::error::{Error, Result};
use crate::exactmat::{column_space, inverse, null_space, rank, rank_normal_form, Matrix, RankNormalForm};

/// `A = U * diag(core, nil) * U^{-1}` with `core` invertible and `nil`
/// nilpotent of nilpotency index `index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreNilpotent {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub core: Matrix,
    pub nil: Matrix,
    pub index: usize,
}

impl CoreNilpotent {
    pub fn reconstruct(&self) -> Matrix {
        let d = Matrix::diag_blocks(&[&self.core, &self.nil]);
        &(&self.u * &d) * &self.u_inv
    }

    /// `U * diag(x, y) * U^{-1}` for blocks shaped like core and nil.
    pub fn conjugate(&self, core_block: &Matrix, nil_block: &Matrix) -> Matrix {
        let d = Matrix::diag_blocks(&[core_block, nil_block]);
        &(&self.u * &d) * &self.u_inv
    }
}

/// A Drazin inverse together with the index it was verified against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrazinResult {
    pub inverse: Matrix,
    pub index: usize,
}

/// `rank(A^0), rank(A^1), ...` up to and including `rank(A^{i(A)+1})`.
pub fn rank_sequence(a: &Matrix) -> Result<Vec<usize>> {
    let n = a.require_square("rank_sequence")?;
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    loop {
        power = &power * a;
        let r = rank(&power);
        let prev = *ranks.last().unwrap();
        ranks.push(r);
        if r == prev {
            return Ok(ranks);
        }
    }
}

/// Least `k >= 0` with `rank(A^k) = rank(A^{k+1})`.
pub fn drazin_index(a: &Matrix) -> Result<usize> {
    Ok(rank_sequence(a)?.len() - 2)
}

pub fn is_one_inverse(a: &Matrix, x: &Matrix) -> bool {
    x.shape() == (a.cols(), a.rows()) && &(a * x) * a == *a
}

/// Canonical {1}-inverse `Q * [[I_r, 0], [0, 0]] * P` from the rank normal form.
pub fn one_inverse(a: &Matrix) -> Matrix {
    let RankNormalForm { p, q, rank } = rank_normal_form(a);
    let core = RankNormalForm::core(a.cols(), a.rows(), rank);
    &(&q * &core) * &p
}

/// `A^= = A^- + Z - A^- A Z A A^-`; ranges over all of `A{1}` as `Z` varies.
pub fn one_inverse_family(a: &Matrix, a_minus: &Matrix, z: &Matrix) -> Result<Matrix> {
    if a_minus.shape() != (a.cols(), a.rows()) || z.shape() != a_minus.shape() {
        return Err(Error::DimensionMismatch {
            op: "one_inverse_family",
            left: a_minus.shape(),
            right: z.shape(),
        });
    }
    if !is_one_inverse(a, a_minus) {
        return Err(Error::NotAOneInverse);
    }
    let ama = &(&(&(a_minus * a) * z) * a) * a_minus;
    Ok(&(a_minus + z) - &ama)
}

pub fn core_nilpotent(a: &Matrix) -> Result<CoreNilpotent> {
    let n = a.require_square("core_nilpotent")?;
    let index = drazin_index(a)?;
    let ak = a.p(index);
    let range = column_space(&ak);
    let kernel = null_space(&ak);
    let r = range.cols();
    let u = Matrix::hstack(&[&range, &kernel])?;
    let u_inv = inverse(&u).map_err(|_| Error::Internal("range and kernel of A^k not complementary".into()))?;
    let t = &(&u_inv * a) * &u;
    if !t.submatrix(0, r, r, n).is_zero() || !t.submatrix(r, n, 0, r).is_zero() {
        return Err(Error::Internal("core-nilpotent blocks do not decouple".into()));
    }
    Ok(CoreNilpotent {
        core: t.submatrix(0, r, 0, r),
        nil: t.submatrix(r, n, r, n),
        u,
        u_inv,
        index,
    })
}

/// The three defining equations `A^{k+1} D = A^k`, `D A D = D`, `A D = D A`.
pub fn verify_drazin(a: &Matrix, d: &Matrix, k: usize) -> bool {
    if !a.is_square() || d.shape() != a.shape() {
        return false;
    }
    let ak = a.p(k);
    let ad = a * d;
    &(&ak * a) * d == ak && &ad * d == *d && ad == d * a
}

pub fn drazin(a: &Matrix) -> Result<DrazinResult> {
    let cn = core_nilpotent(a)?;
    let core_inv = inverse(&cn.core)?;
    let zero = Matrix::zeros(cn.nil.rows(), cn.nil.cols());
    let d = cn.conjugate(&core_inv, &zero);
    if !verify_drazin(a, &d, cn.index) {
        return Err(Error::Internal("Drazin equations fail".into()));
    }
    Ok(DrazinResult {
        inverse: d,
        index: cn.index,
    })
}

pub fn group_inverse(a: &Matrix) -> Result<Matrix> {
    let index = drazin_index(a)?;
    if index > 1 {
        return Err(Error::IndexTooLarge { index });
    }
    Ok(drazin(a)?.inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{frac, int};

    fn jordan(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| if j == i + 1 { int(1) } else { int(0) })
    }

    #[test]
    fn index_of_basic_matrices() {
        assert_eq!(drazin_index(&Matrix::from_ints(&[[2, 1], [1, 1]])).unwrap(), 0);
        assert_eq!(drazin_index(&jordan(3)).unwrap(), 3);
        assert_eq!(drazin_index(&Matrix::zeros(2, 2)).unwrap(), 1);
        assert_eq!(drazin_index(&Matrix::zeros(0, 0)).unwrap(), 0);
        assert!(drazin_index(&Matrix::zeros(1, 2)).is_err());
        assert_eq!(rank_sequence(&jordan(3)).unwrap(), vec![3, 2, 1, 0, 0]);
    }

    #[test]
    fn one_inverse_cases() {
        let a = Matrix::from_ints(&[[2, 1], [1, 1]]);
        assert_eq!(one_inverse(&a), inverse(&a).unwrap());
        let z = Matrix::zeros(2, 3);
        assert_eq!(one_inverse(&z), Matrix::zeros(3, 2));
        let r1 = Matrix::from_ints(&[[1, 2], [2, 4]]);
        assert!(is_one_inverse(&r1, &one_inverse(&r1)));
        let wide = Matrix::from_ints(&[[1, 0, 2], [2, 0, 4]]);
        assert!(is_one_inverse(&wide, &one_inverse(&wide)));
    }

    #[test]
    fn one_inverse_family_closure() {
        let a = Matrix::from_ints(&[[1, 2, 0], [2, 4, 0], [0, 0, 0]]);
        let am = one_inverse(&a);
        assert_eq!(one_inverse_family(&a, &am, &Matrix::zeros(3, 3)).unwrap(), am);
        let again = one_inverse_family(&a, &am, &am).unwrap();
        assert!(is_one_inverse(&a, &again));
        assert_eq!(
            one_inverse_family(&a, &Matrix::zeros(3, 3), &am),
            Err(Error::NotAOneInverse)
        );
        assert!(one_inverse_family(&a, &am, &Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn core_nilpotent_extremes() {
        let inv = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let cn = core_nilpotent(&inv).unwrap();
        assert_eq!(cn.core.shape(), (2, 2));
        assert_eq!(cn.nil.shape(), (0, 0));
        assert_eq!(cn.reconstruct(), inv);

        let cn = core_nilpotent(&jordan(3)).unwrap();
        assert_eq!(cn.core.shape(), (0, 0));
        assert_eq!(cn.index, 3);
        assert!(cn.nil.p(3).is_zero() && !cn.nil.p(2).is_zero());
    }

    #[test]
    fn drazin_basic() {
        let inv = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let d = drazin(&inv).unwrap();
        assert_eq!(d.index, 0);
        assert_eq!(d.inverse, inverse(&inv).unwrap());
        let d = drazin(&jordan(4)).unwrap();
        assert_eq!(d.index, 4);
        assert!(d.inverse.is_zero());
    }

    #[test]
    fn drazin_of_rational_example() {
        let a = Matrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) | (2, 0) => frac(1, 2),
            (1, 1) | (2, 1) => int(2),
            (1, 2) | (2, 2) => int(-2),
            _ => int(0),
        });
        let d = drazin(&a).unwrap();
        assert_eq!(d.index, 2);
        assert_eq!(d.inverse, Matrix::from_ints(&[[2, 0, 0], [-8, 0, 0], [-6, 0, 0]]));
    }

    #[test]
    fn group_inverse_cases() {
        let e = Matrix::from_ints(&[[1, 1], [0, 0]]);
        assert_eq!(group_inverse(&e).unwrap(), e);
        let inv = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(group_inverse(&inv).unwrap(), inverse(&inv).unwrap());
        assert_eq!(group_inverse(&jordan(2)), Err(Error::IndexTooLarge { index: 2 }));
    }
}
