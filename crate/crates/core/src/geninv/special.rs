use super::{core_nilpotent, drazin, drazin_index, is_one_inverse, one_inverse, verify_drazin};
use crate::error::{Error, Result};
use crate::exactmat::{inverse, Matrix};

/// `(AB)^D` computed from `BA`, with both indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClineReport {
    pub inverse: Matrix,
    pub index_ab: usize,
    pub index_ba: usize,
}

/// `(AB)^D = A ((BA)^D)^2 B`.
pub fn cline_drazin(a: &Matrix, b: &Matrix) -> Result<ClineReport> {
    if a.cols() != b.rows() || b.cols() != a.rows() {
        return Err(Error::DimensionMismatch {
            op: "cline_drazin",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let ab = a * b;
    let ba = b * a;
    let ba_d = drazin(&ba)?;
    let d = &(a * &ba_d.inverse.p(2)) * b;
    let index_ab = drazin_index(&ab)?;
    if !verify_drazin(&ab, &d, index_ab) {
        return Err(Error::Internal("Cline formula fails the Drazin equations".into()));
    }
    Ok(ClineReport {
        inverse: d,
        index_ab,
        index_ba: ba_d.index,
    })
}

/// `A^2 A^- + I - A A^-`.
pub fn special_sum(a: &Matrix, a_minus: &Matrix) -> Result<Matrix> {
    let n = a.require_square("special_sum")?;
    if !is_one_inverse(a, a_minus) {
        return Err(Error::NotAOneInverse);
    }
    let aam = a * a_minus;
    Ok(&(&(a * &aam) + &Matrix::identity(n)) - &aam)
}

/// `A^D = ((A^2 A^- + I - A A^-)^D)^2 A` for any `A^-` in `A{1}`.
pub fn drazin_via_special_sum(a: &Matrix, a_minus: &Matrix) -> Result<Matrix> {
    let s = special_sum(a, a_minus)?;
    let sd = drazin(&s)?.inverse;
    Ok(&sd.p(2) * a)
}

/// A {1}-inverse `U diag(core^{-1}, N^-) U^{-1}` assembled from the
/// core-nilpotent decomposition and the canonical {1}-inverse of the nilpotent
/// part.
pub fn split_one_inverse(a: &Matrix) -> Result<Matrix> {
    let cn = core_nilpotent(a)?;
    let core_inv = inverse(&cn.core)?;
    Ok(cn.conjugate(&core_inv, &one_inverse(&cn.nil)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;

    fn jordan(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| if j == i + 1 { int(1) } else { int(0) })
    }

    #[test]
    fn cline_with_identity() {
        let a = Matrix::from_ints(&[[1, 1, 0], [0, 0, 1], [0, 0, 0]]);
        let r = cline_drazin(&a, &Matrix::identity(3)).unwrap();
        assert_eq!(r.inverse, drazin(&a).unwrap().inverse);
        assert_eq!(r.index_ab, r.index_ba);
    }

    #[test]
    fn cline_rectangular() {
        let a = Matrix::from_ints(&[[1, 0], [0, 1], [1, 1]]);
        let b = Matrix::from_ints(&[[0, 1, 0], [0, 0, 0]]);
        let r = cline_drazin(&a, &b).unwrap();
        assert_eq!(r.inverse, drazin(&(&a * &b)).unwrap().inverse);
        assert!(r.index_ab.abs_diff(r.index_ba) <= 1);
        assert!(cline_drazin(&a, &a).is_err());
    }

    #[test]
    fn special_sum_of_invertible_is_itself() {
        let a = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let ai = inverse(&a).unwrap();
        assert_eq!(special_sum(&a, &ai).unwrap(), a);
        assert_eq!(
            special_sum(&a, &Matrix::zeros(2, 2)),
            Err(Error::NotAOneInverse)
        );
    }

    #[test]
    fn special_sum_drops_index_by_one() {
        let j = jordan(4);
        let s = special_sum(&j, &one_inverse(&j)).unwrap();
        assert_eq!(drazin_index(&s).unwrap(), 3);
        assert!(drazin_via_special_sum(&j, &one_inverse(&j)).unwrap().is_zero());
    }

    #[test]
    fn split_one_inverse_is_a_one_inverse() {
        let a = Matrix::from_ints(&[[1, 1, 0], [0, 0, 1], [0, 0, 0]]);
        let x = split_one_inverse(&a).unwrap();
        assert!(is_one_inverse(&a, &x));
        let s = special_sum(&a, &x).unwrap();
        assert_eq!(drazin_index(&s).unwrap() + 1, drazin_index(&a).unwrap());
    }
}
