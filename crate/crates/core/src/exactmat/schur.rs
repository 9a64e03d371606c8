use super::elim::inverse;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Schur complement `D - C A^{-1} B` of the invertible leading block `a`.
pub fn schur_complement(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
    check_blocks(a, b, c, d)?;
    let a_inv = inverse(a)?;
    Ok(d - &(&(c * &a_inv) * b))
}

fn check_blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<()> {
    let p = a.require_square("schur_complement")?;
    let q = d.require_square("schur_complement")?;
    if b.shape() != (p, q) {
        return Err(Error::DimensionMismatch {
            op: "schur_complement",
            left: (p, q),
            right: b.shape(),
        });
    }
    if c.shape() != (q, p) {
        return Err(Error::DimensionMismatch {
            op: "schur_complement",
            left: (q, p),
            right: c.shape(),
        });
    }
    Ok(())
}

/// A {1}-inverse of `[[A, B], [C, D]]` built from a {1}-inverse of the
/// Schur complement `Z = D - C A^{-1} B`:
///
/// `[[I, -A^{-1}B], [0, I]] * diag(A^{-1}, Z^-) * [[I, 0], [-C A^{-1}, I]]`.
///
/// When `Z` is invertible and `z_minus = Z^{-1}` the result is the inverse.
pub fn schur_one_inverse(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    d: &Matrix,
    z_minus: &Matrix,
) -> Result<Matrix> {
    check_blocks(a, b, c, d)?;
    let (p, q) = b.shape();
    let a_inv = inverse(a)?;
    let z = d - &(&(c * &a_inv) * b);
    if z_minus.shape() != (q, q) {
        return Err(Error::DimensionMismatch {
            op: "schur_one_inverse",
            left: (q, q),
            right: z_minus.shape(),
        });
    }
    if &(&z * z_minus) * &z != z {
        return Err(Error::NotAOneInverse);
    }
    let left = Matrix::block2(
        &Matrix::identity(p),
        &-&(&a_inv * b),
        &Matrix::zeros(q, p),
        &Matrix::identity(q),
    )?;
    let middle = Matrix::diag_blocks(&[&a_inv, z_minus]);
    let right = Matrix::block2(
        &Matrix::identity(p),
        &Matrix::zeros(p, q),
        &-&(c * &a_inv),
        &Matrix::identity(q),
    )?;
    Ok(&(&left * &middle) * &right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_schur_complement() {
        let a = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let b = Matrix::from_ints(&[[1], [3]]);
        let c = Matrix::from_ints(&[[0, 2]]);
        let d = &(&c * &inverse(&a).unwrap()) * &b;
        let m = Matrix::block2(&a, &b, &c, &d).unwrap();
        let n = schur_one_inverse(&a, &b, &c, &d, &Matrix::zeros(1, 1)).unwrap();
        assert_eq!(&(&m * &n) * &m, m);
    }

    #[test]
    fn invertible_complement_gives_inverse() {
        let a = Matrix::from_ints(&[[1, 2], [0, 1]]);
        let b = Matrix::from_ints(&[[1, 0], [0, 1]]);
        let c = Matrix::from_ints(&[[1, 1], [0, 2]]);
        let d = Matrix::from_ints(&[[5, 0], [1, 3]]);
        let z = schur_complement(&a, &b, &c, &d).unwrap();
        let z_inv = inverse(&z).unwrap();
        let m = Matrix::block2(&a, &b, &c, &d).unwrap();
        let n = schur_one_inverse(&a, &b, &c, &d, &z_inv).unwrap();
        assert!((&n * &m).is_identity());
        assert!((&m * &n).is_identity());
    }

    #[test]
    fn singular_leading_block_rejected() {
        let a = Matrix::from_ints(&[[1, 1], [1, 1]]);
        let b = Matrix::zeros(2, 1);
        let c = Matrix::zeros(1, 2);
        let d = Matrix::zeros(1, 1);
        assert_eq!(
            schur_one_inverse(&a, &b, &c, &d, &Matrix::zeros(1, 1)),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn wrong_z_minus_rejected() {
        let a = Matrix::identity(1);
        let b = Matrix::zeros(1, 1);
        let c = Matrix::zeros(1, 1);
        let d = Matrix::from_ints(&[[2]]);
        assert_eq!(
            schur_one_inverse(&a, &b, &c, &d, &Matrix::from_ints(&[[1]])),
            Err(Error::NotAOneInverse)
        );
    }
}
