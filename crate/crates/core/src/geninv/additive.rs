use super::{drazin, drazin_index, verify_drazin, DrazinResult};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;

fn same_square(op: &'static str, x: &Matrix, y: &Matrix) -> Result<usize> {
    let n = x.require_square(op)?;
    if y.shape() != x.shape() {
        return Err(Error::DimensionMismatch {
            op,
            left: x.shape(),
            right: y.shape(),
        });
    }
    Ok(n)
}

/// `(X+Y)^D = X^D + Y^D` when `XY = YX = 0`.
pub fn additive_drazin_orthogonal(x: &Matrix, y: &Matrix) -> Result<DrazinResult> {
    same_square("additive_drazin_orthogonal", x, y)?;
    if !(x * y).is_zero() {
        return Err(Error::OrthogonalityViolated("XY != 0".into()));
    }
    if !(y * x).is_zero() {
        return Err(Error::OrthogonalityViolated("YX != 0".into()));
    }
    let sum = x + y;
    let d = &drazin(x)?.inverse + &drazin(y)?.inverse;
    let index = drazin_index(&sum)?;
    if !verify_drazin(&sum, &d, index) {
        return Err(Error::Internal("orthogonal sum fails the Drazin equations".into()));
    }
    Ok(DrazinResult { inverse: d, index })
}

/// `(I - YY^D) (sum_{n<k} Y^n (X^D)^n) X^D + Y^D (sum_{n<k} (Y^D)^n X^n) (I - XX^D)`
/// evaluated for the given `k`, without checking `XY = 0`.
pub fn hartwig_sum(x: &Matrix, y: &Matrix, k: usize) -> Result<Matrix> {
    let n = same_square("hartwig_sum", x, y)?;
    let xd = drazin(x)?.inverse;
    let yd = drazin(y)?.inverse;
    let id = Matrix::identity(n);
    let mut left = Matrix::zeros(n, n);
    let mut right = Matrix::zeros(n, n);
    let mut y_pow = id.clone();
    let mut xd_pow = id.clone();
    let mut yd_pow = id.clone();
    let mut x_pow = id.clone();
    for _ in 0..k {
        left = &left + &(&y_pow * &xd_pow);
        right = &right + &(&yd_pow * &x_pow);
        y_pow = &y_pow * y;
        xd_pow = &xd_pow * &xd;
        yd_pow = &yd_pow * &yd;
        x_pow = &x_pow * x;
    }
    let first = &(&(&id - &(y * &yd)) * &left) * &xd;
    let second = &(&yd * &right) * &(&id - &(x * &xd));
    Ok(&first + &second)
}

/// `(X+Y)^D` when `XY = 0`, via the Hartwig sum with `k = i(X) + i(Y)`.
pub fn additive_drazin_oneside(x: &Matrix, y: &Matrix) -> Result<Matrix> {
    same_square("additive_drazin_oneside", x, y)?;
    if !(x * y).is_zero() {
        return Err(Error::OrthogonalityViolated("XY != 0".into()));
    }
    let k = drazin_index(x)? + drazin_index(y)?;
    let d = hartwig_sum(x, y, k)?;
    let sum = x + y;
    if !verify_drazin(&sum, &d, drazin_index(&sum)?) {
        return Err(Error::Internal("one-sided sum fails the Drazin equations".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_with_zero() {
        let x = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let r = additive_drazin_orthogonal(&x, &Matrix::zeros(2, 2)).unwrap();
        assert_eq!(r.index, 2);
        assert!(r.inverse.is_zero());
    }

    #[test]
    fn orthogonal_disjoint_blocks() {
        let j = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let e = Matrix::from_ints(&[[1, 1], [0, 0]]);
        let z = Matrix::zeros(2, 2);
        let x = Matrix::diag_blocks(&[&j, &z]);
        let y = Matrix::diag_blocks(&[&z, &e]);
        let r = additive_drazin_orthogonal(&x, &y).unwrap();
        assert_eq!(r.index, 2);
        assert_eq!(r.inverse, y);
        assert!(matches!(
            additive_drazin_orthogonal(&j, &e),
            Err(Error::OrthogonalityViolated(_))
        ));
    }

    #[test]
    fn oneside_small() {
        let x = Matrix::from_ints(&[[0, 0], [0, 1]]);
        let y = Matrix::from_ints(&[[0, 1], [0, 0]]);
        assert!((&x * &y).is_zero() && !(&y * &x).is_zero());
        let d = additive_drazin_oneside(&x, &y).unwrap();
        assert_eq!(d, drazin(&(&x + &y)).unwrap().inverse);
        assert!(additive_drazin_oneside(&y, &x).is_err());
    }
}
