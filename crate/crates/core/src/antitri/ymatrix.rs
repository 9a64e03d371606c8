//! `Y = [[0, WW^-], [W, 0]]`, its powers and its Drazin inverse.

use crate::error::{Error, Result};
use crate::exactmat::{is_invertible, Matrix};
use crate::geninv::{drazin, drazin_index, one_inverse, verify_drazin, DrazinResult};

pub fn y_matrix(w: &Matrix, w_minus: &Matrix) -> Result<Matrix> {
    let n = w.require_square("y_matrix")?;
    let z = Matrix::zeros(n, n);
    Matrix::block2(&z, &(w * w_minus), w, &z)
}

/// `Y^{2l} = diag(W^l, W^{l+1} W^-)` and `Y^{2l+1} = [[0, W^{l+1} W^-], [W^{l+1}, 0]]`.
pub fn y_power(w: &Matrix, w_minus: &Matrix, n: usize) -> Result<Matrix> {
    let size = w.require_square("y_power")?;
    if n == 0 {
        return Ok(Matrix::identity(2 * size));
    }
    let z = Matrix::zeros(size, size);
    let l = n / 2;
    if n % 2 == 0 {
        Ok(Matrix::diag_blocks(&[&w.pow(l)?, &(&w.pow(l + 1)? * w_minus)]))
    } else {
        let wl = w.pow(l + 1)?;
        Matrix::block2(&z, &(&wl * w_minus), &wl, &z)
    }
}

/// `(Y^D)^{2l} = diag((W^D)^l, (W^D)^l W W^-)` and
/// `(Y^D)^{2l+1} = [[0, (W^D)^{l+1} W W^-], [W (W^D)^{l+1}, 0]]`.
pub fn y_drazin_power(w: &Matrix, w_minus: &Matrix, n: usize) -> Result<Matrix> {
    let size = w.require_square("y_drazin_power")?;
    let wd = drazin(w)?.inverse;
    let z = Matrix::zeros(size, size);
    let wwm = w * w_minus;
    let l = n / 2;
    if n % 2 == 0 {
        let p = wd.pow(l)?;
        let bottom = if n == 0 { Matrix::identity(size) } else { &p * &wwm };
        Ok(Matrix::diag_blocks(&[&p, &bottom]))
    } else {
        let p = wd.pow(l + 1)?;
        Matrix::block2(&z, &(&p * &wwm), &(w * &p), &z)
    }
}

/// `Y^D = [[0, W^D W W^-], [W W^D, 0]]` with `i(Y) = 2 i(W) - 1`, for the
/// canonical `W^-`.
pub fn y_matrix_drazin(w: &Matrix) -> Result<DrazinResult> {
    y_matrix_drazin_with(w, &one_inverse(w))
}

pub fn y_matrix_drazin_with(w: &Matrix, w_minus: &Matrix) -> Result<DrazinResult> {
    let n = w.require_square("y_matrix_drazin")?;
    if is_invertible(w) {
        return Err(Error::HypothesisViolated("W is nonsingular".into()));
    }
    let wd = drazin(w)?;
    let z = Matrix::zeros(n, n);
    let inverse = Matrix::block2(&z, &(&(&wd.inverse * w) * w_minus), &(w * &wd.inverse), &z)?;
    let index = 2 * wd.index - 1;
    let y = y_matrix(w, w_minus)?;
    if !verify_drazin(&y, &inverse, index) || drazin_index(&y)? != index {
        return Err(Error::Internal("Y closed form fails".into()));
    }
    Ok(DrazinResult { inverse, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_w() {
        let w = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let r = y_matrix_drazin(&w).unwrap();
        assert_eq!(r.index, 3);
        assert!(r.inverse.is_zero());
    }

    #[test]
    fn idempotent_w() {
        let w = Matrix::from_ints(&[[1, 1], [0, 0]]);
        assert_eq!(y_matrix_drazin(&w).unwrap().index, 1);
        assert!(y_matrix_drazin(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn powers_match_direct() {
        let w = Matrix::from_ints(&[[1, 1, 0], [0, 0, 1], [0, 0, 0]]);
        let wm = one_inverse(&w);
        let y = y_matrix(&w, &wm).unwrap();
        let yd = drazin(&y).unwrap().inverse;
        for n in 0..7 {
            assert_eq!(y_power(&w, &wm, n).unwrap(), y.pow(n).unwrap(), "Y^{n}");
            assert_eq!(y_drazin_power(&w, &wm, n).unwrap(), yd.pow(n).unwrap(), "(Y^D)^{n}");
        }
    }
}
