//! Seeded random matrices with entries in {-2, ..., 2}.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exactmat::{int, null_space, Matrix};
use crate::geninv::{one_inverse, one_inverse_family};

pub type CaseRng = ChaCha8Rng;

pub fn entry(rng: &mut CaseRng) -> i64 {
    rng.random_range(-2..=2)
}

pub fn dim(rng: &mut CaseRng, lo: usize, hi: usize) -> usize {
    rng.random_range(lo..=hi)
}

pub fn coin(rng: &mut CaseRng, p: f64) -> bool {
    rng.random_bool(p)
}

pub fn matrix(rng: &mut CaseRng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| int(entry(rng)))
}

/// Random matrix with about `density` of its entries nonzero.
pub fn sparse(rng: &mut CaseRng, rows: usize, cols: usize, density: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.random_bool(density) {
            int(entry(rng))
        } else {
            int(0)
        }
    })
}

/// Product of a unit lower and a unit upper triangular integer matrix, so
/// its inverse is integral as well.
pub fn unimodular(rng: &mut CaseRng, n: usize) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = int(rng.random_range(-1..=1));
            u[(j, i)] = int(rng.random_range(-1..=1));
        }
    }
    &l * &u
}

/// `V diag(...) V^{-1}` for unimodular `V`.
pub fn conjugate(rng: &mut CaseRng, d: &Matrix) -> Matrix {
    let v = unimodular(rng, d.rows());
    let vi = crate::exactmat::inverse(&v).expect("unimodular");
    &(&v * d) * &vi
}

/// Strictly upper triangular with random entries; the superdiagonal is kept
/// nonzero with probability `chain`, which pushes the nilpotency index up.
pub fn strictly_upper(rng: &mut CaseRng, n: usize, chain: f64) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        if j == i + 1 && rng.random_bool(chain) {
            int(if rng.random_bool(0.5) { 1 } else { -1 })
        } else if j > i + 1 {
            int(entry(rng))
        } else {
            int(0)
        }
    })
}

pub fn nilpotent(rng: &mut CaseRng, n: usize) -> Matrix {
    let chain = rng.random_range(0.3..1.0);
    let n0 = strictly_upper(rng, n, chain);
    conjugate(rng, &n0)
}

/// Invertible core of size `r`: unimodular times a random nonzero diagonal
/// sign pattern, sometimes with a scaled entry so fractions appear.
pub fn invertible(rng: &mut CaseRng, r: usize) -> Matrix {
    let mut c = unimodular(rng, r);
    if r > 0 && rng.random_bool(0.5) {
        let k = rng.random_range(0..r);
        for j in 0..r {
            c[(k, j)] = &c[(k, j)] * int(2);
        }
    }
    c
}

/// Singular square matrix of size `n`, either a core-nilpotent construction
/// (so higher indices are common) or a random matrix with a zeroed row.
pub fn singular(rng: &mut CaseRng, n: usize) -> Matrix {
    if n == 0 {
        return Matrix::zeros(0, 0);
    }
    if rng.random_bool(0.7) {
        let s = rng.random_range(1..=n);
        let core = invertible(rng, n - s);
        let chain = rng.random_range(0.4..1.0);
        let nil = strictly_upper(rng, s, chain);
        conjugate(rng, &Matrix::diag_blocks(&[&core, &nil]))
    } else {
        let mut a = matrix(rng, n, n);
        let k = rng.random_range(0..n);
        for j in 0..n {
            a[(k, j)] = int(0);
        }
        a
    }
}

/// Any square matrix: plain random, or one of the singular constructions.
pub fn square(rng: &mut CaseRng, n: usize) -> Matrix {
    if rng.random_bool(0.4) {
        matrix(rng, n, n)
    } else {
        singular(rng, n)
    }
}

/// A random member `A^- + Z - A^- A Z A A^-` of `A{1}`.
pub fn one_inverse_of(rng: &mut CaseRng, a: &Matrix) -> Matrix {
    let am = one_inverse(a);
    let z = sparse(rng, a.cols(), a.rows(), 0.4);
    one_inverse_family(a, &am, &z).expect("canonical one-inverse")
}

/// Columns spanning the null space of `a`, mixed by a random matrix with
/// `k` columns; zero columns when the null space is trivial.
pub fn from_null_space(rng: &mut CaseRng, a: &Matrix, k: usize) -> Matrix {
    let basis = null_space(a);
    let mix = matrix(rng, basis.cols(), k);
    &basis * &mix
}
