//! Property tests against a test-side Drazin oracle. The oracle computes ranks
//! with its own elimination and builds `A^D = A^k X A^k`, where `X` is a
//! {1}-inverse of `A^{2k+1}` assembled from its own pivot bookkeeping.

use drazin_core::exactmat::{int, Rational};
use drazin_core::geninv::{drazin, drazin_index, drazin_via_special_sum, group_inverse, one_inverse_family};
use drazin_core::polyring::{min_poly, split_lambda_power};
use drazin_core::{Error, Matrix};
use num_traits::{One, Zero};
use proptest::prelude::*;

type Grid = Vec<Vec<Rational>>;

fn grid(m: &Matrix) -> Grid {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn mul(a: &Grid, b: &Grid, n: usize) -> Grid {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |s, t| s + &a[i][t] * &b[t][j]))
                .collect()
        })
        .collect()
}

fn power(a: &Grid, k: usize, n: usize) -> Grid {
    let mut p: Grid = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for _ in 0..k {
        p = mul(&p, a, n);
    }
    p
}

/// Reduced row echelon form of `[m | I]`: returns pivot columns and the
/// accumulated row operations `E` with `E m = rref(m)`.
fn rref_with_ops(m: &Grid, n: usize) -> (Vec<usize>, Grid) {
    let mut work: Grid = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(row, p);
        let inv = work[row][col].recip();
        for x in work[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != row && !work[r][col].is_zero() {
                let f = work[r][col].clone();
                for c in 0..2 * n {
                    let v = &work[row][c] * &f;
                    work[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let ops = work.iter().map(|r| r[n..].to_vec()).collect();
    (pivots, ops)
}

fn oracle_rank(m: &Grid, n: usize) -> usize {
    rref_with_ops(m, n).0.len()
}

/// `X = P^T E` where `P^T` scatters the first `r` rows to the pivot columns;
/// then `m X m = m` because `E m` is the reduced echelon form.
fn oracle_one_inverse(m: &Grid, n: usize) -> Grid {
    let (pivots, ops) = rref_with_ops(m, n);
    let mut x = vec![vec![Rational::zero(); n]; n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = ops[i].clone();
    }
    x
}

fn oracle(a: &Matrix) -> (usize, Matrix) {
    let n = a.rows();
    let g = grid(a);
    let mut k = 0;
    while oracle_rank(&power(&g, k, n), n) != oracle_rank(&power(&g, k + 1, n), n) {
        k += 1;
    }
    let ak = power(&g, k, n);
    let x = oracle_one_inverse(&power(&g, 2 * k + 1, n), n);
    let d = mul(&mul(&ak, &x, n), &ak, n);
    (k, Matrix::from_rows(d).unwrap())
}

fn to_matrix(n: usize, entries: &[i64]) -> Matrix {
    Matrix::from_fn(n, n, |i, j| int(entries[i * n + j]))
}

/// Square integer matrices; a share of them are forced nilpotent-heavy by
/// zeroing the lower triangle so that high indices occur.
fn square() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(|n| {
        (prop::collection::vec(-2i64..=2, n * n), any::<bool>()).prop_map(move |(e, upper)| {
            let m = to_matrix(n, &e);
            if upper {
                Matrix::from_fn(n, n, |i, j| if i >= j && i + j > 0 { int(0) } else { m[(i, j)].clone() })
            } else {
                m
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn drazin_matches_oracle(a in square()) {
        let (k, d) = oracle(&a);
        let got = drazin(&a).unwrap();
        prop_assert_eq!(got.index, k);
        prop_assert_eq!(drazin_index(&a).unwrap(), k);
        prop_assert_eq!(got.inverse, d);
    }

    #[test]
    fn lambda_power_of_min_poly_is_index(a in square()) {
        let (k, _) = oracle(&a);
        prop_assert_eq!(split_lambda_power(&min_poly(&a).unwrap()).unwrap().0, k);
    }

    #[test]
    fn special_sum_route_agrees(a in square(), z in prop::collection::vec(-2i64..=2, 25)) {
        let n = a.rows();
        let (k, d) = oracle(&a);
        prop_assume!(k > 0);
        let am = Matrix::from_rows(oracle_one_inverse(&grid(&a), n)).unwrap();
        let z = to_matrix(n, &z[..n * n]);
        let other = one_inverse_family(&a, &am, &z).unwrap();
        prop_assert_eq!(drazin_via_special_sum(&a, &other).unwrap(), d);
    }

    #[test]
    fn group_inverse_exactly_when_index_at_most_one(a in square()) {
        let (k, d) = oracle(&a);
        match group_inverse(&a) {
            Ok(g) => {
                prop_assert!(k <= 1);
                prop_assert_eq!(g, d);
            }
            Err(e) => prop_assert_eq!(e, Error::IndexTooLarge { index: k }),
        }
    }

    #[test]
    fn permutation_similarity(a in square(), seed in any::<u64>()) {
        let n = a.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = Matrix::permutation(&perm);
        let pt = p.transpose();
        let b = &(&p * &a) * &pt;
        let (_, d) = oracle(&a);
        prop_assert_eq!(drazin(&b).unwrap().inverse, &(&p * &d) * &pt);
    }
}
