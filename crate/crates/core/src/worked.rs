//! The worked examples, embedded with their printed values and recomputed
//! from scratch. Every comparison is exact.

use std::fmt;

use serde::Serialize;

use crate::antitri::{assemble, classify_and_solve, AntiTriangularBlocks};
use crate::error::Result;
use crate::exactmat::{frac, int, Matrix};
use crate::geninv::{drazin, drazin_index, special_sum};
use crate::polyring::{min_poly, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Value {
    Index(usize),
    Poly(Polynomial),
    Matrix(Matrix),
}

impl Value {
    /// A deliberately wrong copy, used to show that mismatches are caught.
    fn tampered(&self) -> Value {
        match self {
            Value::Index(i) => Value::Index(i + 1),
            Value::Poly(p) => Value::Poly(p * &Polynomial::lambda_pow(1)),
            Value::Matrix(m) => {
                let mut m = m.clone();
                if m.rows() > 0 && m.cols() > 0 {
                    m[(0, 0)] = &m[(0, 0)] + int(1);
                }
                Value::Matrix(m)
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Index(i) => write!(f, "{i}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Matrix(m) => write!(f, "{}", m.to_json()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleCheck {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub id: &'static str,
    pub title: &'static str,
    pub checks: Vec<ExampleCheck>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// `i(A)` and `i(M)` of an example with `BC = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tightness {
    pub id: &'static str,
    pub index_a: usize,
    pub index_m: usize,
}

impl Tightness {
    /// `i(M) - i(A)`, which the zero-product bounds keep in `0..=2`.
    pub fn gap(&self) -> usize {
        self.index_m - self.index_a
    }
}

struct Builder {
    id: &'static str,
    title: &'static str,
    tamper: bool,
    checks: Vec<ExampleCheck>,
}

impl Builder {
    fn new(id: &'static str, title: &'static str, tamper: Option<&str>) -> Self {
        Builder { id, title, tamper: tamper == Some(id), checks: Vec::new() }
    }

    fn expect(&mut self, claim: &str, expected: Value, actual: Value) {
        let expected = if self.tamper && self.checks.is_empty() { expected.tampered() } else { expected };
        self.checks.push(ExampleCheck {
            claim: claim.to_string(),
            ok: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn finish(self) -> ExampleReport {
        ExampleReport { id: self.id, title: self.title, checks: self.checks }
    }
}

fn mat(text: &str) -> Matrix {
    text.parse().expect("embedded matrix")
}

/// `prod (l - r)^e`.
fn poly(factors: &[(i64, usize)]) -> Polynomial {
    factors
        .iter()
        .fold(Polynomial::one(), |acc, &(r, e)| &acc * &Polynomial::root_pow(int(r), e))
}

fn jordan(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| int(i64::from(j == i + 1)))
}

fn products(tamper: Option<&str>) -> Result<ExampleReport> {
    let mut b = Builder::new("products", "minimal polynomials of AB, BA, AC, CA", tamper);
    let a = Matrix::diag_blocks(&[&jordan(2), &jordan(2)]);
    let bm = Matrix::diag_blocks(&[&jordan(3), &Matrix::identity(1)]);
    let cm = Matrix::diag_blocks(&[&jordan(3), &Matrix::zeros(1, 1)]);
    let l2 = Value::Poly(Polynomial::lambda_pow(2));
    b.expect("psi_BA = l^2", l2.clone(), Value::Poly(min_poly(&(&bm * &a))?));
    b.expect("psi_AC = l^2", l2.clone(), Value::Poly(min_poly(&(&a * &cm))?));
    b.expect("psi_CA = l^2", l2, Value::Poly(min_poly(&(&cm * &a))?));
    b.expect("psi_AB = l^3", Value::Poly(Polynomial::lambda_pow(3)), Value::Poly(min_poly(&(&a * &bm))?));
    Ok(b.finish())
}

fn shifted_products(tamper: Option<&str>) -> Result<ExampleReport> {
    let mut b = Builder::new("shifted-products", "minimal polynomials of I - AB and I - BA", tamper);
    let a = mat("5 5\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 0 0\n0 0 0 -1 0\n0 0 0 -2 2");
    let bm = mat("5 5\n0 1 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 -1 -1 0\n0 0 0 0 -3");
    let ab = &a * &bm;
    let ba = &bm * &a;
    b.expect("AB", Value::Matrix(mat("5 5\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 1 1 0\n0 0 2 2 -6")), Value::Matrix(ab.clone()));
    b.expect("BA", Value::Matrix(mat("5 5\n0 0 1 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 1 0\n0 0 0 6 -6")), Value::Matrix(ba.clone()));
    let k = &Matrix::identity(5) - &ab;
    let w = &Matrix::identity(5) - &ba;
    b.expect("psi_{I-AB} = (l-7)(l-1)l", Value::Poly(poly(&[(7, 1), (1, 1), (0, 1)])), Value::Poly(min_poly(&k)?));
    b.expect("psi_{I-BA} = (l-7)l(l-1)^2", Value::Poly(poly(&[(7, 1), (0, 1), (1, 2)])), Value::Poly(min_poly(&w)?));
    b.expect("i(I-AB) = 1", Value::Index(1), Value::Index(drazin_index(&k)?));
    b.expect("i(I-BA) = 1", Value::Index(1), Value::Index(drazin_index(&w)?));
    Ok(b.finish())
}

fn special(tamper: Option<&str>) -> Result<ExampleReport> {
    let mut b = Builder::new("special-sum", "minimal polynomial of A^2A^- + I - AA^-", tamper);
    let c = mat("2 2\n-2 1\n0 -2");
    let n = jordan(3);
    let a = Matrix::diag_blocks(&[&c, &n]);
    let c_inv = crate::exactmat::inverse(&c)?;
    let a_minus = Matrix::diag_blocks(&[&c_inv, &n.transpose()]);
    let s = special_sum(&a, &a_minus)?;
    b.expect(
        "A^2A^- + I - AA^-",
        Value::Matrix(mat("5 5\n-2 1 0 0 0\n0 -2 0 0 0\n0 0 0 1 0\n0 0 0 0 0\n0 0 0 0 1")),
        Value::Matrix(s.clone()),
    );
    b.expect("psi_A = (l+2)^2 l^3", Value::Poly(poly(&[(-2, 2), (0, 3)])), Value::Poly(min_poly(&a)?));
    b.expect("psi_S = (l-1) l^2 (l+2)^2", Value::Poly(poly(&[(1, 1), (0, 2), (-2, 2)])), Value::Poly(min_poly(&s)?));
    Ok(b.finish())
}

pub(crate) fn zero_product_one() -> AntiTriangularBlocks {
    let a = Matrix::from_fn(3, 3, |i, j| match (i, j) {
        (0, 0) | (2, 0) => frac(1, 2),
        (1, 1) | (2, 1) => int(2),
        (1, 2) | (2, 2) => int(-2),
        _ => int(0),
    });
    let b = mat("3 6\n1 -1/2 -2 -1/2 -1 1/2\n0 -1 1 0 0 -1\n1 -3/2 -1 -1/2 -1 -1/2");
    let c = mat("6 3\n1 0 0\n0 1 0\n0 0 1\n0 0 0\n1 -1 -3/2\n0 -1 1");
    AntiTriangularBlocks::new(a, b, c).expect("conformal")
}

pub(crate) fn zero_product_two() -> AntiTriangularBlocks {
    let b = mat("3 5\n3 0 0 0 0\n1 0 0 0 0\n0 0 0 0 0");
    let c = mat("5 3\n0 0 0\n0 1 4\n0 0 0\n0 0 0\n0 0 0");
    AntiTriangularBlocks::new(jordan(3), b, c).expect("conformal")
}

pub(crate) fn zero_product_three() -> AntiTriangularBlocks {
    let a = mat("3 3\n1 -1 1\n1 2 0\n2 1 1");
    let b = mat("3 4\n-1 0 -1 -1/2\n0 0 0 0\n0 0 0 0");
    let c = mat("4 3\n1 0 0\n0 0 0\n0 0 0\n-2 0 0");
    AntiTriangularBlocks::new(a, b, c).expect("conformal")
}

const M_DRAZIN_ONE: &str = "9 9
2 0 0 4 -2 -8 -2 -4 2
-8 0 0 -16 8 32 8 16 -8
-6 0 0 -12 6 24 6 12 -6
4 0 0 8 -4 -16 -4 -8 4
-16 0 0 -32 16 64 16 32 -16
-12 0 0 -24 12 48 12 24 -12
0 0 0 0 0 0 0 0 0
38 0 0 76 -38 -152 -38 -76 38
4 0 0 8 -4 -16 -4 -8 4";

fn block_indices(b: &mut Builder, blocks: &AntiTriangularBlocks, ia: usize, im: usize) -> Result<()> {
    b.expect("BC = 0", Value::Matrix(Matrix::zeros(blocks.n(), blocks.n())), Value::Matrix(blocks.w()));
    b.expect(&format!("i(A) = {ia}"), Value::Index(ia), Value::Index(drazin_index(&blocks.a)?));
    b.expect(&format!("i(M) = {im}"), Value::Index(im), Value::Index(drazin_index(&assemble(blocks))?));
    Ok(())
}

fn block_one(tamper: Option<&str>) -> Result<ExampleReport> {
    let mut b = Builder::new("zero-product-1", "BC = 0 with i(A) = 2 and i(M) = 3", tamper);
    let blocks = zero_product_one();
    b.expect(
        "A^D",
        Value::Matrix(mat("3 3\n2 0 0\n-8 0 0\n-6 0 0")),
        Value::Matrix(drazin(&blocks.a)?.inverse),
    );
    let report = classify_and_solve(&blocks)?;
    let md = report.drazin.unwrap_or_else(|| Matrix::zeros(0, 0));
    b.expect("M^D", Value::Matrix(mat(M_DRAZIN_ONE)), Value::Matrix(md));
    block_indices(&mut b, &blocks, 2, 3)?;
    Ok(b.finish())
}

fn block_two(tamper: Option<&str>) -> Result<ExampleReport> {
    let mut b = Builder::new("zero-product-2", "BC = 0 with i(A) = i(M) = 3", tamper);
    block_indices(&mut b, &zero_product_two(), 3, 3)?;
    Ok(b.finish())
}

fn block_three(tamper: Option<&str>) -> Result<ExampleReport> {
    let mut b = Builder::new("zero-product-3", "BC = 0 with i(A) = 1 and i(M) = 3", tamper);
    block_indices(&mut b, &zero_product_three(), 1, 3)?;
    Ok(b.finish())
}

pub const EXAMPLE_IDS: [&str; 6] = [
    "products",
    "shifted-products",
    "special-sum",
    "zero-product-1",
    "zero-product-2",
    "zero-product-3",
];

/// Recomputes every example. With `tamper = Some(id)`, the first expected
/// value of that example is altered so the mismatch path can be exercised.
pub fn run_examples(tamper: Option<&str>) -> Result<Vec<ExampleReport>> {
    Ok(vec![
        products(tamper)?,
        shifted_products(tamper)?,
        special(tamper)?,
        block_one(tamper)?,
        block_two(tamper)?,
        block_three(tamper)?,
    ])
}

/// `i(A)` against `i(M)` for the three zero-product examples, which between
/// them attain `i(A)`, `i(A) + 1` and `i(A) + 2`.
pub fn tightness() -> Result<Vec<Tightness>> {
    [
        ("zero-product-1", zero_product_one()),
        ("zero-product-2", zero_product_two()),
        ("zero-product-3", zero_product_three()),
    ]
    .into_iter()
    .map(|(id, b)| {
        Ok(Tightness {
            id,
            index_a: drazin_index(&b.a)?,
            index_m: drazin_index(&assemble(&b))?,
        })
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_reproduce() {
        let reports = run_examples(None).unwrap();
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn tampering_is_detected_only_where_applied() {
        for id in EXAMPLE_IDS {
            let reports = run_examples(Some(id)).unwrap();
            for r in reports {
                assert_eq!(r.passed(), r.id != id, "{}", r.id);
            }
        }
    }

    #[test]
    fn tightness_covers_all_three_gaps() {
        let mut gaps: Vec<usize> = tightness().unwrap().iter().map(Tightness::gap).collect();
        gaps.sort_unstable();
        assert_eq!(gaps, vec![0, 1, 2]);
    }
}
