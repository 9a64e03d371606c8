//! Anti-triangular block matrices `M = [[A, B], [C, 0]]`: assembly, the
//! group-invertibility and index-two criteria, closed-form Drazin inverses for
//! the structured cases, and index bounds.

mod branches;
mod classify;
mod ymatrix;

pub use branches::{
    drazin_a_nonsingular_bc_zero, drazin_a_zero, drazin_bc_zero, drazin_oneside_case,
    drazin_oneside_literal, drazin_orthogonal_case, group_bc_nonsingular, index_b_identity,
};
pub use classify::{classify_and_solve, solve_branch};
pub use ymatrix::{y_drazin_power, y_matrix, y_matrix_drazin, y_matrix_drazin_with, y_power};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmat::{is_invertible, parse_json_value, parse_matrices, Matrix};
use crate::geninv::one_inverse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiTriangularBlocks {
    pub a: Matrix,
    pub b: Matrix,
    pub c: Matrix,
}

impl AntiTriangularBlocks {
    pub fn new(a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        let n = a.require_square("anti-triangular block A")?;
        if b.rows() != n {
            return Err(Error::DimensionMismatch {
                op: "anti-triangular block B",
                left: a.shape(),
                right: b.shape(),
            });
        }
        if c.shape() != (b.cols(), n) {
            return Err(Error::DimensionMismatch {
                op: "anti-triangular block C",
                left: (b.cols(), n),
                right: c.shape(),
            });
        }
        Ok(Self { a, b, c })
    }

    /// Size of `A`.
    pub fn n(&self) -> usize {
        self.a.rows()
    }

    /// Size of the zero block.
    pub fn m(&self) -> usize {
        self.b.cols()
    }

    /// `W = BC`.
    pub fn w(&self) -> Matrix {
        &self.b * &self.c
    }

    /// Reads `A`, `B`, `C` as three text blocks, a JSON array of three
    /// matrices, or a JSON object with keys `"A"`, `"B"`, `"C"`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let value = parse_json_value(text)?;
            let get = |k: &str| {
                value
                    .get(k)
                    .ok_or_else(|| Error::parse(1, format!("missing block \"{k}\"")))
                    .and_then(Matrix::from_json)
            };
            return Self::new(get("A")?, get("B")?, get("C")?);
        }
        let mut ms = parse_matrices(text, 3)?;
        let c = ms.pop().unwrap();
        let b = ms.pop().unwrap();
        let a = ms.pop().unwrap();
        Self::new(a, b, c)
    }
}

impl FromStr for AntiTriangularBlocks {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for AntiTriangularBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n\n{}\n\n{}", self.a, self.b, self.c)
    }
}

/// `[[A, B], [C, 0]]`.
pub fn assemble(blocks: &AntiTriangularBlocks) -> Matrix {
    let m = blocks.m();
    Matrix::block2(&blocks.a, &blocks.b, &blocks.c, &Matrix::zeros(m, m))
        .expect("blocks validated on construction")
}

/// `Gamma = [[A, I], [W, 0]]` and `Omega = Gamma^2 Gamma^- + I - Gamma Gamma^-
/// = [[A, WW^-], [W, I - WW^-]]`, where `Gamma^- = P Q^{-1} D^-` comes from
/// `Gamma = D Q P` with `D = diag(I, W)`, `Q = [[I, A], [0, I]]` and `P` the
/// block swap.
pub fn gamma_omega(blocks: &AntiTriangularBlocks) -> Result<(Matrix, Matrix)> {
    let n = blocks.n();
    let a = &blocks.a;
    let w = blocks.w();
    let id = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    let w_minus = one_inverse(&w);
    let gamma = Matrix::block2(a, &id, &w, &z)?;
    let swap = Matrix::block2(&z, &id, &id, &z)?;
    let q_inv = Matrix::block2(&id, &-a, &z, &id)?;
    let d_minus = Matrix::diag_blocks(&[&id, &w_minus]);
    let gamma_minus = &(&swap * &q_inv) * &d_minus;
    let wwm = &w * &w_minus;
    let gg = &gamma * &gamma_minus;
    if gg != Matrix::diag_blocks(&[&id, &wwm]) || &gg * &gamma != gamma {
        return Err(Error::Internal("Gamma {1}-inverse identity fails".into()));
    }
    let omega = Matrix::block2(a, &wwm, &w, &(&id - &wwm))?;
    let from_def = &(&(&gamma * &gg) + &Matrix::identity(2 * n)) - &gg;
    if omega != from_def {
        return Err(Error::Internal("Omega closed form disagrees".into()));
    }
    Ok((gamma, omega))
}

fn require_singular_a_bc(blocks: &AntiTriangularBlocks, what: &str) -> Result<Matrix> {
    if is_invertible(&blocks.a) {
        return Err(Error::HypothesisViolated(format!("{what}: A is nonsingular")));
    }
    let w = blocks.w();
    if is_invertible(&w) {
        return Err(Error::HypothesisViolated(format!("{what}: BC is nonsingular")));
    }
    Ok(w)
}

/// `Z = (I - BB^-) A (I - C^-C)`.
pub fn group_criterion_z(blocks: &AntiTriangularBlocks, b_minus: &Matrix, c_minus: &Matrix) -> Matrix {
    let id = Matrix::identity(blocks.n());
    let pb = &id - &(&blocks.b * b_minus);
    let pc = &id - &(c_minus * &blocks.c);
    &(&pb * &blocks.a) * &pc
}

/// `A(I - C^-C) - BC + (I - ZZ^-)(I - BB^-)(I + AC^-C - C^-C)` for the given
/// {1}-inverses of `B`, `C` and `Z`.
pub fn group_criterion_matrix(
    blocks: &AntiTriangularBlocks,
    b_minus: &Matrix,
    c_minus: &Matrix,
    z_minus: &Matrix,
) -> Matrix {
    let n = blocks.n();
    let id = Matrix::identity(n);
    let z = group_criterion_z(blocks, b_minus, c_minus);
    let cc = c_minus * &blocks.c;
    let first = &(&blocks.a * &(&id - &cc)) - &blocks.w();
    let tail = &(&(&id + &(&blocks.a * &cc)) - &cc);
    let pz = &id - &(&z * z_minus);
    let pb = &id - &(&blocks.b * b_minus);
    &first + &(&(&pz * &pb) * tail)
}

pub(crate) fn group_criterion_canonical(blocks: &AntiTriangularBlocks) -> bool {
    let bm = one_inverse(&blocks.b);
    let cm = one_inverse(&blocks.c);
    let zm = one_inverse(&group_criterion_z(blocks, &bm, &cm));
    is_invertible(&group_criterion_matrix(blocks, &bm, &cm, &zm))
}

/// Group invertibility of `M` through the block criterion, with canonical
/// {1}-inverses. Requires `A` and `BC` singular.
pub fn check_group_invertible(blocks: &AntiTriangularBlocks) -> Result<bool> {
    require_singular_a_bc(blocks, "group-invertibility criterion")?;
    Ok(group_criterion_canonical(blocks))
}

/// `BC - A(I - (BC)^- BC)`.
pub fn index_two_criterion_matrix(blocks: &AntiTriangularBlocks, w_minus: &Matrix) -> Matrix {
    let w = blocks.w();
    let id = Matrix::identity(blocks.n());
    &w - &(&blocks.a * &(&id - &(w_minus * &w)))
}

pub(crate) fn index_two_criterion_canonical(blocks: &AntiTriangularBlocks) -> bool {
    let w_minus = one_inverse(&blocks.w());
    is_invertible(&index_two_criterion_matrix(blocks, &w_minus))
}

/// The index-two criterion: `M` is not group invertible and
/// `BC - A(I - (BC)^- BC)` is nonsingular. Requires `A` and `BC` singular.
pub fn check_index_two(blocks: &AntiTriangularBlocks) -> Result<bool> {
    require_singular_a_bc(blocks, "index-two criterion")?;
    Ok(!group_criterion_canonical(blocks) && index_two_criterion_canonical(blocks))
}

/// Which closed form or criterion produced a [`BranchReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Invertible,
    GroupInvertible,
    IndexTwo,
    OrthogonalCase,
    OneSideCase,
    BCZero,
    AZero,
    BCNonsingular,
    ANonsingularBCZero,
    BIdentity,
    Generic,
}

impl Branch {
    pub const ALL: [Branch; 11] = [
        Branch::Invertible,
        Branch::GroupInvertible,
        Branch::IndexTwo,
        Branch::OrthogonalCase,
        Branch::OneSideCase,
        Branch::BCZero,
        Branch::AZero,
        Branch::BCNonsingular,
        Branch::ANonsingularBCZero,
        Branch::BIdentity,
        Branch::Generic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::Invertible => "invertible",
            Branch::GroupInvertible => "group-invertible",
            Branch::IndexTwo => "index-two",
            Branch::OrthogonalCase => "orthogonal",
            Branch::OneSideCase => "one-side",
            Branch::BCZero => "bc-zero",
            Branch::AZero => "a-zero",
            Branch::BCNonsingular => "bc-nonsingular",
            Branch::ANonsingularBCZero => "a-nonsingular-bc-zero",
            Branch::BIdentity => "b-identity",
            Branch::Generic => "generic",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Branch::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::parse(1, format!("unknown branch '{s}'")))
    }
}

/// Coarse index class of `M`, independent of the branch that solved it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexClass {
    Invertible,
    GroupInvertible,
    IndexTwo,
    Higher,
}

impl IndexClass {
    pub fn of(index: usize) -> Self {
        match index {
            0 => IndexClass::Invertible,
            1 => IndexClass::GroupInvertible,
            2 => IndexClass::IndexTwo,
            _ => IndexClass::Higher,
        }
    }
}

impl fmt::Display for IndexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexClass::Invertible => "invertible",
            IndexClass::GroupInvertible => "group-invertible",
            IndexClass::IndexTwo => "index-two",
            IndexClass::Higher => "index>=3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub branch: Branch,
    pub class: IndexClass,
    /// `i(M)`, computed directly from the assembled matrix.
    pub index: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub drazin: Option<Matrix>,
    /// Whether `drazin` passed the three Drazin equations against `M`.
    pub verified: bool,
    /// Side observations: predictions of the criteria, alternative forms,
    /// bounds that are logged but not enforced.
    pub notes: Vec<String>,
}

impl BranchReport {
    pub fn bounds_hold(&self) -> bool {
        self.index
            .is_none_or(|i| self.lower_bound <= i && i <= self.upper_bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;
    use crate::geninv::drazin_index;

    #[test]
    fn assemble_shapes() {
        let z = Matrix::zeros(1, 1);
        let blocks = AntiTriangularBlocks::new(z.clone(), z.clone(), z).unwrap();
        assert_eq!(assemble(&blocks), Matrix::zeros(2, 2));
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let blocks = AntiTriangularBlocks::new(a.clone(), Matrix::zeros(2, 0), Matrix::zeros(0, 2)).unwrap();
        assert_eq!(assemble(&blocks), a);
        assert!(AntiTriangularBlocks::new(a.clone(), Matrix::zeros(2, 1), Matrix::zeros(2, 2)).is_err());
        assert!(AntiTriangularBlocks::new(a, Matrix::zeros(1, 1), Matrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn parse_text_and_json() {
        let text = "1 1\n1\n\n1 2\n1 0\n\n2 1\n0\n1\n";
        let blocks: AntiTriangularBlocks = text.parse().unwrap();
        assert_eq!(blocks.m(), 2);
        assert_eq!(blocks.c[(1, 0)], int(1));
        let json = r#"{"A":{"rows":1,"cols":1,"entries":[["1"]]},
                       "B":{"rows":1,"cols":1,"entries":[["2"]]},
                       "C":{"rows":1,"cols":1,"entries":[["3"]]}}"#;
        let blocks: AntiTriangularBlocks = json.parse().unwrap();
        assert_eq!(blocks.w(), Matrix::from_ints(&[[6]]));
        assert!("1 1\n1\n".parse::<AntiTriangularBlocks>().is_err());
    }

    #[test]
    fn gamma_omega_extremes() {
        let a = Matrix::from_ints(&[[1, 1], [0, 0]]);
        let id = Matrix::identity(2);
        let blocks = AntiTriangularBlocks::new(a.clone(), id.clone(), Matrix::from_ints(&[[2, 0], [1, 1]])).unwrap();
        let (g, o) = gamma_omega(&blocks).unwrap();
        assert_eq!(g, o);

        let blocks = AntiTriangularBlocks::new(a.clone(), Matrix::zeros(2, 1), Matrix::zeros(1, 2)).unwrap();
        let (g, o) = gamma_omega(&blocks).unwrap();
        assert_eq!(o, Matrix::diag_blocks(&[&a, &id]));
        assert_eq!(drazin_index(&g).unwrap(), drazin_index(&o).unwrap() + 1);
    }

    #[test]
    fn criteria_on_zero_blocks() {
        let z = Matrix::zeros(1, 1);
        let blocks = AntiTriangularBlocks::new(z.clone(), z.clone(), z.clone()).unwrap();
        assert!(check_group_invertible(&blocks).unwrap());
        assert!(!check_index_two(&blocks).unwrap());
        let blocks = AntiTriangularBlocks::new(Matrix::identity(1), z.clone(), z).unwrap();
        assert!(matches!(
            check_group_invertible(&blocks),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn branch_names_round_trip() {
        for b in Branch::ALL {
            assert_eq!(b.name().parse::<Branch>().unwrap(), b);
        }
        assert!("nope".parse::<Branch>().is_err());
    }
}
