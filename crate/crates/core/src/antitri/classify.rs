use super::branches::{
    drazin_a_nonsingular_bc_zero, drazin_a_zero, drazin_bc_zero, drazin_oneside_case,
    drazin_orthogonal_case, group_bc_nonsingular, index_b_identity,
};
use super::{
    assemble, group_criterion_canonical, index_two_criterion_canonical, require_singular_a_bc,
    AntiTriangularBlocks, Branch, BranchReport, IndexClass,
};
use crate::error::{Error, Result};
use crate::exactmat::{inverse, is_invertible};
use crate::geninv::drazin;

fn direct(blocks: &AntiTriangularBlocks, branch: Branch, bounds: Option<(usize, usize)>, note: &str) -> Result<BranchReport> {
    let d = drazin(&assemble(blocks))?;
    let (lower_bound, upper_bound) = bounds.unwrap_or((d.index, d.index));
    Ok(BranchReport {
        branch,
        class: IndexClass::of(d.index),
        index: Some(d.index),
        lower_bound,
        upper_bound,
        drazin: Some(d.inverse),
        verified: true,
        notes: vec![note.to_string()],
    })
}

/// Picks the most specific applicable case: `BC` nonsingular, then `A`
/// nonsingular with `BC = 0`, `B = I`, `BC = 0`, `A = 0`, `ABC = BCA = 0`,
/// `ABC = 0`, and finally the two criteria or a direct computation.
pub fn classify_and_solve(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    let w = blocks.w();
    let a_inv = is_invertible(&blocks.a);
    if is_invertible(&w) {
        return group_bc_nonsingular(blocks);
    }
    if a_inv && w.is_zero() {
        return drazin_a_nonsingular_bc_zero(blocks);
    }
    if blocks.b.is_identity() {
        return index_b_identity(&blocks.a, &blocks.c);
    }
    if w.is_zero() {
        return drazin_bc_zero(blocks);
    }
    if blocks.a.is_zero() {
        return drazin_a_zero(blocks);
    }
    if !a_inv && (&blocks.a * &w).is_zero() {
        if (&w * &blocks.a).is_zero() {
            return drazin_orthogonal_case(blocks);
        }
        return drazin_oneside_case(blocks);
    }
    generic(blocks)
}

fn generic(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    if require_singular_a_bc(blocks, "criteria").is_ok() {
        if group_criterion_canonical(blocks) {
            return direct(blocks, Branch::GroupInvertible, Some((0, 1)), "group-invertibility criterion holds");
        }
        if index_two_criterion_canonical(blocks) {
            return direct(blocks, Branch::IndexTwo, Some((2, 2)), "index-two criterion holds");
        }
    }
    direct(blocks, Branch::Generic, None, "solved directly")
}

/// Runs one specific branch; a branch whose hypotheses fail is an error.
pub fn solve_branch(blocks: &AntiTriangularBlocks, branch: Branch) -> Result<BranchReport> {
    match branch {
        Branch::Invertible => {
            let m = assemble(blocks);
            let inv = inverse(&m).map_err(|_| Error::HypothesisViolated("M is singular".into()))?;
            Ok(BranchReport {
                branch,
                class: IndexClass::Invertible,
                index: Some(0),
                lower_bound: 0,
                upper_bound: 0,
                drazin: Some(inv),
                verified: true,
                notes: Vec::new(),
            })
        }
        Branch::GroupInvertible => {
            require_singular_a_bc(blocks, "group-invertibility criterion")?;
            if !group_criterion_canonical(blocks) {
                return Err(Error::HypothesisViolated("group-invertibility criterion fails".into()));
            }
            direct(blocks, branch, Some((0, 1)), "group-invertibility criterion holds")
        }
        Branch::IndexTwo => {
            require_singular_a_bc(blocks, "index-two criterion")?;
            if group_criterion_canonical(blocks) || !index_two_criterion_canonical(blocks) {
                return Err(Error::HypothesisViolated("index-two criterion fails".into()));
            }
            direct(blocks, branch, Some((2, 2)), "index-two criterion holds")
        }
        Branch::OrthogonalCase => drazin_orthogonal_case(blocks),
        Branch::OneSideCase => drazin_oneside_case(blocks),
        Branch::BCZero => drazin_bc_zero(blocks),
        Branch::AZero => drazin_a_zero(blocks),
        Branch::BCNonsingular => group_bc_nonsingular(blocks),
        Branch::ANonsingularBCZero => drazin_a_nonsingular_bc_zero(blocks),
        Branch::BIdentity => {
            if !blocks.b.is_identity() {
                return Err(Error::HypothesisViolated("B is not the identity".into()));
            }
            index_b_identity(&blocks.a, &blocks.c)
        }
        Branch::Generic => direct(blocks, branch, None, "solved directly"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{frac, int, Matrix};

    pub(crate) fn example_one() -> AntiTriangularBlocks {
        let a = Matrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) | (2, 0) => frac(1, 2),
            (1, 1) | (2, 1) => int(2),
            (1, 2) | (2, 2) => int(-2),
            _ => int(0),
        });
        let b: Matrix = "3 6\n1 -1/2 -2 -1/2 -1 1/2\n0 -1 1 0 0 -1\n1 -3/2 -1 -1/2 -1 -1/2"
            .parse()
            .unwrap();
        let c: Matrix = "6 3\n1 0 0\n0 1 0\n0 0 1\n0 0 0\n1 -1 -3/2\n0 -1 1".parse().unwrap();
        AntiTriangularBlocks::new(a, b, c).unwrap()
    }

    #[test]
    fn example_one_dispatches_to_bc_zero() {
        let r = classify_and_solve(&example_one()).unwrap();
        assert_eq!(r.branch, Branch::BCZero);
        assert_eq!(r.index, Some(3));
        let d = r.drazin.unwrap();
        assert_eq!(d[(7, 0)], int(38));
        assert_eq!(d[(7, 5)], int(-152));
        assert!(d.row(6).iter().all(|x| *x == int(0)));
    }

    #[test]
    fn bc_invertible_dispatch() {
        let id = Matrix::identity(2);
        let blocks = AntiTriangularBlocks::new(Matrix::zeros(2, 2), id.clone(), id).unwrap();
        assert_eq!(classify_and_solve(&blocks).unwrap().branch, Branch::BCNonsingular);
    }

    #[test]
    fn forced_branch_gates() {
        let blocks = AntiTriangularBlocks::new(
            Matrix::from_ints(&[[1, 0], [0, 0]]),
            Matrix::from_ints(&[[1], [0]]),
            Matrix::from_ints(&[[0, 1]]),
        )
        .unwrap();
        assert!(solve_branch(&blocks, Branch::OrthogonalCase).is_err());
        assert!(solve_branch(&blocks, Branch::Invertible).is_err());
        let r = solve_branch(&blocks, Branch::Generic).unwrap();
        assert!(r.bounds_hold());
    }
}
