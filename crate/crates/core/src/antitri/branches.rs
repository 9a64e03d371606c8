//! Closed-form Drazin inverses and index bounds for the structured cases.

use super::{
    assemble, group_criterion_canonical, index_two_criterion_canonical, require_singular_a_bc,
    AntiTriangularBlocks, Branch, BranchReport, IndexClass,
};
use crate::error::{Error, Result};
use crate::exactmat::{inverse, is_invertible, Matrix};
use crate::geninv::{drazin, drazin_index, one_inverse, verify_drazin};

fn dz(a: &Matrix) -> Result<(Matrix, usize)> {
    let r = drazin(a)?;
    Ok((r.inverse, r.index))
}

/// Checks a closed form against the assembled matrix and packs the report.
fn finish(
    blocks: &AntiTriangularBlocks,
    branch: Branch,
    (lower_bound, upper_bound): (usize, usize),
    d: Matrix,
    notes: Vec<String>,
) -> Result<BranchReport> {
    let m = assemble(blocks);
    let index = drazin_index(&m)?;
    if !verify_drazin(&m, &d, index) {
        return Err(Error::Internal(format!("{branch} closed form fails the Drazin equations")));
    }
    Ok(BranchReport {
        branch,
        class: IndexClass::of(index),
        index: Some(index),
        lower_bound,
        upper_bound,
        drazin: Some(d),
        verified: true,
        notes,
    })
}

/// Replaces the structural bounds by the sharper ones the two criteria give:
/// `[0, 1]` when `M` is group invertible, `[2, 2]` when the index-two matrix is
/// nonsingular. The structural bounds are stated for the remaining case only,
/// so when a criterion fires they are kept as a note.
fn criteria_bounds(
    blocks: &AntiTriangularBlocks,
    structural: (usize, usize),
    notes: &mut Vec<String>,
) -> (usize, usize) {
    let (lo, hi) = structural;
    let sharp = if group_criterion_canonical(blocks) {
        (0, 1)
    } else if index_two_criterion_canonical(blocks) {
        (2, 2)
    } else {
        return structural;
    };
    let index = drazin_index(&assemble(blocks)).expect("assembled matrix is square");
    let holds = lo <= index && index <= hi;
    notes.push(format!(
        "criterion gives [{}, {}]; structural bounds [{lo}, {hi}] {}",
        sharp.0,
        sharp.1,
        if holds { "also hold" } else { "do not hold" }
    ));
    sharp
}

fn require_abc_zero(blocks: &AntiTriangularBlocks, what: &str) -> Result<Matrix> {
    let w = blocks.w();
    if !(&blocks.a * &w).is_zero() {
        return Err(Error::HypothesisViolated(format!("{what}: ABC != 0")));
    }
    Ok(w)
}

/// `ABC = BCA = 0`, `A`, `BC` singular:
/// `M^D = [[A^D, (A^D)^2 B + B (CB)^D], [C (A^D)^2 + (CB)^D C, C (A^D)^3 B]]`.
pub fn drazin_orthogonal_case(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    require_singular_a_bc(blocks, "orthogonal case")?;
    let w = require_abc_zero(blocks, "orthogonal case")?;
    if !(&w * &blocks.a).is_zero() {
        return Err(Error::HypothesisViolated("orthogonal case: BCA != 0".into()));
    }
    let (a, b, c) = (&blocks.a, &blocks.b, &blocks.c);
    let (ad, ia) = dz(a)?;
    let iw = drazin_index(&w)?;
    let (cbd, _) = dz(&(c * b))?;
    let ad2 = ad.p(2);
    let d = Matrix::block2(
        &ad,
        &(&(&ad2 * b) + &(b * &cbd)),
        &(&(c * &ad2) + &(&cbd * c)),
        &(&(c * &ad.p(3)) * b),
    )?;
    let lo = ia.max(2 * iw - 1);
    let mut notes = Vec::new();
    let bounds = criteria_bounds(blocks, (lo, lo + 2), &mut notes);
    finish(blocks, Branch::OrthogonalCase, bounds, d, notes)
}

struct OneSideParts {
    alpha: Matrix,
    beta: Matrix,
    gamma: Matrix,
    delta: Matrix,
}

/// The four sums over `n < k`. With `corrected`, the odd sum over powers of
/// `A` carries the factor `W` that the Hartwig expansion produces:
/// `delta = sum_{n odd} W (W^D)^{(n+1)/2} A^n`.
fn oneside_sums(a: &Matrix, ad: &Matrix, w: &Matrix, wd: &Matrix, k: usize, corrected: bool) -> OneSideParts {
    let n = a.rows();
    let mut parts = OneSideParts {
        alpha: Matrix::zeros(n, n),
        beta: Matrix::zeros(n, n),
        gamma: Matrix::zeros(n, n),
        delta: Matrix::zeros(n, n),
    };
    for q in 1..k {
        let adq = ad.p(q);
        let aq = a.p(q);
        if q % 2 == 0 {
            parts.alpha = &parts.alpha + &(&w.p(q / 2) * &adq);
            parts.gamma = &parts.gamma + &(&wd.p(q / 2) * &aq);
        } else {
            let h = (q + 1) / 2;
            parts.beta = &parts.beta + &(&w.p(h) * &adq);
            let wdh = wd.p(h);
            let lead = if corrected { w * &wdh } else { wdh };
            parts.delta = &parts.delta + &(&lead * &aq);
        }
    }
    parts
}

/// `S [[G1, G2], [G3, G4]]^2 R` with sums up to `k`. The corrected variant
/// uses the corrected `delta` and multiplies the `W^D delta (I - AA^D)` term of
/// `G3` by `A` on the right.
fn oneside_formula(blocks: &AntiTriangularBlocks, k: usize, corrected: bool) -> Result<Matrix> {
    let (a, b, c) = (&blocks.a, &blocks.b, &blocks.c);
    let n = blocks.n();
    let m = blocks.m();
    let id = Matrix::identity(n);
    let w = blocks.w();
    let (ad, _) = dz(a)?;
    let (wd, _) = dz(&w)?;
    let p = oneside_sums(a, &ad, &w, &wd, k, corrected);
    let pw = &id - &(&w * &wd);
    let pa = &id - &(a * &ad);
    let wwd = &w * &wd;
    let ad2 = ad.p(2);
    let ia_alpha = &id + &p.alpha;
    let ia_gamma = &id + &p.gamma;
    let g1 = &(&(&pw * &ia_alpha) * &ad) + &(&(&(&wd * &ia_gamma) * &pa) * a);
    let g2 = &(&(&pw * &ia_alpha) * &ad2) + &(&(&wd * &ia_gamma) * &pa);
    let mut g3_mid = &(&wd * &p.delta) * &pa;
    if corrected {
        g3_mid = &g3_mid * a;
    }
    let g3 = &(&(&(&(&pw * &p.beta) * &ad) + &g3_mid) - &(&(&wwd * a) * &ad)) + &wwd;
    let g4 = &(&(&(&pw * &p.beta) * &ad2) + &(&(&wd * &p.delta) * &pa)) - &(&wwd * &ad);
    let g = Matrix::block2(&g1, &g2, &g3, &g4)?;
    let s = Matrix::block2(a, &id, c, &Matrix::zeros(m, n))?;
    let r = Matrix::block2(&id, &Matrix::zeros(n, m), &Matrix::zeros(n, n), b)?;
    Ok(&(&s * &g.p(2)) * &r)
}

/// The one-side formula exactly as displayed (uncorrected `delta` and `G3`),
/// with `k = i(M)`. Kept to log where it departs from the Drazin inverse.
pub fn drazin_oneside_literal(blocks: &AntiTriangularBlocks) -> Result<Matrix> {
    require_singular_a_bc(blocks, "one-side case")?;
    require_abc_zero(blocks, "one-side case")?;
    let k = drazin_index(&assemble(blocks))?;
    oneside_formula(blocks, k, false)
}

/// `ABC = 0`, `A`, `BC` singular: `M^D = S G^2 R` through the Hartwig
/// expansion of `Gamma^D = [[G1, G2], [G3, G4]]`, with the sums taken up to
/// `k = i(A) + 2 i(BC)`.
pub fn drazin_oneside_case(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    require_singular_a_bc(blocks, "one-side case")?;
    let w = require_abc_zero(blocks, "one-side case")?;
    let ia = drazin_index(&blocks.a)?;
    let iw = drazin_index(&w)?;
    let d = oneside_formula(blocks, ia + 2 * iw, true)?;
    let base = ia.max(2 * iw - 1);
    let mut notes = Vec::new();
    let bounds = criteria_bounds(blocks, (base.saturating_sub(1), ia + 2 * iw + 2), &mut notes);
    let index = drazin_index(&assemble(blocks))?;
    let tight = index <= base + 2;
    notes.push(format!(
        "tighter upper bound {} {}",
        base + 2,
        if tight { "holds" } else { "fails" }
    ));
    let literal = drazin_oneside_literal(blocks)?;
    notes.push(format!(
        "displayed formula {}",
        if literal == d { "agrees" } else { "disagrees" }
    ));
    finish(blocks, Branch::OneSideCase, bounds, d, notes)
}

/// `BC = 0`, `A` singular:
/// `M^D = [[A^D, (A^D)^2 B], [C (A^D)^2, C (A^D)^3 B]]`, `i(A) <= i(M) <= i(A) + 2`.
pub fn drazin_bc_zero(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    if !blocks.w().is_zero() {
        return Err(Error::HypothesisViolated("BC != 0".into()));
    }
    if is_invertible(&blocks.a) {
        return Err(Error::HypothesisViolated("BC = 0 case: A is nonsingular".into()));
    }
    let (a, b, c) = (&blocks.a, &blocks.b, &blocks.c);
    let (ad, ia) = dz(a)?;
    let ad2 = ad.p(2);
    let d = Matrix::block2(&ad, &(&ad2 * b), &(c * &ad2), &(&(c * &ad.p(3)) * b))?;
    let mut notes = Vec::new();
    let bounds = criteria_bounds(blocks, (ia, ia + 2), &mut notes);
    finish(blocks, Branch::BCZero, bounds, d, notes)
}

/// `A = 0`, `BC` singular: `M^D = [[0, B (CB)^D], [(CB)^D C, 0]]`, which also
/// equals `[[0, (BC)^D B], [C (BC)^D, 0]]`; `2i(BC) - 1 <= i(M) <= 2i(BC) + 1`.
pub fn drazin_a_zero(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    if !blocks.a.is_zero() {
        return Err(Error::HypothesisViolated("A != 0".into()));
    }
    let w = blocks.w();
    if is_invertible(&w) {
        return Err(Error::HypothesisViolated("A = 0 case: BC is nonsingular".into()));
    }
    let (b, c) = (&blocks.b, &blocks.c);
    let (n, m) = (blocks.n(), blocks.m());
    let (cbd, _) = dz(&(c * b))?;
    let (wd, iw) = dz(&w)?;
    let d = Matrix::block2(&Matrix::zeros(n, n), &(b * &cbd), &(&cbd * c), &Matrix::zeros(m, m))?;
    let alt = Matrix::block2(&Matrix::zeros(n, n), &(&wd * b), &(c * &wd), &Matrix::zeros(m, m))?;
    if alt != d {
        return Err(Error::Internal("(BC)^D B form disagrees with B (CB)^D form".into()));
    }
    let mut notes = vec!["(BC)^D B form agrees".to_string()];
    let bounds = criteria_bounds(blocks, (2 * iw - 1, 2 * iw + 1), &mut notes);
    finish(blocks, Branch::AZero, bounds, d, notes)
}

/// `BC` nonsingular: `M` is invertible iff `B` and `C` are, and otherwise has
/// index one, with
/// `M^# = [[0, (BC)^{-1} B], [C (BC)^{-1}, -C (BC)^{-1} A (BC)^{-1} B]]`.
pub fn group_bc_nonsingular(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    let w = blocks.w();
    let wi = inverse(&w).map_err(|_| Error::HypothesisViolated("BC is singular".into()))?;
    let (a, b, c) = (&blocks.a, &blocks.b, &blocks.c);
    let n = blocks.n();
    let cwi = c * &wi;
    let d = Matrix::block2(
        &Matrix::zeros(n, n),
        &(&wi * b),
        &cwi,
        &-&(&(&(&cwi * a) * &wi) * b),
    )?;
    let both = is_invertible(b) && is_invertible(c);
    let mut notes = Vec::new();
    if both {
        let mi = inverse(&assemble(blocks))?;
        if mi != d {
            return Err(Error::Internal("group inverse differs from the inverse".into()));
        }
        notes.push("B and C invertible: M^# = M^{-1}".to_string());
    }
    let i = usize::from(!both);
    finish(blocks, Branch::BCNonsingular, (i, i), d, notes)
}

/// `A` nonsingular, `BC = 0`:
/// `M^D = [[A^{-1}, A^{-2} B], [C A^{-2}, C A^{-3} B]]`, with `i(M) = 1` when
/// `A(I - C^-C) + (I - ZZ^-)(I - BB^-)(I + AC^-C - C^-C)` is nonsingular and
/// `i(M) = 2` otherwise. When `B` has no columns `M = A` and the index is 0.
pub fn drazin_a_nonsingular_bc_zero(blocks: &AntiTriangularBlocks) -> Result<BranchReport> {
    let ai = inverse(&blocks.a).map_err(|_| Error::HypothesisViolated("A is singular".into()))?;
    if !blocks.w().is_zero() {
        return Err(Error::HypothesisViolated("BC != 0".into()));
    }
    let (b, c) = (&blocks.b, &blocks.c);
    let ai2 = ai.p(2);
    let d = Matrix::block2(&ai, &(&ai2 * b), &(c * &ai2), &(&(c * &ai.p(3)) * b))?;
    let predicted = if blocks.m() == 0 {
        0
    } else if group_criterion_canonical(blocks) {
        1
    } else {
        2
    };
    finish(
        blocks,
        Branch::ANonsingularBCZero,
        (predicted, predicted),
        d,
        vec![format!("criterion predicts index {predicted}")],
    )
}

/// `M = [[A, I], [C, 0]]`: index 0 iff `i(C) = 0`; index 1 iff
/// `C - A(I - C^-C)` is nonsingular; `max{i(A) + 1, 2i(C)}` when
/// `AC = CA = 0`; bounds `max{i(A), 2i(C) - 1} <= i(M) <= i(A) + 2i(C) + 1`
/// when only `AC = 0`. Anything else is solved directly.
pub fn index_b_identity(a: &Matrix, c: &Matrix) -> Result<BranchReport> {
    let n = a.require_square("index_b_identity")?;
    if c.shape() != (n, n) {
        return Err(Error::DimensionMismatch {
            op: "index_b_identity",
            left: a.shape(),
            right: c.shape(),
        });
    }
    let blocks = AntiTriangularBlocks::new(a.clone(), Matrix::identity(n), c.clone())?;
    let (md, _) = dz(&assemble(&blocks))?;
    let ic = drazin_index(c)?;
    let id = Matrix::identity(n);
    let (branch, bounds, note) = if ic == 0 {
        (Branch::BIdentity, (0, 0), "C nonsingular")
    } else if is_invertible(&(c - &(a * &(&id - &(&one_inverse(c) * c))))) {
        (Branch::BIdentity, (1, 1), "C - A(I - C^-C) nonsingular")
    } else {
        let ia = drazin_index(a)?;
        let ac = (a * c).is_zero();
        let ca = (c * a).is_zero();
        if ac && ca {
            let v = (ia + 1).max(2 * ic);
            (Branch::BIdentity, (v, v), "AC = CA = 0")
        } else if ac {
            (Branch::BIdentity, (ia.max(2 * ic - 1), ia + 2 * ic + 1), "AC = 0")
        } else {
            let i = drazin_index(&assemble(&blocks))?;
            (Branch::Generic, (i, i), "no structural case applies")
        }
    };
    finish(&blocks, branch, bounds, md, vec![note.to_string()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;

    fn jordan(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| if j == i + 1 { int(1) } else { int(0) })
    }

    #[test]
    fn bc_nonsingular_identity_blocks() {
        let id = Matrix::identity(2);
        let blocks = AntiTriangularBlocks::new(Matrix::zeros(2, 2), id.clone(), id.clone()).unwrap();
        let r = group_bc_nonsingular(&blocks).unwrap();
        assert_eq!(r.class, IndexClass::Invertible);
        assert_eq!(r.drazin.unwrap(), assemble(&blocks));
    }

    #[test]
    fn bc_nonsingular_wide() {
        let blocks = AntiTriangularBlocks::new(
            Matrix::from_ints(&[[1]]),
            Matrix::from_ints(&[[1, 1]]),
            Matrix::from_ints(&[[1], [1]]),
        )
        .unwrap();
        let r = group_bc_nonsingular(&blocks).unwrap();
        assert_eq!(r.index, Some(1));
        assert!(r.bounds_hold());
    }

    #[test]
    fn a_nonsingular_b_c_zero() {
        let a = Matrix::from_ints(&[[2, 1], [1, 1]]);
        let blocks = AntiTriangularBlocks::new(a.clone(), Matrix::zeros(2, 1), Matrix::zeros(1, 2)).unwrap();
        let r = drazin_a_nonsingular_bc_zero(&blocks).unwrap();
        assert_eq!(r.index, Some(1));
        assert!(r.bounds_hold());
        let ai = inverse(&a).unwrap();
        assert_eq!(r.drazin.unwrap(), Matrix::diag_blocks(&[&ai, &Matrix::zeros(1, 1)]));
    }

    #[test]
    fn a_zero_with_nilpotent_blocks() {
        let j = jordan(2);
        let blocks = AntiTriangularBlocks::new(Matrix::zeros(2, 2), j.clone(), j).unwrap();
        let r = drazin_a_zero(&blocks).unwrap();
        assert_eq!(r.index, Some(2));
        assert_eq!((r.lower_bound, r.upper_bound), (1, 3));
        assert!(r.drazin.unwrap().is_zero());
        let id = Matrix::identity(2);
        let blocks = AntiTriangularBlocks::new(Matrix::zeros(2, 2), id.clone(), id).unwrap();
        assert!(matches!(drazin_a_zero(&blocks), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn b_identity_cases() {
        let r = index_b_identity(&Matrix::zeros(2, 2), &Matrix::identity(2)).unwrap();
        assert_eq!((r.index, r.lower_bound), (Some(0), 0));

        let r = index_b_identity(&Matrix::zeros(2, 2), &jordan(2)).unwrap();
        assert_eq!(r.index, Some(4));
        assert_eq!((r.lower_bound, r.upper_bound), (4, 4));

        let e = Matrix::from_ints(&[[1, 1], [0, 0]]);
        let z2 = Matrix::zeros(2, 2);
        let a = Matrix::diag_blocks(&[&jordan(2), &z2]);
        let c = Matrix::diag_blocks(&[&z2, &e]);
        let r = index_b_identity(&a, &c).unwrap();
        assert_eq!(r.index, Some(3));
        assert!(r.bounds_hold());
    }

    #[test]
    fn oneside_rejects_nonzero_abc() {
        let blocks = AntiTriangularBlocks::new(
            Matrix::from_ints(&[[1, 0], [0, 0]]),
            Matrix::from_ints(&[[1], [0]]),
            Matrix::from_ints(&[[0, 1]]),
        )
        .unwrap();
        assert!(matches!(drazin_oneside_case(&blocks), Err(Error::HypothesisViolated(_))));
        assert!(matches!(drazin_orthogonal_case(&blocks), Err(Error::HypothesisViolated(_))));
    }
}
