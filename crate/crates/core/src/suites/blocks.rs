//! Suites for `M = [[A, B], [C, 0]]`: criteria, closed forms and bounds.

use super::gen::{self, CaseRng};
use super::{oracle_drazin, Case, Suite};
use crate::antitri::{
    assemble, check_group_invertible, classify_and_solve, drazin_a_nonsingular_bc_zero,
    drazin_a_zero, drazin_bc_zero, drazin_oneside_case, drazin_oneside_literal,
    drazin_orthogonal_case, gamma_omega, group_bc_nonsingular, group_criterion_matrix,
    group_criterion_z, index_b_identity, index_two_criterion_matrix, AntiTriangularBlocks,
    Branch, BranchReport,
};
use crate::error::Result;
use crate::exactmat::{int, inverse, is_invertible, Matrix};
use crate::geninv::{drazin, drazin_index, one_inverse};

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "group-criterion", description: "block criterion is nonsingular iff i(M) <= 1, for any choice of {1}-inverses", run: group_criterion },
        Suite { name: "index-two-criterion", description: "M not group invertible: BC - A(I - (BC)^-BC) nonsingular iff i(M) = 2", run: index_two_criterion },
        Suite { name: "orthogonal-blocks", description: "ABC = BCA = 0: closed form equals M^D and the bounds contain i(M)", run: orthogonal_blocks },
        Suite { name: "one-side-blocks", description: "ABC = 0: closed form equals M^D and the bounds contain i(M)", run: one_side_blocks },
        Suite { name: "gamma-omega", description: "i(Gamma) = i(Omega) + 1 when Gamma is singular, and |i(M) - i(Gamma)| <= 1", run: gamma_omega_suite },
        Suite { name: "zero-product-blocks", description: "BC = 0, A singular: closed form and i(A) <= i(M) <= i(A) + 2", run: zero_product },
        Suite { name: "unit-index-product", description: "i(BC) = 1, A singular: bounds under ABC = BCA = 0 and under ABC = 0", run: unit_index_product },
        Suite { name: "zero-leading-block", description: "A = 0, BC singular: closed forms and 2i(BC) - 1 <= i(M) <= 2i(BC) + 1", run: zero_leading },
        Suite { name: "nonsingular-product", description: "BC nonsingular: i(M) is 0 iff B and C are invertible, else 1, with the closed-form M^#", run: nonsingular_product },
        Suite { name: "nonsingular-leading-block", description: "A nonsingular, BC = 0: closed form and the 1-or-2 index criterion", run: nonsingular_leading },
        Suite { name: "identity-coupling", description: "B = I: index case logic in terms of A and C", run: identity_coupling },
        Suite { name: "classify", description: "dispatcher returns a verified Drazin inverse equal to the oracle with bounds containing i(M)", run: classify },
    ]
}

fn show(b: &AntiTriangularBlocks) -> String {
    format!("A={} B={} C={}", b.a.to_json(), b.b.to_json(), b.c.to_json())
}

fn blocks(a: Matrix, b: Matrix, c: Matrix) -> AntiTriangularBlocks {
    AntiTriangularBlocks::new(a, b, c).expect("generated blocks are conformal")
}

fn index_m(b: &AntiTriangularBlocks) -> Result<usize> {
    drazin_index(&assemble(b))
}

/// Draws from `f` until `accept` holds; the last draw is returned if the
/// budget runs out, and the caller's hypothesis gate then skips the case.
fn draw<T>(rng: &mut CaseRng, mut f: impl FnMut(&mut CaseRng) -> T, accept: impl Fn(&T) -> bool) -> T {
    let mut x = f(rng);
    for _ in 0..200 {
        if accept(&x) {
            break;
        }
        x = f(rng);
    }
    x
}

fn a_and_bc_singular(b: &AntiTriangularBlocks) -> bool {
    !is_invertible(&b.a) && !is_invertible(&b.w())
}

/// `A = V diag(A1, 0) V^{-1}`, `B = V [0; B2]`, `C = [0, C2] V^{-1}`, so
/// that `ABC = BCA = 0` with `A` and `BC` singular.
fn orthogonal_gen(rng: &mut CaseRng) -> AntiTriangularBlocks {
    let p = gen::dim(rng, 1, 3);
    let q = gen::dim(rng, 1, 3);
    let m = gen::dim(rng, 1, 3);
    let a1 = gen::square(rng, p);
    let mut b2 = gen::matrix(rng, q, m);
    if gen::coin(rng, 0.5) {
        b2 = &gen::nilpotent(rng, q) * &b2;
    }
    let c2 = gen::matrix(rng, m, q);
    let v = gen::unimodular(rng, p + q);
    let vi = inverse(&v).expect("unimodular");
    let a = &(&v * &Matrix::diag_blocks(&[&a1, &Matrix::zeros(q, q)])) * &vi;
    let b = &v * &Matrix::vstack(&[&Matrix::zeros(p, m), &b2]).expect("stack");
    let c = &Matrix::hstack(&[&Matrix::zeros(m, p), &c2]).expect("stack") * &vi;
    blocks(a, b, c)
}

/// `ABC = 0` with `A` and `BC` singular: either `AB = 0` or `C` built from
/// the null space of `AB`.
fn one_side_gen(rng: &mut CaseRng) -> AntiTriangularBlocks {
    let n = gen::dim(rng, 2, 4);
    let m = gen::dim(rng, 1, 4);
    let a = gen::singular(rng, n);
    let (b, c) = if gen::coin(rng, 0.5) {
        let b = gen::from_null_space(rng, &a, m);
        (b, gen::matrix(rng, m, n))
    } else {
        let b = gen::sparse(rng, n, m, 0.7);
        let c = gen::from_null_space(rng, &(&a * &b), n);
        (b, c)
    };
    blocks(a, b, c)
}

/// `BC = 0`, `A` singular: the columns of `C` lie in the null space of `B`.
fn zero_product_gen(rng: &mut CaseRng) -> AntiTriangularBlocks {
    let n = gen::dim(rng, 1, 4);
    let m = gen::dim(rng, 1, 4);
    let a = gen::singular(rng, n);
    let b = if gen::coin(rng, 0.2) {
        Matrix::zeros(n, m)
    } else {
        gen::sparse(rng, n, m, 0.5)
    };
    let c = gen::from_null_space(rng, &b, n);
    blocks(a, b, c)
}

/// Unstructured blocks with `A` and `BC` singular (zeroed rows force it).
fn plain_gen(rng: &mut CaseRng) -> AntiTriangularBlocks {
    let n = gen::dim(rng, 1, 4);
    let m = gen::dim(rng, 1, 4);
    let a = gen::singular(rng, n);
    let mut b = gen::sparse(rng, n, m, 0.6);
    let c = gen::sparse(rng, m, n, 0.6);
    if m >= n {
        let k = gen::dim(rng, 0, n - 1);
        for j in 0..m {
            b[(k, j)] = int(0);
        }
    }
    blocks(a, b, c)
}

/// `BC` a singular idempotent and `A` invertible on its kernel, so that the
/// index-two matrix is nonsingular.
fn idempotent_gen(rng: &mut CaseRng) -> AntiTriangularBlocks {
    let n = gen::dim(rng, 2, 4);
    let r = gen::dim(rng, 1, n - 1);
    let v = gen::unimodular(rng, n);
    let vi = inverse(&v).expect("unimodular");
    let a2 = gen::invertible(rng, n - r);
    let a12 = gen::matrix(rng, r, n - r);
    let mut t = Matrix::zeros(n, n);
    t.set_block(0, r, &a12);
    t.set_block(r, r, &a2);
    let a = &(&v * &t) * &vi;
    let mut b = v.submatrix(0, n, 0, r);
    let c = vi.submatrix(0, r, 0, n);
    if gen::coin(rng, 0.5) {
        let s = gen::invertible(rng, r);
        b = &b * &inverse(&s).expect("invertible");
        return blocks(a, b, &s * &c);
    }
    blocks(a, b, c)
}

fn mixed_singular_gen(rng: &mut CaseRng) -> AntiTriangularBlocks {
    let f = match gen::dim(rng, 0, 4) {
        0 => orthogonal_gen,
        1 => one_side_gen,
        2 => zero_product_gen,
        3 => idempotent_gen,
        _ => plain_gen,
    };
    draw(rng, f, a_and_bc_singular)
}

/// Bounds under the reading used throughout: `[0, 1]` when the group
/// criterion holds, `[2, 2]` when the index-two criterion holds, and the
/// structural bounds otherwise.
fn expected_bounds(b: &AntiTriangularBlocks, structural: (usize, usize)) -> Result<(usize, usize)> {
    if check_group_invertible(b)? {
        return Ok((0, 1));
    }
    let wm = one_inverse(&b.w());
    if is_invertible(&index_two_criterion_matrix(b, &wm)) {
        return Ok((2, 2));
    }
    Ok(structural)
}

fn within((lo, hi): (usize, usize), i: usize) -> bool {
    lo <= i && i <= hi
}

/// Enforced checks shared by every closed-form branch.
fn closed_form(case: &mut Case, b: &AntiTriangularBlocks, r: &BranchReport, bounds: (usize, usize)) -> Result<usize> {
    let m = assemble(b);
    let i = drazin_index(&m)?;
    let ctx = || show(b);
    case.check("closed-form-equals-oracle", r.drazin.as_ref() == Some(&oracle_drazin(&m)), ctx);
    case.check("reported-index", r.index == Some(i), ctx);
    case.check("bounds-contain-index", within(bounds, i), || {
        format!("{} bounds {bounds:?} index {i}", show(b))
    });
    case.check("reported-bounds", (r.lower_bound, r.upper_bound) == bounds, || {
        format!("{} reported [{}, {}] expected {bounds:?}", show(b), r.lower_bound, r.upper_bound)
    });
    Ok(i)
}

fn group_criterion(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let b = mixed_singular_gen(rng);
    if !a_and_bc_singular(&b) {
        return Ok(());
    }
    let i = index_m(&b)?;
    let canonical = check_group_invertible(&b)?;
    case.check("criterion-iff-group-invertible", canonical == (i <= 1), || {
        format!("{} criterion {canonical} index {i}", show(&b))
    });
    let mut same = true;
    for _ in 0..3 {
        let bm = gen::one_inverse_of(rng, &b.b);
        let cm = gen::one_inverse_of(rng, &b.c);
        let z = group_criterion_z(&b, &bm, &cm);
        let zm = gen::one_inverse_of(rng, &z);
        same &= is_invertible(&group_criterion_matrix(&b, &bm, &cm, &zm)) == canonical;
    }
    case.check("independent-of-one-inverses", same, || show(&b));
    Ok(())
}

fn index_two_criterion(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let b = draw(rng, mixed_singular_gen, |b| {
        a_and_bc_singular(b) && index_m(b).is_ok_and(|i| i >= 2)
    });
    if !a_and_bc_singular(&b) {
        return Ok(());
    }
    let i = index_m(&b)?;
    if i < 2 {
        return Ok(());
    }
    let crit = is_invertible(&index_two_criterion_matrix(&b, &one_inverse(&b.w())));
    case.check("criterion-implies-index-two", !crit || i == 2, || {
        format!("{} index {i}", show(&b))
    });
    case.check("index-two-implies-criterion", i != 2 || crit, || {
        format!("{} index 2 but criterion matrix singular", show(&b))
    });
    let mut same = true;
    for _ in 0..3 {
        let wm = gen::one_inverse_of(rng, &b.w());
        same &= is_invertible(&index_two_criterion_matrix(&b, &wm)) == crit;
    }
    case.check("independent-of-one-inverse", same, || show(&b));
    Ok(())
}

fn structural_base(b: &AntiTriangularBlocks) -> Result<(usize, usize)> {
    Ok((drazin_index(&b.a)?, drazin_index(&b.w())?))
}

fn orthogonal_blocks(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let b = orthogonal_gen(rng);
    let r = drazin_orthogonal_case(&b)?;
    let (ia, iw) = structural_base(&b)?;
    let lo = ia.max(2 * iw - 1);
    let bounds = expected_bounds(&b, (lo, lo + 2))?;
    let i = closed_form(case, &b, &r, bounds)?;
    case.log("structural-bounds-without-criteria", within((lo, lo + 2), i), || {
        format!("{} structural [{lo}, {}] index {i}", show(&b), lo + 2)
    });
    Ok(())
}

fn one_side_blocks(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let b = draw(rng, one_side_gen, a_and_bc_singular);
    if !a_and_bc_singular(&b) {
        return Ok(());
    }
    let r = drazin_oneside_case(&b)?;
    let (ia, iw) = structural_base(&b)?;
    let base = ia.max(2 * iw - 1);
    let structural = (base - 1, ia + 2 * iw + 2);
    let bounds = expected_bounds(&b, structural)?;
    let i = closed_form(case, &b, &r, bounds)?;
    case.log("tighter-upper-bound", i <= base + 2, || {
        format!("{} bound {} index {i}", show(&b), base + 2)
    });
    case.log("structural-bounds-without-criteria", within(structural, i), || {
        format!("{} structural {structural:?} index {i}", show(&b))
    });
    let literal = drazin_oneside_literal(&b)?;
    case.log("displayed-formula", Some(&literal) == r.drazin.as_ref(), || show(&b));
    Ok(())
}

fn gamma_omega_suite(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let b = if gen::coin(rng, 0.5) {
        mixed_singular_gen(rng)
    } else {
        let n = gen::dim(rng, 1, 4);
        let m = gen::dim(rng, 1, 4);
        let a = gen::square(rng, n);
        blocks(a, gen::sparse(rng, n, m, 0.6), gen::sparse(rng, m, n, 0.6))
    };
    let (gamma, omega) = gamma_omega(&b)?;
    let ig = drazin_index(&gamma)?;
    let io = drazin_index(&omega)?;
    if ig >= 1 {
        case.check("omega-index-one-less", io + 1 == ig, || format!("{} i(Gamma)={ig} i(Omega)={io}", show(&b)));
    }
    let od = drazin(&omega)?.inverse;
    case.check("gamma-drazin-from-omega", &od.p(2) * &gamma == oracle_drazin(&gamma), || show(&b));
    let i = index_m(&b)?;
    case.check("m-and-gamma-index-gap", i.abs_diff(ig) <= 1, || {
        format!("{} i(M)={i} i(Gamma)={ig}", show(&b))
    });
    Ok(())
}

fn zero_product(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let b = zero_product_gen(rng);
    let r = drazin_bc_zero(&b)?;
    let ia = drazin_index(&b.a)?;
    let bounds = expected_bounds(&b, (ia, ia + 2))?;
    let i = closed_form(case, &b, &r, bounds)?;
    case.log("structural-bounds-without-criteria", within((ia, ia + 2), i), || {
        format!("{} i(A)={ia} index {i}", show(&b))
    });
    case.log("attains-i(A)", i == ia, String::new);
    case.log("attains-i(A)+1", i == ia + 1, String::new);
    case.log("attains-i(A)+2", i == ia + 2, String::new);
    Ok(())
}

fn unit_index_product(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let orthogonal = gen::coin(rng, 0.5);
    let f = if orthogonal { orthogonal_gen } else { one_side_gen };
    let b = draw(rng, f, |b| a_and_bc_singular(b) && drazin_index(&b.w()).is_ok_and(|i| i == 1));
    if !a_and_bc_singular(&b) || drazin_index(&b.w())? != 1 {
        return Ok(());
    }
    let ia = drazin_index(&b.a)?;
    let i = index_m(&b)?;
    let bca_zero = (&b.w() * &b.a).is_zero();
    let (claim, structural) = if bca_zero {
        ("two-sided-bounds", (ia, ia + 2))
    } else {
        ("one-sided-bounds", (ia - 1, ia + 4))
    };
    let bounds = expected_bounds(&b, structural)?;
    case.check(claim, within(bounds, i), || format!("{} bounds {bounds:?} index {i}", show(&b)));
    let r = classify_and_solve(&b)?;
    case.check("closed-form-equals-oracle", r.drazin == Some(oracle_drazin(&assemble(&b))), || show(&b));
    Ok(())
}

fn zero_leading(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let gen_a_zero = |rng: &mut CaseRng| {
        let n = gen::dim(rng, 1, 4);
        let m = gen::dim(rng, 1, 4);
        let mut b = gen::sparse(rng, n, m, 0.6);
        if gen::coin(rng, 0.5) {
            b = &gen::nilpotent(rng, n) * &b;
        }
        let c = gen::sparse(rng, m, n, 0.6);
        blocks(Matrix::zeros(n, n), b, c)
    };
    let b = draw(rng, gen_a_zero, |b| !is_invertible(&b.w()));
    if is_invertible(&b.w()) {
        return Ok(());
    }
    let r = drazin_a_zero(&b)?;
    let iw = drazin_index(&b.w())?;
    let structural = (2 * iw - 1, 2 * iw + 1);
    let bounds = expected_bounds(&b, structural)?;
    let i = closed_form(case, &b, &r, bounds)?;
    case.log("structural-bounds-without-criteria", within(structural, i), || {
        format!("{} i(BC)={iw} index {i}", show(&b))
    });
    let (n, m) = (b.n(), b.m());
    let wd = drazin(&b.w())?.inverse;
    let alt = Matrix::block2(&Matrix::zeros(n, n), &(&wd * &b.b), &(&b.c * &wd), &Matrix::zeros(m, m))?;
    case.check("bc-drazin-form", alt == oracle_drazin(&assemble(&b)), || show(&b));
    Ok(())
}

fn nonsingular_product(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let gen_bc = |rng: &mut CaseRng| {
        let n = gen::dim(rng, 1, 4);
        let m = if gen::coin(rng, 0.4) { n } else { gen::dim(rng, n, n + 3) };
        let a = gen::square(rng, n);
        blocks(a, gen::matrix(rng, n, m), gen::matrix(rng, m, n))
    };
    let b = draw(rng, gen_bc, |b| is_invertible(&b.w()));
    if !is_invertible(&b.w()) {
        return Ok(());
    }
    let r = group_bc_nonsingular(&b)?;
    let both = is_invertible(&b.b) && is_invertible(&b.c);
    let i = index_m(&b)?;
    case.check("dichotomy", i == usize::from(!both), || format!("{} index {i}", show(&b)));
    case.check("closed-form-equals-oracle", r.drazin == Some(oracle_drazin(&assemble(&b))), || show(&b));
    Ok(())
}

fn nonsingular_leading(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 4);
    let m = gen::dim(rng, 1, 4);
    let a = gen::invertible(rng, n);
    let (b, c) = match gen::dim(rng, 0, 2) {
        0 => (gen::matrix(rng, n, m), Matrix::zeros(m, n)),
        1 => (Matrix::zeros(n, m), gen::matrix(rng, m, n)),
        _ => {
            let b = gen::sparse(rng, n, m, 0.5);
            let c = gen::from_null_space(rng, &b, n);
            (b, c)
        }
    };
    let b = blocks(a, b, c);
    let r = drazin_a_nonsingular_bc_zero(&b)?;
    let i = index_m(&b)?;
    case.check("closed-form-equals-oracle", r.drazin == Some(oracle_drazin(&assemble(&b))), || show(&b));
    // Direct evaluation of the criterion with fresh {1}-inverses.
    let bm = gen::one_inverse_of(rng, &b.b);
    let cm = gen::one_inverse_of(rng, &b.c);
    let z = group_criterion_z(&b, &bm, &cm);
    let zm = gen::one_inverse_of(rng, &z);
    let id = Matrix::identity(n);
    let cc = &cm * &b.c;
    let crit = &(&b.a * &(&id - &cc))
        + &(&(&(&id - &(&z * &zm)) * &(&id - &(&b.b * &bm))) * &(&(&id + &(&b.a * &cc)) - &cc));
    let predicted = if is_invertible(&crit) { 1 } else { 2 };
    case.check("criterion-decides-index", i == predicted, || {
        format!("{} predicted {predicted} index {i}", show(&b))
    });
    Ok(())
}

fn identity_coupling(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let n = gen::dim(rng, 1, 4);
    let (a, c) = match gen::dim(rng, 0, 3) {
        0 => {
            // AC = CA = 0 through complementary blocks.
            let p = gen::dim(rng, 0, n);
            let v = gen::unimodular(rng, n);
            let vi = inverse(&v).expect("unimodular");
            let a1 = gen::square(rng, p);
            let c1 = gen::singular(rng, n - p);
            let a = &(&v * &Matrix::diag_blocks(&[&a1, &Matrix::zeros(n - p, n - p)])) * &vi;
            let c = &(&v * &Matrix::diag_blocks(&[&Matrix::zeros(p, p), &c1])) * &vi;
            (a, c)
        }
        1 => {
            let a = gen::singular(rng, n);
            let c = gen::from_null_space(rng, &a, n);
            (a, c)
        }
        2 => (gen::square(rng, n), gen::invertible(rng, n)),
        _ => (gen::square(rng, n), gen::square(rng, n)),
    };
    let r = index_b_identity(&a, &c)?;
    let i = drazin_index(&assemble(&blocks(a.clone(), Matrix::identity(n), c.clone())))?;
    let ctx = || format!("A={} C={}", a.to_json(), c.to_json());
    case.check("closed-form-equals-oracle", r.drazin.as_ref().is_some_and(|d| *d == oracle_drazin(&assemble(&blocks(a.clone(), Matrix::identity(n), c.clone())))), ctx);
    let ic = drazin_index(&c)?;
    case.check("invertible-iff-c-invertible", (i == 0) == (ic == 0), ctx);
    if ic > 0 {
        let cm = gen::one_inverse_of(rng, &c);
        let id = Matrix::identity(n);
        let crit = is_invertible(&(&c - &(&a * &(&id - &(&cm * &c)))));
        case.check("group-criterion", crit == (i == 1), ctx);
        if !crit {
            let ia = drazin_index(&a)?;
            let (ac, ca) = ((&a * &c).is_zero(), (&c * &a).is_zero());
            if ac && ca {
                case.check("orthogonal-exact-index", i == (ia + 1).max(2 * ic), ctx);
            } else if ac {
                case.check("one-side-bounds", within((ia.max(2 * ic - 1), ia + 2 * ic + 1), i), ctx);
            }
        }
    }
    case.check("report-bounds", r.bounds_hold(), ctx);
    Ok(())
}

fn classify(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let b = match gen::dim(rng, 0, 3) {
        0 => mixed_singular_gen(rng),
        1 => {
            let n = gen::dim(rng, 1, 4);
            let m = gen::dim(rng, 1, 4);
            blocks(gen::square(rng, n), gen::matrix(rng, n, m), gen::matrix(rng, m, n))
        }
        2 => {
            let n = gen::dim(rng, 1, 4);
            let m = gen::dim(rng, 1, 3);
            let b = gen::sparse(rng, n, m, 0.5);
            let c = gen::from_null_space(rng, &b, n);
            blocks(gen::invertible(rng, n), b, c)
        }
        _ => {
            let n = gen::dim(rng, 1, 3);
            blocks(gen::square(rng, n), Matrix::identity(n), gen::square(rng, n))
        }
    };
    let r = classify_and_solve(&b)?;
    let m = assemble(&b);
    let i = drazin_index(&m)?;
    case.check("verified", r.verified, || show(&b));
    case.check("equals-oracle", r.drazin == Some(oracle_drazin(&m)), || show(&b));
    case.check("bounds-contain-index", r.bounds_hold() && r.index == Some(i), || show(&b));
    let forced = crate::antitri::solve_branch(&b, r.branch)?;
    let same = (forced.branch, forced.index, forced.lower_bound, forced.upper_bound, &forced.drazin)
        == (r.branch, r.index, r.lower_bound, r.upper_bound, &r.drazin);
    case.check("forced-branch-agrees", same, || format!("{} branch {}", show(&b), r.branch));
    case.log("closed-form-branch", r.branch != Branch::Generic, String::new);
    Ok(())
}
