//! Suites for the digraph layer.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use super::gen::{self, CaseRng};
use super::{oracle_drazin, Case, Suite};
use crate::antitri::{assemble, classify_and_solve, Branch, IndexClass};
use crate::digraph::{
    adjacency, bipartite_blocks, blocks_digraph, permutation_matrix, similarity_invariance_check,
    Digraph, StarFamily,
};
use crate::error::Result;
use crate::exactmat::{frac, int, inverse, is_invertible, Matrix, Rational};
use crate::geninv::{drazin, drazin_index, verify_drazin};

pub(super) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "permutation", description: "relabelling vertices conjugates the adjacency matrix and its Drazin inverse", run: permutation },
        Suite { name: "star-digraphs", description: "linked stars and double stars are group invertible with verified M^#", run: stars },
        Suite { name: "bipartite", description: "bipartite [[0, B], [C, 0]]: closed forms and index bounds", run: bipartite },
    ]
}

fn weight(rng: &mut CaseRng) -> Rational {
    let num = *[-2, -1, 1, 2, 3].choose(rng).expect("nonempty");
    if rng.random_bool(0.2) {
        frac(num, 2)
    } else {
        int(num)
    }
}

fn positive(rng: &mut CaseRng) -> Rational {
    int(rng.random_range(1..=3))
}

fn nonzero(rng: &mut CaseRng) -> Rational {
    let v = rng.random_range(1..=2);
    int(if rng.random_bool(0.5) { v } else { -v })
}

fn random_digraph(rng: &mut CaseRng) -> Digraph {
    let n = gen::dim(rng, 1, 6);
    let density = rng.random_range(0.15..0.6);
    let mut arcs = Vec::new();
    for s in 1..=n {
        for t in 1..=n {
            if rng.random_bool(density) {
                arcs.push((s, t, weight(rng)));
            }
        }
    }
    Digraph::new(n, arcs).expect("distinct arcs")
}

fn permutation(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let g = random_digraph(rng);
    let mut perm: Vec<usize> = (1..=g.n()).collect();
    perm.shuffle(rng);
    let a = adjacency(&g);
    let p = permutation_matrix(&perm)?;
    let pi = inverse(&p)?;
    let conj = &(&p * &a) * &pi;
    let relabelled = adjacency(&g.relabel(&perm)?);
    let ctx = || format!("A={} perm={perm:?}", a.to_json());
    case.check("conjugation-identity", conj == relabelled, ctx);
    case.check("drazin-conjugates", oracle_drazin(&relabelled) == &(&p * &oracle_drazin(&a)) * &pi, ctx);
    case.check("index-invariant", drazin_index(&relabelled)? == drazin_index(&a)?, ctx);
    case.check("library-check", similarity_invariance_check(&g, &perm)?, ctx);
    Ok(())
}

fn leaf_pairs(rng: &mut CaseRng, len: usize, f: fn(&mut CaseRng) -> Rational) -> (Vec<Rational>, Vec<Rational>) {
    ((0..len).map(|_| f(rng)).collect(), (0..len).map(|_| f(rng)).collect())
}

/// A linked star with at least one hub carrying two or more leaves, or a
/// double star with at least three leaves, so that `B` is not square.
fn star(rng: &mut CaseRng) -> StarFamily {
    if rng.random_bool(0.5) {
        let k = gen::dim(rng, 1, 3);
        let mut lens: Vec<usize> = (0..k).map(|_| gen::dim(rng, 1, 3)).collect();
        let j = gen::dim(rng, 0, k - 1);
        lens[j] = lens[j].max(2);
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        for &len in &lens {
            let (x, y) = leaf_pairs(rng, len, positive);
            xs.push(x);
            ys.push(y);
        }
        let hub = Matrix::from_fn(k, k, |i, j| {
            if i != j && rng.random_bool(0.5) {
                positive(rng)
            } else {
                int(0)
            }
        });
        StarFamily::LinkedStar { hub, xs, ys }
    } else {
        let lx = gen::dim(rng, 1, 3);
        let lz = gen::dim(rng, if lx == 1 { 2 } else { 1 }, 3);
        let (x, y) = loop {
            let p = leaf_pairs(rng, lx, nonzero);
            if p.0.iter().zip(&p.1).map(|(a, b)| a * b).sum::<Rational>() != int(0) {
                break p;
            }
        };
        let (z, w) = loop {
            let p = leaf_pairs(rng, lz, nonzero);
            if p.0.iter().zip(&p.1).map(|(a, b)| a * b).sum::<Rational>() != int(0) {
                break p;
            }
        };
        StarFamily::DoubleStar { a: weight(rng), b: weight(rng), x, z, y, w }
    }
}

fn stars(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let family = star(rng);
    let b = family.blocks()?;
    let r = classify_and_solve(&b)?;
    let m = assemble(&b);
    let ctx = || format!("{family:?}");
    case.check("bc-nonsingular-branch", r.branch == Branch::BCNonsingular, ctx);
    case.check("group-invertible", r.class == IndexClass::GroupInvertible, ctx);
    let d = r.drazin.clone().unwrap_or_else(|| Matrix::zeros(0, 0));
    let group = &(&m * &d) * &m == m && &(&d * &m) * &d == d && &m * &d == &d * &m;
    case.check("group-inverse-equations", group, ctx);
    case.check("equals-oracle", d == oracle_drazin(&m), ctx);
    case.check("digraph-round-trip", adjacency(&blocks_digraph(&b)) == m, ctx);
    Ok(())
}

/// Random bipartite digraph on `2k` vertices with a random left part.
fn bipartite_digraph(rng: &mut CaseRng) -> (Digraph, Vec<usize>) {
    let k = gen::dim(rng, 1, 4);
    let mut vertices: Vec<usize> = (1..=2 * k).collect();
    vertices.shuffle(rng);
    let mut left = vertices[..k].to_vec();
    left.sort_unstable();
    let right: Vec<usize> = vertices[k..].to_vec();
    let density = rng.random_range(0.3..0.9);
    let mut arcs = Vec::new();
    for &l in &left {
        for &r in &right {
            if rng.random_bool(density) {
                arcs.push((l, r, weight(rng)));
            }
            if rng.random_bool(density) {
                arcs.push((r, l, weight(rng)));
            }
        }
    }
    (Digraph::new(2 * k, arcs).expect("distinct arcs"), left)
}

fn bipartite(rng: &mut CaseRng, case: &mut Case) -> Result<()> {
    let (g, left) = bipartite_digraph(rng);
    let blocks = bipartite_blocks(&g, &left)?;
    let m = assemble(&blocks);
    let (b, c) = (&blocks.b, &blocks.c);
    let k = blocks.n();
    let ctx = || format!("B={} C={}", b.to_json(), c.to_json());
    // The block matrix is the adjacency matrix with the left part first.
    let mut order = left.clone();
    order.extend((1..=2 * k).filter(|v| !left.contains(v)));
    let reordered = Matrix::from_fn(2 * k, 2 * k, |i, j| adjacency(&g)[(order[i] - 1, order[j] - 1)].clone());
    case.check("block-form", reordered == m, ctx);
    let z = Matrix::zeros(k, k);
    let w = blocks.w();
    let md = oracle_drazin(&m);
    let i = drazin_index(&m)?;
    if is_invertible(&w) {
        let wi = inverse(&w)?;
        let sharp = Matrix::block2(&z, &(&wi * b), &(c * &wi), &z)?;
        case.check("group-inverse-form", sharp == md && verify_drazin(&m, &sharp, 1), ctx);
        let both = is_invertible(b) && is_invertible(c);
        case.check("invertible-iff-b-and-c", (i == 0) == both && i <= 1, ctx);
    } else {
        let wd = drazin(&w)?;
        let cbd = drazin(&(c * b))?.inverse;
        let first = Matrix::block2(&z, &(b * &cbd), &(&cbd * c), &z)?;
        let second = Matrix::block2(&z, &(&wd.inverse * b), &(c * &wd.inverse), &z)?;
        case.check("cb-drazin-form", first == md, ctx);
        case.check("bc-drazin-form", second == md, ctx);
        case.check("index-bounds", 1 <= i && i <= 2 * wd.index + 1, ctx);
    }
    Ok(())
}
