//! Weighted digraphs, adjacency matrices, bipartite block extraction and the
//! linked-star and double-star block families.
//!
//! Edge-list format: the first content line holds the vertex count `n`, every
//! further line is `i j w` for an arc `i -> j` of nonzero rational weight `w`,
//! with 1-based vertex ids. Blank lines and `#` comments are skipped.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{Signed, Zero};

use crate::antitri::AntiTriangularBlocks;
use crate::error::{Error, Result};
use crate::exactmat::rational::parse_rational_at;
use crate::exactmat::{Matrix, Rational};
use crate::geninv::{drazin, drazin_index};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
    pub weight: Rational,
}

/// Vertices are `1..=n`; arcs are kept in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize, Rational)>) -> Result<Self> {
        let mut g = Digraph { n, arcs: Vec::new() };
        for (s, t, w) in arcs {
            g.push(s, t, w, 0)?;
        }
        Ok(g)
    }

    fn push(&mut self, source: usize, target: usize, weight: Rational, line: usize) -> Result<()> {
        for v in [source, target] {
            if v == 0 || v > self.n {
                return Err(Error::parse(line, format!("vertex {v} outside 1..={}", self.n)));
            }
        }
        if weight.is_zero() {
            return Err(Error::ZeroWeight(source, target));
        }
        if self.arcs.iter().any(|a| a.source == source && a.target == target) {
            return Err(Error::DuplicateArc(source, target));
        }
        self.arcs.push(Arc { source, target, weight });
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// The digraph whose adjacency matrix is `P A P^{-1}` for the
    /// permutation sending vertex `v` to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        check_permutation(perm, self.n)?;
        Digraph::new(
            self.n,
            self.arcs
                .iter()
                .map(|a| (perm[a.source - 1], perm[a.target - 1], a.weight.clone())),
        )
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(hline, format!("bad vertex count '{header}'")))?;
    let mut g = Digraph { n, arcs: Vec::new() };
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [s, t, w] = toks[..] else {
            return Err(Error::parse(ln, "expected 'source target weight'"));
        };
        let vertex = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(ln, format!("bad vertex id '{tok}'")))
        };
        g.push(vertex(s)?, vertex(t)?, parse_rational_at(w, ln)?, ln)?;
    }
    Ok(g)
}

pub fn adjacency(g: &Digraph) -> Matrix {
    let mut m = Matrix::zeros(g.n, g.n);
    for a in &g.arcs {
        m[(a.source - 1, a.target - 1)] = a.weight.clone();
    }
    m
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "length {} for {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true) {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection on 1..={n}")));
        }
    }
    Ok(())
}

/// Permutation matrix of the relabelling `v -> perm[v - 1]` (1-based).
pub fn permutation_matrix(perm: &[usize]) -> Result<Matrix> {
    check_permutation(perm, perm.len())?;
    let zero_based: Vec<usize> = perm.iter().map(|p| p - 1).collect();
    Ok(Matrix::permutation(&zero_based))
}

/// Whether relabelling the vertices by `perm` preserves the index of the
/// adjacency matrix and conjugates its Drazin inverse:
/// `(P A P^{-1})^D = P A^D P^{-1}`.
pub fn similarity_invariance_check(g: &Digraph, perm: &[usize]) -> Result<bool> {
    check_permutation(perm, g.n)?;
    let p = permutation_matrix(perm)?;
    let pt = p.transpose();
    let a = adjacency(g);
    let conj = &(&p * &a) * &pt;
    if conj != adjacency(&g.relabel(perm)?) {
        return Ok(false);
    }
    let da = drazin(&a)?;
    let dc = drazin(&conj)?;
    Ok(da.index == dc.index
        && drazin_index(&conj)? == drazin_index(&a)?
        && dc.inverse == &(&p * &da.inverse) * &pt)
}

/// Blocks `(0, B, C)` of the bipartite adjacency matrix for the partition
/// `left` / complement, each part in ascending vertex order: `B` holds the
/// arcs from left to right and `C` those from right to left.
pub fn bipartite_blocks(g: &Digraph, left: &[usize]) -> Result<AntiTriangularBlocks> {
    let mut in_left = vec![false; g.n];
    for &v in left {
        if v == 0 || v > g.n {
            return Err(Error::InvalidPermutation(format!("vertex {v} outside 1..={}", g.n)));
        }
        in_left[v - 1] = true;
    }
    let lefts: Vec<usize> = (0..g.n).filter(|&v| in_left[v]).collect();
    let rights: Vec<usize> = (0..g.n).filter(|&v| !in_left[v]).collect();
    if lefts.len() != rights.len() {
        return Err(Error::UnequalParts {
            left: lefts.len(),
            right: rights.len(),
        });
    }
    let pos = |v: usize, part: &[usize]| part.binary_search(&v).expect("vertex in part");
    let k = lefts.len();
    let mut b = Matrix::zeros(k, k);
    let mut c = Matrix::zeros(k, k);
    for a in &g.arcs {
        let (s, t) = (a.source - 1, a.target - 1);
        match (in_left[s], in_left[t]) {
            (true, false) => b[(pos(s, &lefts), pos(t, &rights))] = a.weight.clone(),
            (false, true) => c[(pos(s, &rights), pos(t, &lefts))] = a.weight.clone(),
            _ => return Err(Error::NotBipartiteForPartition(a.source, a.target)),
        }
    }
    AntiTriangularBlocks::new(Matrix::zeros(k, k), b, c)
}

/// Left part of a 2-colouring of the underlying undirected graph; the
/// smallest vertex of every component is coloured left.
pub fn two_coloring(g: &Digraph) -> Result<Vec<usize>> {
    let mut nbrs = vec![Vec::new(); g.n];
    for a in &g.arcs {
        nbrs[a.source - 1].push(a.target - 1);
        nbrs[a.target - 1].push(a.source - 1);
    }
    let mut colour: Vec<Option<bool>> = vec![None; g.n];
    for start in 0..g.n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = colour[v].unwrap();
            for &u in &nbrs[v] {
                match colour[u] {
                    None => {
                        colour[u] = Some(!cv);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => return Err(Error::NotBipartite),
                    _ => {}
                }
            }
        }
    }
    Ok((0..g.n).filter(|&v| colour[v] == Some(true)).map(|v| v + 1).collect())
}

/// [`bipartite_blocks`] for the partition found by [`two_coloring`].
pub fn bipartite_blocks_auto(g: &Digraph) -> Result<AntiTriangularBlocks> {
    bipartite_blocks(g, &two_coloring(g)?)
}

/// Parameters of the two star families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarFamily {
    /// Hub adjacency `A` (`k x k`) and leaf vectors: `B = diag(x_1^T, ..., x_k^T)`,
    /// `C = diag(y_1, ..., y_k)`, every `x_i`, `y_i` strictly positive with
    /// `len(x_i) = len(y_i)`.
    LinkedStar {
        hub: Matrix,
        xs: Vec<Vec<Rational>>,
        ys: Vec<Vec<Rational>>,
    },
    /// `A = [[0, a], [b, 0]]`, `B = diag(x^T, z^T)`, `C = diag(y, w)` with
    /// entrywise nonzero vectors, `len(x) = len(y)`, `len(z) = len(w)`.
    DoubleStar {
        a: Rational,
        b: Rational,
        x: Vec<Rational>,
        z: Vec<Rational>,
        y: Vec<Rational>,
        w: Vec<Rational>,
    },
}

impl StarFamily {
    pub fn blocks(&self) -> Result<AntiTriangularBlocks> {
        match self {
            StarFamily::LinkedStar { hub, xs, ys } => linked_star_blocks(hub, xs, ys),
            StarFamily::DoubleStar { a, b, x, z, y, w } => double_star_blocks(a, b, x, z, y, w),
        }
    }
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `diag(v_1^T, ..., v_k^T)`: row `i` carries `v_i` in its own column range.
fn row_block_diag(vs: &[Vec<Rational>]) -> Matrix {
    let total: usize = vs.iter().map(Vec::len).sum();
    let mut m = Matrix::zeros(vs.len(), total);
    let mut col = 0;
    for (i, v) in vs.iter().enumerate() {
        for (j, e) in v.iter().enumerate() {
            m[(i, col + j)] = e.clone();
        }
        col += v.len();
    }
    m
}

fn leaf_lengths_match(what: &str, xs: &[Vec<Rational>], ys: &[Vec<Rational>]) -> Result<()> {
    if xs.len() != ys.len() || xs.iter().zip(ys).any(|(x, y)| x.len() != y.len()) {
        return Err(Error::HypothesisViolated(format!("{what}: leaf vectors have mismatched lengths")));
    }
    Ok(())
}

pub fn linked_star_blocks(hub: &Matrix, xs: &[Vec<Rational>], ys: &[Vec<Rational>]) -> Result<AntiTriangularBlocks> {
    leaf_lengths_match("linked star", xs, ys)?;
    for (name, vs) in [("x", xs), ("y", ys)] {
        for (i, v) in vs.iter().enumerate() {
            if v.is_empty() || v.iter().any(|e| !e.is_positive()) {
                return Err(Error::NonPositiveVector(format!("{name}_{}", i + 1)));
            }
        }
    }
    let b = row_block_diag(xs);
    let c = row_block_diag(ys).transpose();
    AntiTriangularBlocks::new(hub.clone(), b, c)
}

pub fn double_star_blocks(
    a: &Rational,
    b: &Rational,
    x: &[Rational],
    z: &[Rational],
    y: &[Rational],
    w: &[Rational],
) -> Result<AntiTriangularBlocks> {
    let xs = [x.to_vec(), z.to_vec()];
    let ys = [y.to_vec(), w.to_vec()];
    leaf_lengths_match("double star", &xs, &ys)?;
    for (name, v) in [("x", x), ("z", z), ("y", y), ("w", w)] {
        if v.is_empty() || v.iter().any(Zero::is_zero) {
            return Err(Error::ZeroEntry(name.to_string()));
        }
    }
    if dot(x, y).is_zero() {
        return Err(Error::ZeroInnerProduct("x^T y".into()));
    }
    if dot(z, w).is_zero() {
        return Err(Error::ZeroInnerProduct("z^T w".into()));
    }
    let mut hub = Matrix::zeros(2, 2);
    hub[(0, 1)] = a.clone();
    hub[(1, 0)] = b.clone();
    AntiTriangularBlocks::new(hub, row_block_diag(&xs), row_block_diag(&ys).transpose())
}

/// Digraph whose adjacency matrix is `[[A, B], [C, 0]]`.
pub fn blocks_digraph(blocks: &AntiTriangularBlocks) -> Digraph {
    let m = crate::antitri::assemble(blocks);
    let mut arcs = BTreeMap::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                arcs.insert((i + 1, j + 1), m[(i, j)].clone());
            }
        }
    }
    Digraph {
        n: m.rows(),
        arcs: arcs
            .into_iter()
            .map(|((source, target), weight)| Arc { source, target, weight })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antitri::{assemble, classify_and_solve, Branch, IndexClass};
    use crate::exactmat::{frac, int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn parse_examples() {
        let g = parse_digraph("2\n1 2 1\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(adjacency(&g), Matrix::from_ints(&[[0, 1], [0, 0]]));
        let g = parse_digraph("# path\n3\n1 2 1/2\n\n2 3 -3\n").unwrap();
        assert_eq!(adjacency(&g)[(0, 1)], frac(1, 2));
        assert_eq!(adjacency(&g)[(1, 2)], int(-3));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_digraph("2\n1 2 1\n1 2 3\n"), Err(Error::DuplicateArc(1, 2)));
        assert_eq!(parse_digraph("2\n1 2 0\n"), Err(Error::ZeroWeight(1, 2)));
        assert!(matches!(parse_digraph("2\n1 3 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("2\n1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_digraph("").is_err());
    }

    #[test]
    fn adjacency_cases() {
        let g = Digraph::new(3, []).unwrap();
        assert!(adjacency(&g).is_zero());
        let g = Digraph::new(3, [(1, 1, int(5))]).unwrap();
        assert_eq!(adjacency(&g), Matrix::diagonal(&ints(&[5, 0, 0])));
        let g = parse_digraph("3\n1 2 1\n2 3 1\n3 1 1\n").unwrap();
        assert_eq!(adjacency(&g), Matrix::from_ints(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]));
    }

    #[test]
    fn invariance_under_relabelling() {
        let g = parse_digraph("3\n1 2 1\n2 3 1\n3 1 1\n").unwrap();
        assert!(similarity_invariance_check(&g, &[1, 2, 3]).unwrap());
        assert!(similarity_invariance_check(&g, &[2, 1, 3]).unwrap());
        let g = parse_digraph("4\n1 2 1\n2 3 2\n4 4 1\n").unwrap();
        assert!(similarity_invariance_check(&g, &[4, 3, 1, 2]).unwrap());
        assert!(matches!(
            similarity_invariance_check(&g, &[1, 1, 2, 3]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn bipartite_extraction() {
        let g = parse_digraph("2\n1 2 1\n2 1 1\n").unwrap();
        let blocks = bipartite_blocks(&g, &[1]).unwrap();
        assert_eq!(blocks.b, Matrix::from_ints(&[[1]]));
        assert_eq!(blocks.c, Matrix::from_ints(&[[1]]));
        let g = parse_digraph("4\n1 3 1\n1 2 1\n").unwrap();
        assert_eq!(bipartite_blocks(&g, &[1, 2]), Err(Error::NotBipartiteForPartition(1, 2)));
        assert_eq!(
            bipartite_blocks(&g, &[1]),
            Err(Error::UnequalParts { left: 1, right: 3 })
        );
    }

    #[test]
    fn bipartite_reassembles() {
        let g = parse_digraph("4\n1 2 1/2\n3 2 -1\n4 1 2\n2 3 3\n").unwrap();
        let left = two_coloring(&g).unwrap();
        assert_eq!(left, vec![1, 3]);
        let blocks = bipartite_blocks(&g, &left).unwrap();
        // order 1, 3, 2, 4
        let p = permutation_matrix(&[1, 3, 2, 4]).unwrap();
        let reordered = &(&p.transpose() * &adjacency(&g)) * &p;
        assert_eq!(assemble(&blocks), reordered);
        let odd = parse_digraph("3\n1 2 1\n2 3 1\n3 1 1\n").unwrap();
        assert_eq!(two_coloring(&odd), Err(Error::NotBipartite));
    }

    #[test]
    fn linked_star_examples() {
        let blocks = linked_star_blocks(&Matrix::zeros(1, 1), &[ints(&[1])], &[ints(&[1])]).unwrap();
        assert_eq!(blocks.w(), Matrix::from_ints(&[[1]]));
        let hub = Matrix::from_ints(&[[0, 1], [1, 0]]);
        let v = ints(&[1, 1]);
        let blocks = linked_star_blocks(&hub, &[v.clone(), v.clone()], &[v.clone(), v.clone()]).unwrap();
        assert_eq!(blocks.w(), Matrix::from_ints(&[[2, 0], [0, 2]]));
        let r = classify_and_solve(&blocks).unwrap();
        assert_eq!((r.branch, r.class), (Branch::BCNonsingular, IndexClass::GroupInvertible));
        assert!(matches!(
            linked_star_blocks(&hub, &[v.clone(), ints(&[1, 0])], &[v.clone(), v]),
            Err(Error::NonPositiveVector(_))
        ));
    }

    #[test]
    fn double_star_examples() {
        let fam = StarFamily::DoubleStar {
            a: int(1),
            b: int(2),
            x: ints(&[1, 1]),
            z: ints(&[1, -1, 1]),
            y: ints(&[1, 1]),
            w: ints(&[1, -1, 1]),
        };
        let blocks = fam.blocks().unwrap();
        let r = classify_and_solve(&blocks).unwrap();
        assert_eq!(r.index, Some(1));
        assert_eq!(r.class, IndexClass::GroupInvertible);
        let bad = double_star_blocks(&int(0), &int(0), &ints(&[1, 1]), &ints(&[1]), &ints(&[1, -1]), &ints(&[1]));
        assert_eq!(bad, Err(Error::ZeroInnerProduct("x^T y".into())));
        let zero = double_star_blocks(&int(0), &int(0), &ints(&[1, 0]), &ints(&[1]), &ints(&[1, 1]), &ints(&[1]));
        assert!(matches!(zero, Err(Error::ZeroEntry(_))));
    }

    #[test]
    fn blocks_round_trip_through_digraph() {
        let blocks = double_star_blocks(&int(1), &int(0), &ints(&[1]), &ints(&[2]), &ints(&[3]), &ints(&[4])).unwrap();
        assert_eq!(adjacency(&blocks_digraph(&blocks)), assemble(&blocks));
    }
}
