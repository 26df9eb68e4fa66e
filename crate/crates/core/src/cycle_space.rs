//! GF(2) chain spaces: the boundary operator, cycle rank, fundamental
//! cycle bases, and rank computation by word-level XOR elimination.

use crate::graph::Graph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleSpaceError {
    #[error("chain has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("edge set is not a forest (contains a cycle)")]
    NotAForest,
    #[error("edge set does not span every component")]
    NotSpanning,
}

/// Packed GF(2) vector. Indexed by edge for 1-chains, by vertex for the
/// image of the boundary operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainVector {
    len: usize,
    words: Vec<u64>,
}

impl ChainVector {
    pub fn zero(len: usize) -> Self {
        ChainVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = ChainVector::zero(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &ChainVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection_size(&self, other: &ChainVector) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    fn leading_bit(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

impl Serialize for ChainVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.support().serialize(serializer)
    }
}

/// Image of a 1-chain under the boundary operator: each edge {x,y} maps to
/// x + y, so the result is the GF(2) vector of odd-degree vertices of the
/// chain's support.
pub fn boundary(g: &Graph, chain: &ChainVector) -> Result<ChainVector, CycleSpaceError> {
    if chain.len() != g.q() {
        return Err(CycleSpaceError::LengthMismatch {
            got: chain.len(),
            expected: g.q(),
        });
    }
    let mut out = ChainVector::zero(g.n());
    for k in 0..g.q() {
        if chain.get(k) {
            let (u, v) = g.edge(k);
            out.set(u, !out.get(u));
            out.set(v, !out.get(v));
        }
    }
    Ok(out)
}

/// Rank of a list of GF(2) vectors by Gaussian elimination.
pub fn gf2_rank(vectors: &[ChainVector]) -> usize {
    let mut basis: Vec<ChainVector> = Vec::new();
    let mut rank = 0;
    'outer: for v in vectors {
        let mut v = v.clone();
        loop {
            let Some(lead) = v.leading_bit() else {
                continue 'outer;
            };
            match basis.iter().find(|b| b.leading_bit() == Some(lead)) {
                Some(b) => v.xor_assign(b),
                None => break,
            }
        }
        basis.push(v);
        rank += 1;
    }
    rank
}

/// Cycle rank q - n + r. In debug builds the kernel dimension of the
/// boundary operator is computed independently and asserted equal.
pub fn cycle_rank(g: &Graph) -> usize {
    let r = g.component_count();
    let rank = g.q() + r - g.n();
    debug_assert_eq!(rank, kernel_dimension(g), "cycle rank formula vs ker(d)");
    rank
}

/// dim ker(boundary) = q - rank of the edge-to-vertex-pair matrix over GF(2).
fn kernel_dimension(g: &Graph) -> usize {
    let columns: Vec<ChainVector> = (0..g.q())
        .map(|k| {
            let (u, v) = g.edge(k);
            ChainVector::from_indices(g.n(), &[u, v])
        })
        .collect();
    g.q() - gf2_rank(&columns)
}

/// A GF(2) basis of the cycle space together with the witness cycles
/// realizing each vector.
#[derive(Debug, Clone)]
pub struct CycleBasis {
    pub vectors: Vec<ChainVector>,
    /// Vertex sequences (closed, first vertex not repeated) matching `vectors`.
    pub witness_cycles: Vec<Vec<usize>>,
}

/// One fundamental cycle per non-tree edge: the unique cycle in `forest`
/// plus that edge.
pub fn fundamental_basis(g: &Graph, forest: &[usize]) -> Result<CycleBasis, CycleSpaceError> {
    let n = g.n();
    let mut in_forest = vec![false; g.q()];
    for &k in forest {
        if k >= g.q() {
            return Err(CycleSpaceError::LengthMismatch {
                got: k,
                expected: g.q(),
            });
        }
        in_forest[k] = true;
    }
    // Forest check: edge count per component and acyclicity via union-find.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut count = 0;
    for k in 0..g.q() {
        if in_forest[k] {
            count += 1;
            let (u, v) = g.edge(k);
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(CycleSpaceError::NotAForest);
            }
            parent[ru] = rv;
        }
    }
    if count != n - g.component_count() {
        return Err(CycleSpaceError::NotSpanning);
    }

    // Adjacency restricted to the forest, for path lookups.
    let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for k in 0..g.q() {
        if in_forest[k] {
            let (u, v) = g.edge(k);
            tree_adj[u].push((v, k));
            tree_adj[v].push((u, k));
        }
    }
    let mut vectors = Vec::new();
    let mut witness_cycles = Vec::new();
    for k in 0..g.q() {
        if in_forest[k] {
            continue;
        }
        let (u, v) = g.edge(k);
        let path = tree_path(&tree_adj, n, u, v).expect("endpoints share a tree");
        let mut chain = ChainVector::zero(g.q());
        chain.set(k, true);
        for w in path.windows(2) {
            let ek = g.edge_index(w[0], w[1]).expect("tree edge exists");
            chain.set(ek, true);
        }
        debug_assert!(boundary(g, &chain).unwrap().is_zero());
        vectors.push(chain);
        witness_cycles.push(path);
    }
    debug_assert_eq!(vectors.len(), cycle_rank(g));
    debug_assert_eq!(gf2_rank(&vectors), vectors.len());
    Ok(CycleBasis {
        vectors,
        witness_cycles,
    })
}

/// Vertex path from `u` to `v` inside the forest, endpoints included.
fn tree_path(tree_adj: &[Vec<(usize, usize)>], n: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; n];
    prev[u] = u;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &(w, _) in &tree_adj[x] {
            if prev[w] == usize::MAX {
                prev[w] = x;
                queue.push_back(w);
            }
        }
    }
    if prev[v] == usize::MAX {
        return None;
    }
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::families::{complete, cycle};

    fn k4() -> Graph {
        complete(4)
    }

    #[test]
    fn boundary_of_cycle_is_zero() {
        let g = cycle(3);
        let all = ChainVector::from_indices(3, &[0, 1, 2]);
        assert!(boundary(&g, &all).unwrap().is_zero());
    }

    #[test]
    fn boundary_of_single_edge() {
        let g = Graph::parse("a b\nb c").unwrap();
        let one = ChainVector::from_indices(2, &[0]);
        let b = boundary(&g, &one).unwrap();
        assert_eq!(b.support(), vec![0, 1]);
    }

    #[test]
    fn boundary_is_linear_on_disjoint_triangles() {
        // two vertex-disjoint triangles
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let both = ChainVector::from_indices(6, &[0, 1, 2, 3, 4, 5]);
        assert!(boundary(&g, &both).unwrap().is_zero());
    }

    #[test]
    fn boundary_length_mismatch() {
        let g = cycle(3);
        let bad = ChainVector::zero(2);
        assert!(matches!(
            boundary(&g, &bad),
            Err(CycleSpaceError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn cycle_rank_values() {
        assert_eq!(cycle_rank(&Graph::parse("a b\nb c\nb d").unwrap()), 0);
        assert_eq!(cycle_rank(&k4()), 3);
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(cycle_rank(&k23), 2);
    }

    #[test]
    fn gf2_rank_cases() {
        assert_eq!(gf2_rank(&[]), 0);
        let v = ChainVector::from_indices(4, &[1, 3]);
        assert_eq!(gf2_rank(&[v.clone(), v.clone()]), 1);
    }

    #[test]
    fn gf2_rank_k4_triangles() {
        // the four triangle vectors of K4 are dependent: rank 3
        let g = k4();
        let mut vectors = Vec::new();
        for tri in [[0usize, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
            let ks = [
                g.edge_index(tri[0], tri[1]).unwrap(),
                g.edge_index(tri[1], tri[2]).unwrap(),
                g.edge_index(tri[2], tri[0]).unwrap(),
            ];
            vectors.push(ChainVector::from_indices(6, &ks));
        }
        assert_eq!(gf2_rank(&vectors), 3);
    }

    #[test]
    fn fundamental_basis_c5() {
        let g = cycle(5);
        let forest = vec![0, 1, 2, 3];
        let basis = fundamental_basis(&g, &forest).unwrap();
        assert_eq!(basis.vectors.len(), 1);
        assert_eq!(basis.vectors[0].count_ones(), 5);
    }

    #[test]
    fn fundamental_basis_k4_star_tree() {
        let g = k4();
        // star at vertex 0: edges 0-1, 0-2, 0-3 are indices 0, 1, 2
        let basis = fundamental_basis(&g, &[0, 1, 2]).unwrap();
        assert_eq!(basis.vectors.len(), 3);
        for v in &basis.vectors {
            assert_eq!(v.count_ones(), 3); // triangles through the center
            assert!(boundary(&g, v).unwrap().is_zero());
        }
        assert_eq!(gf2_rank(&basis.vectors), 3);
    }

    #[test]
    fn fundamental_basis_of_forest_is_empty() {
        let g = Graph::parse("a b\nb c").unwrap();
        let basis = fundamental_basis(&g, &[0, 1]).unwrap();
        assert!(basis.vectors.is_empty());
    }

    #[test]
    fn fundamental_basis_rejects_bad_forest() {
        let g = cycle(4);
        assert_eq!(
            fundamental_basis(&g, &[0, 1, 2, 3]).unwrap_err(),
            CycleSpaceError::NotAForest
        );
        assert_eq!(
            fundamental_basis(&g, &[0, 1]).unwrap_err(),
            CycleSpaceError::NotSpanning
        );
    }
}
