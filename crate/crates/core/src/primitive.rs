//! Primitive (chordless) cycle enumeration, the primitive cycle property,
//! and K4-subdivision-freeness via series-parallel reduction.

use crate::cycle_space::ChainVector;
use crate::graph::Graph;
use serde::Serialize;

/// A chordless cycle in canonical form: the vertex sequence starts at the
/// cycle's minimum vertex and proceeds toward its smaller neighbor, so each
/// cycle has exactly one representation up to rotation and reflection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimitiveCycle {
    /// Closed walk with distinct vertices; the first vertex is not repeated.
    pub vertices: Vec<usize>,
    /// Edge indices along the cycle, `edges[i]` joining `vertices[i]` and
    /// `vertices[i+1 mod len]`.
    pub edges: Vec<usize>,
    /// GF(2) indicator of `edges` over all graph edges.
    #[serde(skip)]
    pub chain: ChainVector,
}

impl PrimitiveCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub(crate) fn from_vertex_seq(g: &Graph, vertices: Vec<usize>) -> Self {
        let m = vertices.len();
        let edges: Vec<usize> = (0..m)
            .map(|i| {
                g.edge_index(vertices[i], vertices[(i + 1) % m])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect();
        let chain = ChainVector::from_indices(g.q(), &edges);
        debug_assert!(crate::cycle_space::boundary(g, &chain)
            .expect("chain length matches")
            .is_zero());
        PrimitiveCycle {
            vertices,
            edges,
            chain,
        }
    }
}

/// Canonical form of a cycle's vertex sequence: rotate the minimum vertex
/// to the front and walk toward its smaller neighbor.
pub fn canonical_cycle_order(vertices: &[usize]) -> Vec<usize> {
    let m = vertices.len();
    debug_assert!(m >= 3);
    let pos = (0..m).min_by_key(|&i| vertices[i]).unwrap();
    let fwd = |i: usize| vertices[(pos + i) % m];
    let bwd = |i: usize| vertices[(pos + m - i) % m];
    if fwd(1) <= bwd(1) {
        (0..m).map(fwd).collect()
    } else {
        (0..m).map(bwd).collect()
    }
}

/// All chordless cycles, each reported once.
///
/// DFS over chordless paths: a path `u0..uk` (all vertices > u0 except u0
/// itself) is extended only by neighbors of `uk` that are non-adjacent to
/// every earlier path vertex except possibly `u0`; a neighbor of `u0`
/// closes the cycle and is never extended past, so internal vertices are
/// never adjacent to `u0` and every emitted cycle is chordless by
/// construction. Reflections are removed by requiring the second vertex to
/// be smaller than the closing one. Output-sensitive and exponential in the
/// worst case.
pub fn enumerate_primitive_cycles(g: &Graph) -> Vec<PrimitiveCycle> {
    let n = g.n();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];
    for u0 in 0..n {
        path.clear();
        path.push(u0);
        on_path[u0] = true;
        let mut nbrs: Vec<usize> = g.neighbors(u0).iter().map(|&(w, _)| w).collect();
        nbrs.sort_unstable();
        for &u1 in nbrs.iter().filter(|&&w| w > u0) {
            path.push(u1);
            on_path[u1] = true;
            extend_chordless(g, &mut path, &mut on_path, &mut out);
            on_path[u1] = false;
            path.pop();
        }
        on_path[u0] = false;
    }
    out
}

fn extend_chordless(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<PrimitiveCycle>,
) {
    let u0 = path[0];
    let u1 = path[1];
    let uk = *path.last().unwrap();
    let mut candidates: Vec<usize> = g
        .neighbors(uk)
        .iter()
        .map(|&(w, _)| w)
        .filter(|&w| w > u0 && !on_path[w])
        .collect();
    candidates.sort_unstable();
    'next: for w in candidates {
        // w must not see any internal path vertex other than uk
        for &p in &path[1..path.len() - 1] {
            if g.adjacent(w, p) {
                continue 'next;
            }
        }
        if g.adjacent(w, u0) {
            if path.len() >= 2 && u1 < w {
                let mut cyc = path.clone();
                cyc.push(w);
                out.push(PrimitiveCycle::from_vertex_seq(g, cyc));
            }
            // extending past w would leave the chord w-u0 behind
        } else {
            path.push(w);
            on_path[w] = true;
            extend_chordless(g, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Free rank: the number of primitive cycles.
pub fn frank(g: &Graph) -> usize {
    enumerate_primitive_cycles(g).len()
}

#[derive(Debug, Clone)]
pub struct PcpVerdict {
    pub holds: bool,
    /// On failure, a pair of primitive cycles sharing at least two edges.
    pub violation: Option<(PrimitiveCycle, PrimitiveCycle)>,
}

/// Primitive cycle property: every two primitive cycles share at most one
/// edge.
pub fn pcp(g: &Graph) -> PcpVerdict {
    let cycles = enumerate_primitive_cycles(g);
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if cycles[i].chain.intersection_size(&cycles[j].chain) > 1 {
                return PcpVerdict {
                    holds: false,
                    violation: Some((cycles[i].clone(), cycles[j].clone())),
                };
            }
        }
    }
    PcpVerdict {
        holds: true,
        violation: None,
    }
}

/// True iff no block contains a subdivision of K4.
///
/// Each block with at least two edges is reduced as a multigraph by
/// suppressing degree-2 vertices and deleting parallel duplicates; a
/// 2-connected block is K4-subdivision-free exactly when this reaches a
/// single edge. Blocks with at most one edge pass trivially.
pub fn k4_subdivision_free(g: &Graph) -> bool {
    g.blocks()
        .blocks
        .iter()
        .all(|b| b.edges.len() <= 1 || sp_reduces(g, &b.edges))
}

/// Series-parallel reduction of one block, on a private multigraph.
fn sp_reduces(g: &Graph, block_edges: &[usize]) -> bool {
    // compact vertex ids local to the block
    let mut verts: Vec<usize> = block_edges
        .iter()
        .flat_map(|&k| {
            let (u, v) = g.edge(k);
            [u, v]
        })
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let mut edges: Vec<(usize, usize)> = block_edges
        .iter()
        .map(|&k| {
            let (u, v) = g.edge(k);
            (local(u), local(v))
        })
        .collect();
    let m = verts.len();
    loop {
        // drop parallel duplicates
        edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
        edges.dedup_by_key(|&mut (u, v)| (u.min(v), u.max(v)));
        if edges.len() == 1 {
            return true;
        }
        let mut degree = vec![0usize; m];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let Some(v2) = (0..m).find(|&v| degree[v] == 2) else {
            return false; // stuck: a K4 subdivision remains
        };
        let mut ends = Vec::with_capacity(2);
        edges.retain(|&(u, v)| {
            if u == v2 {
                ends.push(v);
                false
            } else if v == v2 {
                ends.push(u);
                false
            } else {
                true
            }
        });
        // parallels were deduped above, so the two neighbors are distinct
        debug_assert!(ends.len() == 2 && ends[0] != ends[1]);
        edges.push((ends[0], ends[1]));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_space::{cycle_rank, gf2_rank};
    use crate::graph::Graph;
    use crate::oracle::families::{
        complete, complete_bipartite, cycle, subdivide_every_edge, two_squares,
    };

    fn k4() -> Graph {
        complete(4)
    }

    fn k23() -> Graph {
        complete_bipartite(2, 3)
    }

    #[test]
    fn single_cycle_is_its_only_primitive_cycle() {
        for n in 3..8 {
            let cycles = enumerate_primitive_cycles(&cycle(n));
            assert_eq!(cycles.len(), 1);
            assert_eq!(cycles[0].len(), n);
        }
    }

    #[test]
    fn k4_has_four_triangles() {
        let cycles = enumerate_primitive_cycles(&k4());
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn k23_has_three_squares() {
        let cycles = enumerate_primitive_cycles(&k23());
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn frank_values() {
        assert_eq!(frank(&Graph::parse("a b\nb c\nc d").unwrap()), 0);
        assert_eq!(frank(&k4()), 4);
        assert_eq!(frank(&k23()), 3);
    }

    #[test]
    fn canonical_form_starts_at_minimum() {
        for c in enumerate_primitive_cycles(&k4()) {
            let min = *c.vertices.iter().min().unwrap();
            assert_eq!(c.vertices[0], min);
            assert!(c.vertices[1] < *c.vertices.last().unwrap());
        }
    }

    #[test]
    fn pcp_on_two_squares_sharing_an_edge() {
        assert!(pcp(&two_squares()).holds);
    }

    #[test]
    fn pcp_fails_on_k23() {
        let verdict = pcp(&k23());
        assert!(!verdict.holds);
        let (a, b) = verdict.violation.unwrap();
        assert_eq!(a.chain.intersection_size(&b.chain), 2);
    }

    #[test]
    fn pcp_vacuous_on_forest() {
        assert!(pcp(&Graph::parse("a b\nb c").unwrap()).holds);
    }

    #[test]
    fn k4_and_its_subdivisions_are_detected() {
        assert!(!k4_subdivision_free(&k4()));
        assert!(!k4_subdivision_free(&subdivide_every_edge(&k4())));
    }

    #[test]
    fn k23_is_k4_subdivision_free() {
        assert!(k4_subdivision_free(&k23()));
    }

    #[test]
    fn cycles_and_trees_are_k4_subdivision_free() {
        assert!(k4_subdivision_free(&cycle(6)));
        assert!(k4_subdivision_free(&Graph::parse("a b\nb c").unwrap()));
    }

    #[test]
    fn primitive_vectors_span_cycle_space_of_k4() {
        let g = k4();
        let vs: Vec<_> = enumerate_primitive_cycles(&g)
            .into_iter()
            .map(|c| c.chain)
            .collect();
        assert_eq!(gf2_rank(&vs), cycle_rank(&g));
    }
}
