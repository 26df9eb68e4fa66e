//! The special acyclic orientation: grow a nested sequence of subtrees
//! A1 c A2 c ... c Am from a maximal path by repeatedly attaching a
//! maximal path at the first vertex whose neighborhood escapes, relabel at
//! every stage, orient all edges from smaller to larger final label, and
//! read off one generator per non-tree edge. Each generator has the
//! non-tree variable alone on one side, so the q - n + 1 of them generate
//! the toric ideal.

use crate::binomial::Binomial;
use crate::graph::{Graph, GraphError};
use crate::toric_oriented::{
    cycle_binomial, is_acyclic, toric_generators_oriented, Acyclicity, OrientedCycleBinomial,
    OrientedGraph,
};
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientationError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("labeling is not a bijection onto the vertices")]
    BadLabeling,
    #[error("edge set is not a spanning tree of the component")]
    BadTree,
}

/// All vertices adjacent to at least one vertex of `s`; may intersect `s`.
pub fn neighbor_set(g: &Graph, s: &[usize]) -> Result<Vec<usize>, GraphError> {
    let mut out = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return Err(GraphError::UnknownVertex(v));
        }
        for &(w, _) in g.neighbors(v) {
            out[w] = true;
        }
    }
    Ok((0..g.n()).filter(|&v| out[v]).collect())
}

/// One stage of the construction.
#[derive(Debug, Clone, Serialize)]
pub struct Stage {
    /// Tree edges accumulated so far (edge indices).
    pub tree_edges: Vec<usize>,
    /// `labeling[i]` is the vertex labeled y_(i+1) at this stage.
    pub labeling: Vec<usize>,
    /// Largest u with N(y_1..y_u) inside the current tree's vertex set.
    pub closed_prefix: usize,
    /// The attachment vertex a_j = y_(i_j + 1); absent at the final stage.
    pub attach_at: Option<usize>,
    /// The attached maximal path L_j as [z_1, .., z_s = a_j]; absent at the
    /// final stage.
    pub attached_path: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreeSequence {
    pub stages: Vec<Stage>,
    /// Spanning tree of the component (edge indices).
    pub final_tree: Vec<usize>,
    /// `final_labeling[i]` is the vertex at position i of the total order.
    pub final_labeling: Vec<usize>,
}

/// Maximal path by greedy two-sided extension from the minimum vertex,
/// smaller-indexed neighbors first. Extending the back cannot unlock the
/// front, so one pass over each end suffices for maximality.
fn maximal_path_from(g: &Graph, start: usize, allowed: &[bool]) -> VecDeque<usize> {
    let mut path = VecDeque::from([start]);
    let mut used = vec![false; g.n()];
    used[start] = true;
    let next = |v: usize, used: &[bool]| -> Option<usize> {
        g.neighbors(v)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| allowed[w] && !used[w])
            .min()
    };
    while let Some(w) = next(*path.back().unwrap(), &used) {
        used[w] = true;
        path.push_back(w);
    }
    while let Some(w) = next(*path.front().unwrap(), &used) {
        used[w] = true;
        path.push_front(w);
    }
    path
}

/// Build the tree sequence of a connected graph.
pub fn build_tree_sequence(g: &Graph) -> Result<TreeSequence, OrientationError> {
    if !g.is_connected() {
        return Err(OrientationError::Disconnected);
    }
    build_tree_sequence_in(g, &vec![true; g.n()], 0)
}

/// As [`build_tree_sequence`] but restricted to the component of `start`
/// inside the `allowed` vertex mask. Labels and edges refer to `g`.
fn build_tree_sequence_in(
    g: &Graph,
    allowed: &[bool],
    start: usize,
) -> Result<TreeSequence, OrientationError> {
    let mut in_tree = vec![false; g.n()];
    let mut labeling: Vec<usize> = maximal_path_from(g, start, allowed).into();
    for &v in &labeling {
        in_tree[v] = true;
    }
    let mut tree_edges: Vec<usize> = labeling
        .windows(2)
        .map(|w| g.edge_index(w[0], w[1]).expect("path edge"))
        .collect();
    let mut stages: Vec<Stage> = Vec::new();
    let mut prev_closed = 0usize;
    loop {
        // largest prefix of the labeling whose neighborhoods stay inside
        let mut closed = 0;
        for (u, &y) in labeling.iter().enumerate() {
            if g.neighbors(y).iter().all(|&(w, _)| in_tree[w]) {
                closed = u + 1;
            } else {
                break;
            }
        }
        debug_assert!(
            stages.is_empty() || closed > prev_closed,
            "closed prefix must grow at every stage"
        );
        prev_closed = closed;
        if closed == labeling.len() {
            stages.push(Stage {
                tree_edges: tree_edges.clone(),
                labeling: labeling.clone(),
                closed_prefix: closed,
                attach_at: None,
                attached_path: None,
            });
            return Ok(TreeSequence {
                stages,
                final_tree: tree_edges,
                final_labeling: labeling,
            });
        }
        let attach = labeling[closed]; // a_j = y_(i_j + 1)
                                       // grow L_j away from a_j through vertices outside the tree, then
                                       // reverse so its final vertex is a_j
        let mut path = vec![attach];
        let mut used = vec![false; g.n()];
        used[attach] = true;
        loop {
            let cur = *path.last().unwrap();
            let Some(w) = g
                .neighbors(cur)
                .iter()
                .map(|&(x, _)| x)
                .filter(|&x| allowed[x] && !in_tree[x] && !used[x])
                .min()
            else {
                break;
            };
            used[w] = true;
            path.push(w);
        }
        debug_assert!(path.len() >= 2, "the attachment vertex has an escape");
        path.reverse();
        stages.push(Stage {
            tree_edges: tree_edges.clone(),
            labeling: labeling.clone(),
            closed_prefix: closed,
            attach_at: Some(attach),
            attached_path: Some(path.clone()),
        });
        // relabel: prefix up to i_j, then z_1..z_s (ending at a_j), then
        // the old labels after a_j
        tree_edges.extend(
            path.windows(2)
                .map(|w| g.edge_index(w[0], w[1]).expect("path edge")),
        );
        for &v in &path {
            in_tree[v] = true;
        }
        let mut relabeled = Vec::with_capacity(labeling.len() + path.len() - 1);
        relabeled.extend_from_slice(&labeling[..closed]);
        relabeled.extend_from_slice(&path);
        relabeled.extend_from_slice(&labeling[closed + 1..]);
        labeling = relabeled;
    }
}

/// Orient every edge from the smaller to the larger position in the given
/// total order. The result is acyclic by construction.
pub fn orient_by_labeling(
    g: &Graph,
    labeling: &[usize],
) -> Result<OrientedGraph, OrientationError> {
    let n = g.n();
    if labeling.len() != n {
        return Err(OrientationError::BadLabeling);
    }
    let mut pos = vec![usize::MAX; n];
    for (p, &v) in labeling.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(OrientationError::BadLabeling);
        }
        pos[v] = p;
    }
    let directions: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| if pos[u] < pos[v] { (u, v) } else { (v, u) })
        .collect();
    Ok(OrientedGraph::new(g.clone(), directions).expect("directions match edges"))
}

/// A generator read off one non-tree edge: the fundamental cycle's
/// binomial.
#[derive(Debug, Clone, Serialize)]
pub struct FundamentalBinomial {
    pub non_tree_edge: usize,
    /// The fundamental cycle c(tree, edge), canonical vertex order.
    pub cycle: Vec<usize>,
    pub binomial: Binomial,
}

impl FundamentalBinomial {
    /// True when one side is exactly the non-tree variable and the other
    /// side uses tree variables only.
    pub fn has_fundamental_shape(&self, tree_edges: &[usize]) -> bool {
        let singleton = |side: &[u32]| {
            side.iter().enumerate().all(|(i, &e)| {
                if i == self.non_tree_edge {
                    e == 1
                } else {
                    e == 0
                }
            })
        };
        let tree_only = |side: &[u32]| {
            side.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || tree_edges.contains(&i))
        };
        (singleton(&self.binomial.plus) && tree_only(&self.binomial.minus))
            || (singleton(&self.binomial.minus) && tree_only(&self.binomial.plus))
    }
}

/// Binomials of the fundamental cycles of a spanning forest inside an
/// oriented graph: one per non-tree edge.
pub fn fundamental_binomials(
    d: &OrientedGraph,
    tree_edges: &[usize],
) -> Result<Vec<FundamentalBinomial>, OrientationError> {
    let g = d.base();
    let mut in_tree = vec![false; g.q()];
    for &k in tree_edges {
        if k >= g.q() {
            return Err(OrientationError::BadTree);
        }
        in_tree[k] = true;
    }
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for k in 0..g.q() {
        if in_tree[k] {
            let (u, v) = g.edge(k);
            tree_adj[u].push(v);
            tree_adj[v].push(u);
        }
    }
    let mut out = Vec::new();
    for k in 0..g.q() {
        if in_tree[k] {
            continue;
        }
        let (u, v) = g.edge(k);
        let path = forest_path(&tree_adj, g.n(), u, v).ok_or(OrientationError::BadTree)?;
        let ocb = cycle_binomial(d, &path).expect("tree path plus closing edge is a cycle");
        out.push(FundamentalBinomial {
            non_tree_edge: k,
            cycle: ocb.cycle,
            binomial: ocb.binomial,
        });
    }
    Ok(out)
}

fn forest_path(tree_adj: &[Vec<usize>], n: usize, u: usize, v: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; n];
    prev[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &w in &tree_adj[x] {
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

/// Everything the construction produces: the acyclic orientation, the
/// spanning tree, the q - n + 1 fundamental generators (each of the shape
/// single-variable minus a tree monomial), and for comparison the
/// primitive-cycle generators of the same orientation.
#[derive(Debug, Clone, Serialize)]
pub struct OrientationCertificate {
    pub oriented: OrientedGraph,
    /// Global total order: `labeling[i]` is the vertex at position i.
    pub labeling: Vec<usize>,
    pub tree_edges: Vec<usize>,
    pub fundamental: Vec<FundamentalBinomial>,
    pub primitive_generators: Vec<OrientedCycleBinomial>,
    /// Per-component construction traces, in component order.
    pub tree_sequences: Vec<TreeSequence>,
    /// False when the input was disconnected and components were processed
    /// independently (their generator counts add).
    pub connected: bool,
}

/// Run the whole construction. Disconnected inputs are processed per
/// component and flagged.
pub fn ci_generators(g: &Graph) -> Result<OrientationCertificate, OrientationError> {
    let components = g.components();
    let mut labeling = Vec::with_capacity(g.n());
    let mut tree_edges = Vec::new();
    let mut tree_sequences = Vec::new();
    let mut allowed = vec![false; g.n()];
    for comp in &components {
        for &v in comp {
            allowed[v] = true;
        }
        let seq = build_tree_sequence_in(g, &allowed, comp[0])?;
        labeling.extend_from_slice(&seq.final_labeling);
        tree_edges.extend_from_slice(&seq.final_tree);
        tree_sequences.push(seq);
        for &v in comp {
            allowed[v] = false;
        }
    }
    let oriented = orient_by_labeling(g, &labeling)?;
    debug_assert!(matches!(is_acyclic(&oriented), Acyclicity::Acyclic(_)));
    let fundamental = fundamental_binomials(&oriented, &tree_edges)?;
    debug_assert!(fundamental
        .iter()
        .all(|f| f.has_fundamental_shape(&tree_edges)));
    let primitive_generators = toric_generators_oriented(&oriented);
    Ok(OrientationCertificate {
        oriented,
        labeling,
        tree_edges,
        fundamental,
        primitive_generators,
        tree_sequences,
        connected: components.len() <= 1,
    })
}
