//! Undirected simple graphs with a stable edge indexing.
//!
//! Vertices are dense indices `0..n`; string labels survive only for I/O.
//! The edge list order is part of the contract: edge `k` is the variable
//! `t_{k+1}` in every toric module, so two runs over the same input file
//! always name generators identically.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex `{label}` (line {line})")]
    Loop { label: String, line: usize },
    #[error("multi-edge `{a}`-`{b}` (line {line})")]
    MultiEdge { a: String, b: String, line: usize },
    #[error("parse error at line {line}: expected `u v`, got `{content}`")]
    Parse { line: usize, content: String },
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
}

/// Undirected simple graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge index)
    adj_matrix: Vec<bool>,         // n*n, symmetric
}

impl Graph {
    /// Graph on `n` isolated vertices labeled by their index.
    pub fn empty(n: usize) -> Self {
        let labels = (0..n).map(|v| v.to_string()).collect();
        Graph {
            labels,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            adj_matrix: vec![false; n * n],
        }
    }

    /// Build from an explicit edge list over vertices `0..n`.
    /// Edge order is preserved and defines the t-variable indexing.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.push_edge(u, v, 0)?;
        }
        Ok(g)
    }

    /// Parse edge-list text: one `u v` pair per line, `#` comments and blank
    /// lines ignored. Vertices are indexed in first-appearance order.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut it = content.split_whitespace();
            let (a, b) = match (it.next(), it.next()) {
                (None, _) => continue,
                (Some(a), Some(b)) => (a, b),
                (Some(_), None) => {
                    return Err(GraphError::Parse {
                        line,
                        content: content.trim().to_string(),
                    })
                }
            };
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line,
                    content: content.trim().to_string(),
                });
            }
            let mut intern = |name: &str| -> usize {
                *index.entry(name.to_string()).or_insert_with(|| {
                    labels.push(name.to_string());
                    labels.len() - 1
                })
            };
            let u = intern(a);
            let v = intern(b);
            pairs.push((u, v, line));
        }
        let mut g = Graph {
            adj: vec![Vec::new(); labels.len()],
            adj_matrix: vec![false; labels.len() * labels.len()],
            labels,
            edges: Vec::new(),
        };
        for (u, v, line) in pairs {
            g.push_edge(u, v, line)?;
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: usize, v: usize, line: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::UnknownVertex(u));
        }
        if v >= n {
            return Err(GraphError::UnknownVertex(v));
        }
        if u == v {
            return Err(GraphError::Loop {
                label: self.labels[u].clone(),
                line,
            });
        }
        if self.adj_matrix[u * n + v] {
            return Err(GraphError::MultiEdge {
                a: self.labels[u].clone(),
                b: self.labels[v].clone(),
                line,
            });
        }
        let k = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push((v, k));
        self.adj[v].push((u, k));
        self.adj_matrix[u * n + v] = true;
        self.adj_matrix[v * n + u] = true;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Endpoints of edge `k` as `(min, max)`.
    pub fn edge(&self, k: usize) -> (usize, usize) {
        self.edges[k]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj_matrix[u * self.n() + v]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, k)| k)
    }

    /// Neighbors of `u` as `(vertex, edge index)`, in insertion order.
    pub fn neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Connected components as sorted vertex sets, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_count() == 1
    }

    /// A spanning forest as a set of edge indices; one tree per component,
    /// `n - r` edges in total. BFS from the minimum vertex of each component.
    pub fn spanning_forest(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut tree = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, k) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        tree.push(k);
                        queue.push_back(w);
                    }
                }
            }
        }
        tree
    }

    /// Two-coloring `(V1, V2)` if the graph is bipartite, `None` otherwise.
    /// The minimum vertex of each component goes to `V1`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let side1 = (0..n).filter(|&v| color[v] == 0).collect();
        let side2 = (0..n).filter(|&v| color[v] == 1).collect();
        Some((side1, side2))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced on `s`, with vertices re-indexed in the sorted order
    /// of `s` and edges re-indexed in original edge order.
    pub fn induced(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut keep = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let n = self.n();
        let mut map = vec![usize::MAX; n];
        for (new, &old) in keep.iter().enumerate() {
            if old >= n {
                return Err(GraphError::UnknownVertex(old));
            }
            map[old] = new;
        }
        let mut g = Graph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            edges: Vec::new(),
            adj: vec![Vec::new(); keep.len()],
            adj_matrix: vec![false; keep.len() * keep.len()],
        };
        for &(u, v) in &self.edges {
            if map[u] != usize::MAX && map[v] != usize::MAX {
                g.push_edge(map[u], map[v], 0)?;
            }
        }
        Ok(g)
    }

    pub fn blocks(&self) -> BlockDecomposition {
        block_decomposition(self)
    }
}

/// One block of a graph: a maximal 2-connected subgraph, a bridge, or an
/// isolated vertex (in which case `edges` is empty).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Edge indices of the block, in increasing order.
    pub edges: Vec<usize>,
    /// Vertices spanned by the block (the vertex itself for isolated ones).
    pub vertices: Vec<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    pub fn is_isolated_vertex(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cutvertices: Vec<usize>,
    /// Edge indices that are bridges.
    pub bridges: Vec<usize>,
}

/// Hopcroft–Tarjan biconnected components via an explicit DFS stack.
fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();

    // (vertex, parent edge index or MAX, next adjacency offset)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            blocks.push(Block {
                edges: Vec::new(),
                vertices: vec![root],
            });
            disc[root] = timer;
            timer += 1;
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, parent_edge, ref mut off)) = stack.last_mut() {
            if *off < g.adj[u].len() {
                let (w, k) = g.adj[u][*off];
                *off += 1;
                if k == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(k);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, k, 0));
                } else if disc[w] < disc[u] {
                    // back edge
                    edge_stack.push(k);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // p separates the subtree at u: pop one block
                        let k_parent = g.edge_index(p, u).expect("tree edge");
                        let mut es = Vec::new();
                        while let Some(k) = edge_stack.pop() {
                            es.push(k);
                            if k == k_parent {
                                break;
                            }
                        }
                        es.sort_unstable();
                        let mut vs: Vec<usize> = es
                            .iter()
                            .flat_map(|&k| {
                                let (a, b) = g.edge(k);
                                [a, b]
                            })
                            .collect();
                        vs.sort_unstable();
                        vs.dedup();
                        blocks.push(Block {
                            edges: es,
                            vertices: vs,
                        });
                    }
                }
            }
        }
    }

    // A vertex lying in two or more blocks is a cutvertex.
    let mut in_blocks = vec![0usize; n];
    for b in &blocks {
        for &v in &b.vertices {
            in_blocks[v] += 1;
        }
    }
    let cutvertices: Vec<usize> = (0..n).filter(|&v| in_blocks[v] >= 2).collect();
    let mut bridges: Vec<usize> = blocks
        .iter()
        .filter(|b| b.is_bridge())
        .map(|b| b.edges[0])
        .collect();
    bridges.sort_unstable();
    blocks.sort_by_key(|b| {
        (
            b.vertices[0],
            b.edges.first().copied().unwrap_or(usize::MAX),
        )
    });
    BlockDecomposition {
        blocks,
        cutvertices,
        bridges,
    }
}

// JSON shape: {"vertices": ["a", ...], "edges": [[0,1], ...]}.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("vertices", &self.labels)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<String>,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut g = Graph {
            adj: vec![Vec::new(); raw.vertices.len()],
            adj_matrix: vec![false; raw.vertices.len() * raw.vertices.len()],
            labels: raw.vertices,
            edges: Vec::new(),
        };
        for (u, v) in raw.edges {
            g.push_edge(u, v, 0).map_err(D::Error::custom)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::families::{complete, cycle};

    fn k4() -> Graph {
        complete(4)
    }

    #[test]
    fn parse_path() {
        let g = Graph::parse("a b\nb c").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.q(), 2);
        assert_eq!(g.label(0), "a");
        assert_eq!(g.edge(0), (0, 1));
    }

    #[test]
    fn parse_rejects_loop() {
        assert!(matches!(
            Graph::parse("a a"),
            Err(GraphError::Loop { line: 1, .. })
        ));
    }

    #[test]
    fn parse_rejects_multi_edge() {
        assert!(matches!(
            Graph::parse("a b\nb a"),
            Err(GraphError::MultiEdge { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("a b\na b"),
            Err(GraphError::MultiEdge { line: 2, .. })
        ));
    }

    #[test]
    fn parse_reports_malformed_line() {
        let err = Graph::parse("a b\nc").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 2,
                content: "c".into()
            }
        );
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = Graph::parse("# triangle\na b\n\nb c # chord side\nc a").unwrap();
        assert_eq!((g.n(), g.q()), (3, 3));
    }

    #[test]
    fn components_counts() {
        let path = Graph::parse("a b\nb c").unwrap();
        assert_eq!(path.components().len(), 1);
        let two = Graph::parse("a b\nc d").unwrap();
        assert_eq!(two.components().len(), 2);
        let empty = Graph::empty(0);
        assert!(empty.components().is_empty());
    }

    #[test]
    fn blocks_triangle_with_pendant() {
        let g = Graph::parse("a b\nb c\nc a\nc d").unwrap();
        let d = g.blocks();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cutvertices, vec![2]);
        assert_eq!(d.bridges, vec![3]);
        let sizes: Vec<usize> = d.blocks.iter().map(|b| b.edges.len()).collect();
        assert!(sizes.contains(&3) && sizes.contains(&1));
    }

    #[test]
    fn blocks_two_triangles_sharing_vertex() {
        let g = Graph::parse("a b\nb c\nc a\nc d\nd e\ne c").unwrap();
        let d = g.blocks();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cutvertices, vec![2]);
        assert!(d.bridges.is_empty());
    }

    #[test]
    fn blocks_k4_single() {
        let g = k4();
        let d = g.blocks();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cutvertices.is_empty());
        assert_eq!(d.blocks[0].edges.len(), 6);
    }

    #[test]
    fn blocks_isolated_vertex() {
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let d = g.blocks();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().any(|b| b.is_isolated_vertex()));
    }

    #[test]
    fn spanning_forest_sizes() {
        let c4 = cycle(4);
        assert_eq!(c4.spanning_forest().len(), 3);
        let tree = Graph::parse("a b\nb c\nb d").unwrap();
        assert_eq!(tree.spanning_forest().len(), 3);
        assert_eq!(k4().spanning_forest().len(), 3);
    }

    #[test]
    fn bipartition_cases() {
        let c6 = cycle(6);
        let (a, b) = c6.bipartition().unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(b.len(), 3);
        assert!(cycle(5).bipartition().is_none());
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let (a, b) = k23.bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (2, 3));
    }

    #[test]
    fn induced_subgraphs() {
        let g = k4();
        let t = g.induced(&[0, 1, 2]).unwrap();
        assert_eq!((t.n(), t.q()), (3, 3));
        let whole = g.induced(&[0, 1, 2, 3]).unwrap();
        assert_eq!(whole.edges(), g.edges());
        let c5 = cycle(5);
        let p = c5.induced(&[0, 1, 2]).unwrap();
        assert_eq!((p.n(), p.q()), (3, 2));
        assert!(g.induced(&[7]).is_err());
    }
}
