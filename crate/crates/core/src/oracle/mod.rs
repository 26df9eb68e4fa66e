//! Brute-force reference implementations and exhaustive small-graph
//! generation. Everything here is deliberately naive: the sweeps compare
//! these against the production algorithms, so the two sides must not
//! share pruning logic.

pub mod families;
pub mod rng;

use crate::graph::Graph;
use rng::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("budget exceeded: {0}")]
    Budget(String),
}

/// Generation mode for [`GraphIterator`]. Exhaustive modes enumerate every
/// labeled graph exactly once; no isomorphism reduction is attempted.
#[derive(Debug, Clone)]
pub enum GenMode {
    /// All 2^C(n,2) labeled graphs on n vertices.
    All { n: usize },
    /// Labeled graphs on n vertices that are connected.
    Connected { n: usize },
    /// `count` seeded G(n, num/den) samples with n drawn from `2..=max_n`.
    Random {
        seed: u64,
        count: usize,
        max_n: usize,
        num: u32,
        den: u32,
    },
}

pub struct GraphIterator {
    mode: GenMode,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    mask_end: u64,
    rng: Rng,
    remaining: usize,
}

impl GraphIterator {
    pub fn new(mode: GenMode) -> Self {
        let (n, masks, remaining, seed) = match &mode {
            GenMode::All { n } | GenMode::Connected { n } => {
                let bits = n * (n.saturating_sub(1)) / 2;
                (*n, 1u64 << bits, 0, 0)
            }
            GenMode::Random { seed, count, .. } => (0, 0, *count, *seed),
        };
        GraphIterator {
            mode,
            pairs: vertex_pairs(n),
            next_mask: 0,
            mask_end: masks,
            rng: Rng::new(seed),
            remaining,
        }
    }
}

impl Iterator for GraphIterator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self.mode {
            GenMode::All { n } => {
                if self.next_mask == self.mask_end {
                    return None;
                }
                let g = graph_from_mask(n, &self.pairs, self.next_mask);
                self.next_mask += 1;
                Some(g)
            }
            GenMode::Connected { n } => {
                while self.next_mask < self.mask_end {
                    let mask = self.next_mask;
                    self.next_mask += 1;
                    if mask_is_connected(n, &self.pairs, mask) {
                        return Some(graph_from_mask(n, &self.pairs, mask));
                    }
                }
                None
            }
            GenMode::Random {
                max_n, num, den, ..
            } => {
                if self.remaining == 0 {
                    return None;
                }
                self.remaining -= 1;
                let n = 2 + self.rng.below(max_n - 1);
                Some(families::random_graph(&mut self.rng, n, num, den))
            }
        }
    }
}

/// Vertex pairs in the fixed enumeration order; bit i of a mask is pairs[i].
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are simple by construction")
}

/// Union-find connectivity straight on the bitmask, cheaper than building
/// the graph only to reject it.
pub fn mask_is_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let mut parent: [usize; 16] = std::array::from_fn(|i| i);
    fn find(parent: &mut [usize; 16], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parts = n;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                parts -= 1;
            }
        }
    }
    parts == 1
}

/// Every connected bipartite labeled graph on exactly `n` vertices, each
/// exactly once. Enumerates edge subsets of S x T over all bipartitions
/// with vertex 0 in S; connectedness makes the bipartition unique, so no
/// graph repeats.
pub fn connected_bipartite_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1 && n <= 16);
    let side_masks = 0..(1u32 << n.saturating_sub(1));
    side_masks.flat_map(move |side_bits| {
        // vertex 0 always on side S
        let mut s = vec![0usize];
        let mut t = Vec::new();
        for v in 1..n {
            if side_bits >> (v - 1) & 1 == 1 {
                s.push(v);
            } else {
                t.push(v);
            }
        }
        let pairs: Vec<(usize, usize)> = s
            .iter()
            .flat_map(|&u| t.iter().map(move |&v| (u.min(v), u.max(v))))
            .collect();
        let bits = pairs.len();
        (0..(1u64 << bits)).filter_map(move |mask| {
            if !mask_is_connected(n, &pairs, mask) {
                return None;
            }
            Some(graph_from_mask(n, &pairs, mask))
        })
    })
}

/// All simple cycles as canonical vertex sequences: minimum vertex first,
/// second vertex smaller than the last. Plain DFS over simple paths.
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    all_cycles_capped(g, usize::MAX).expect("uncapped")
}

/// As [`all_cycles`] but aborts once more than `max_cycles` are found.
pub fn all_cycles_capped(g: &Graph, max_cycles: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = g.n();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for u0 in 0..n {
        path.clear();
        path.push(u0);
        on_path[u0] = true;
        extend_any(g, &mut path, &mut on_path, &mut out, max_cycles)?;
        on_path[u0] = false;
    }
    Ok(out)
}

fn extend_any(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    max_cycles: usize,
) -> Result<(), OracleError> {
    let u0 = path[0];
    let uk = *path.last().unwrap();
    let mut nbrs: Vec<usize> = g.neighbors(uk).iter().map(|&(w, _)| w).collect();
    nbrs.sort_unstable();
    for w in nbrs {
        if w == u0 && path.len() >= 3 && path[1] < uk {
            if out.len() >= max_cycles {
                return Err(OracleError::Budget(format!(
                    "cycle enumeration exceeded {max_cycles}"
                )));
            }
            out.push(path.clone());
        } else if w > u0 && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            extend_any(g, path, on_path, out, max_cycles)?;
            on_path[w] = false;
            path.pop();
        }
    }
    Ok(())
}

/// Chordlessness by direct inspection of a vertex sequence.
pub fn cycle_is_chordless(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue; // closing edge
            }
            if g.adjacent(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

/// Free rank the slow way: enumerate all cycles, filter chordless.
pub fn oracle_frank(g: &Graph) -> usize {
    all_cycles(g)
        .iter()
        .filter(|c| cycle_is_chordless(g, c))
        .count()
}

/// Exhaustive K4-subdivision search: four branch vertices of degree >= 3
/// joined by six internally disjoint paths.
pub fn oracle_k4_subdivision(g: &Graph) -> Result<bool, OracleError> {
    if g.n() > 9 {
        return Err(OracleError::Budget(format!(
            "k4 subdivision oracle limited to 9 vertices, got {}",
            g.n()
        )));
    }
    let n = g.n();
    let branch_candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let m = branch_candidates.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let branch = [
                        branch_candidates[a],
                        branch_candidates[b],
                        branch_candidates[c],
                        branch_candidates[d],
                    ];
                    let pairs = [
                        (branch[0], branch[1]),
                        (branch[0], branch[2]),
                        (branch[0], branch[3]),
                        (branch[1], branch[2]),
                        (branch[1], branch[3]),
                        (branch[2], branch[3]),
                    ];
                    let mut blocked = vec![false; n];
                    for &v in &branch {
                        blocked[v] = true;
                    }
                    if place_paths(g, &pairs, 0, &mut blocked) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Assign internally disjoint paths to the remaining pairs, backtracking.
fn place_paths(g: &Graph, pairs: &[(usize, usize)], idx: usize, blocked: &mut [bool]) -> bool {
    if idx == pairs.len() {
        return true;
    }
    let (x, y) = pairs[idx];
    path_dfs(g, x, y, pairs, idx, blocked)
}

fn path_dfs(
    g: &Graph,
    cur: usize,
    target: usize,
    pairs: &[(usize, usize)],
    idx: usize,
    blocked: &mut [bool],
) -> bool {
    for &(w, _) in g.neighbors(cur) {
        if w == target {
            if place_paths(g, pairs, idx + 1, blocked) {
                return true;
            }
        } else if !blocked[w] {
            blocked[w] = true;
            if path_dfs(g, w, target, pairs, idx, blocked) {
                return true;
            }
            blocked[w] = false;
        }
    }
    false
}

/// Outcome of a sweep over a graph stream: total graphs visited and the
/// first few failure descriptions.
#[derive(Debug, Default)]
pub struct SweepReport {
    pub graphs: u64,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(&mut self, other: SweepReport) {
        self.graphs += other.graphs;
        self.failures.extend(other.failures);
        self.failures.truncate(MAX_FAILURES);
    }
}

const MAX_FAILURES: usize = 16;

/// Run `check` over every labeled graph on exactly `n` vertices, sharded
/// across worker threads by striding the edge masks. Each worker owns its
/// graphs; reports merge at the end.
pub fn sweep_labeled_graphs<F>(n: usize, connected_only: bool, check: F) -> SweepReport
where
    F: Fn(&Graph) -> Result<(), String> + Sync,
{
    let pairs = vertex_pairs(n);
    let total: u64 = 1 << pairs.len();
    let workers = worker_count(total);
    let check = &check;
    let pairs = &pairs;
    let mut report = SweepReport::default();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|tid| {
                scope.spawn(move || {
                    let mut local = SweepReport::default();
                    let mut mask = tid;
                    while mask < total {
                        if !connected_only || mask_is_connected(n, pairs, mask) {
                            let g = graph_from_mask(n, pairs, mask);
                            local.graphs += 1;
                            if let Err(msg) = check(&g) {
                                if local.failures.len() < MAX_FAILURES {
                                    local.failures.push(format!("n={n} mask={mask}: {msg}"));
                                }
                            }
                        }
                        mask += workers as u64;
                    }
                    local
                })
            })
            .collect();
        for h in handles {
            report.merge(h.join().expect("sweep worker panicked"));
        }
    });
    report
}

/// Sharded sweep over every connected bipartite labeled graph on `n`
/// vertices (see [`connected_bipartite_graphs`] for the enumeration).
pub fn sweep_connected_bipartite<F>(n: usize, check: F) -> SweepReport
where
    F: Fn(&Graph) -> Result<(), String> + Sync,
{
    let side_count: u32 = 1 << n.saturating_sub(1);
    let workers = worker_count(side_count as u64).min(side_count as usize);
    let check = &check;
    let mut report = SweepReport::default();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u32)
            .map(|tid| {
                scope.spawn(move || {
                    let mut local = SweepReport::default();
                    let mut side_bits = tid;
                    while side_bits < side_count {
                        let mut s = vec![0usize];
                        let mut t = Vec::new();
                        for v in 1..n {
                            if side_bits >> (v - 1) & 1 == 1 {
                                s.push(v);
                            } else {
                                t.push(v);
                            }
                        }
                        let pairs: Vec<(usize, usize)> = s
                            .iter()
                            .flat_map(|&u| t.iter().map(move |&v| (u.min(v), u.max(v))))
                            .collect();
                        for mask in 0..(1u64 << pairs.len()) {
                            if !mask_is_connected(n, &pairs, mask) {
                                continue;
                            }
                            let g = graph_from_mask(n, &pairs, mask);
                            local.graphs += 1;
                            if let Err(msg) = check(&g) {
                                if local.failures.len() < MAX_FAILURES {
                                    local.failures.push(format!(
                                        "n={n} sides={side_bits} mask={mask}: {msg}"
                                    ));
                                }
                            }
                        }
                        side_bits += workers as u32;
                    }
                    local
                })
            })
            .collect();
        for h in handles {
            report.merge(h.join().expect("sweep worker panicked"));
        }
    });
    report
}

fn worker_count(total_work: u64) -> usize {
    let hw = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1);
    hw.min(total_work.max(1) as usize)
}
