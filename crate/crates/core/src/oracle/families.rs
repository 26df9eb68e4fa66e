//! Named graph families used across the test suites: complete graphs,
//! cycles, fans, triangulated polygons, and random instances.

use super::rng::Rng;
use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete bipartite graph with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..s {
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::from_edges(s + t, &edges).unwrap()
}

/// Two 4-cycles glued along one edge: the smallest ring graph with an
/// attachment step.
pub fn two_squares() -> Graph {
    Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap()
}

/// Fan: a path `1..n-1` plus an apex 0 adjacent to every path vertex.
/// Outerplanar for every n.
pub fn fan(n: usize) -> Graph {
    assert!(n >= 2);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    edges.extend((2..n).map(|v| (v - 1, v)));
    Graph::from_edges(n, &edges).unwrap()
}

/// Wheel: a cycle on `n` rim vertices plus a hub adjacent to all of them.
pub fn wheel(rim: usize) -> Graph {
    assert!(rim >= 3);
    let mut edges: Vec<(usize, usize)> = (1..=rim).map(|v| (0, v)).collect();
    edges.extend((1..=rim).map(|v| (v, v % rim + 1)));
    Graph::from_edges(rim + 1, &edges).unwrap()
}

/// Subdivide every edge once (one new vertex per edge).
pub fn subdivide_every_edge(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        let mid = n + k;
        edges.push((u, mid));
        edges.push((mid, v));
    }
    Graph::from_edges(n + g.q(), &edges).unwrap()
}

/// Maximal outerplanar graph: a convex polygon with a random full
/// triangulation. Boundary edges first, then diagonals.
pub fn triangulated_polygon(rng: &mut Rng, n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    triangulate(rng, 0, n - 1, &mut edges);
    Graph::from_edges(n, &edges).unwrap()
}

fn triangulate(rng: &mut Rng, lo: usize, hi: usize, edges: &mut Vec<(usize, usize)>) {
    if hi - lo < 2 {
        return;
    }
    let k = lo + 1 + rng.below(hi - lo - 1);
    if k > lo + 1 {
        edges.push((lo, k));
    }
    if hi > k + 1 {
        edges.push((k, hi));
    }
    triangulate(rng, lo, k, edges);
    triangulate(rng, k, hi, edges);
}

/// Polygon with a random subset of non-crossing chords: triangulate, then
/// keep each diagonal with probability 1/2. Outerplanar.
pub fn polygon_with_chords(rng: &mut Rng, n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut diagonals = Vec::new();
    triangulate(rng, 0, n - 1, &mut diagonals);
    edges.extend(diagonals.into_iter().filter(|_| rng.chance(1, 2)));
    Graph::from_edges(n, &edges).unwrap()
}

/// G(n, p) with p = num/den over labeled vertices.
pub fn random_graph(rng: &mut Rng, n: usize, num: u32, den: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(num, den) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Connected G(n, p): rejection-sample, then fall back to adding a random
/// spanning-tree skeleton if sparse draws keep failing.
pub fn random_connected_graph(rng: &mut Rng, n: usize, num: u32, den: u32) -> Graph {
    for _ in 0..64 {
        let g = random_graph(rng, n, num, den);
        if g.is_connected() {
            return g;
        }
    }
    // skeleton: attach each vertex to a random earlier one
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.below(v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(num, den) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        assert_eq!(complete(4).q(), 6);
        assert_eq!(complete_bipartite(2, 3).q(), 6);
        assert_eq!(fan(5).q(), 7);
        assert_eq!(wheel(4).q(), 8);
        assert_eq!(two_squares().q(), 7);
        assert_eq!(subdivide_every_edge(&complete(4)).n(), 10);
    }

    #[test]
    fn triangulated_polygon_has_maximal_edge_count() {
        let mut rng = Rng::new(5);
        for n in 3..12 {
            let g = triangulated_polygon(&mut rng, n);
            assert_eq!(g.q(), 2 * n - 3); // n boundary + n-3 diagonals
        }
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = Rng::new(11);
        for _ in 0..50 {
            let n = 2 + rng.below(8);
            assert!(random_connected_graph(&mut rng, n, 1, 4).is_connected());
        }
    }
}
