//! Toric ideals of oriented graphs: integer incidence matrices, cycle
//! binomials with orientation signs, the universal Groebner basis given by
//! all cycles, chord splitting, acyclicity, and the induced grading.

use crate::binomial::Binomial;
use crate::graph::Graph;
use crate::matrix;
use crate::oracle::{self, OracleError};
use crate::primitive::{canonical_cycle_order, enumerate_primitive_cycles};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientError {
    #[error("expected one direction per edge: got {got}, graph has {expected}")]
    DirectionCount { got: usize, expected: usize },
    #[error("direction ({tail}, {head}) does not orient edge {edge}")]
    BadDirection {
        edge: usize,
        tail: usize,
        head: usize,
    },
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("edge {0} is not a chord of the cycle")]
    NotAChord(usize),
    #[error("ordering is not a permutation of the vertices")]
    BadOrdering,
    #[error("ordering is not topological: edge {edge} runs backward")]
    NotTopological { edge: usize },
    #[error("orientation parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown vertex `{0}` in orientation file")]
    UnknownLabel(String),
    #[error("`{a} {b}` is not an edge of the graph")]
    NotAnEdge { a: String, b: String },
    #[error("edge {0} directed twice in orientation file")]
    DuplicateDirection(usize),
    #[error("edge {0} has no direction in orientation file")]
    MissingDirection(usize),
}

/// A graph plus one direction per edge. `direction(k)` is the oriented
/// pair `(tail, head)` of base edge `k`.
#[derive(Debug, Clone, Serialize)]
pub struct OrientedGraph {
    base: Graph,
    directions: Vec<(usize, usize)>,
}

impl OrientedGraph {
    pub fn new(base: Graph, directions: Vec<(usize, usize)>) -> Result<Self, OrientError> {
        if directions.len() != base.q() {
            return Err(OrientError::DirectionCount {
                got: directions.len(),
                expected: base.q(),
            });
        }
        for (k, &(t, h)) in directions.iter().enumerate() {
            if base.edge(k) != (t.min(h), t.max(h)) {
                return Err(OrientError::BadDirection {
                    edge: k,
                    tail: t,
                    head: h,
                });
            }
        }
        Ok(OrientedGraph { base, directions })
    }

    /// Default orientation: every edge from its smaller to its larger
    /// vertex index.
    pub fn ascending(base: Graph) -> Self {
        let directions = base.edges().to_vec();
        OrientedGraph { base, directions }
    }

    /// Parse an orientation file over the same vertex universe as the
    /// graph: lines `u v` meaning the directed edge u -> v. Every edge of
    /// the base graph must be directed exactly once.
    pub fn parse_orientation(base: Graph, text: &str) -> Result<Self, OrientError> {
        let index: HashMap<&str, usize> = base
            .labels()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut directions: Vec<Option<(usize, usize)>> = vec![None; base.q()];
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
                _ => {
                    return Err(OrientError::Parse {
                        line,
                        message: format!("expected `u v`, got `{}`", content.trim()),
                    })
                }
            };
            if it.next().is_some() {
                return Err(OrientError::Parse {
                    line,
                    message: format!("expected `u v`, got `{}`", content.trim()),
                });
            }
            let u = *index
                .get(a)
                .ok_or_else(|| OrientError::UnknownLabel(a.to_string()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| OrientError::UnknownLabel(b.to_string()))?;
            let k = base.edge_index(u, v).ok_or(OrientError::NotAnEdge {
                a: a.to_string(),
                b: b.to_string(),
            })?;
            if directions[k].is_some() {
                return Err(OrientError::DuplicateDirection(k));
            }
            directions[k] = Some((u, v));
        }
        let directions = directions
            .into_iter()
            .enumerate()
            .map(|(k, d)| d.ok_or(OrientError::MissingDirection(k)))
            .collect::<Result<Vec<_>, _>>()?;
        OrientedGraph::new(base, directions)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn direction(&self, k: usize) -> (usize, usize) {
        self.directions[k]
    }

    pub fn directions(&self) -> &[(usize, usize)] {
        &self.directions
    }
}

/// n x q integer matrix: column e has -1 at the tail and +1 at the head.
#[derive(Debug, Clone, Serialize)]
pub struct IncidenceMatrix {
    rows: Vec<Vec<i64>>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, v: usize, e: usize) -> i64 {
        self.rows[v][e]
    }

    pub fn rank(&self) -> usize {
        matrix::rank(&self.rows)
    }

    pub fn kernel_member(&self, b: &Binomial) -> bool {
        crate::binomial::kernel_member(&self.rows, b).expect("length checked by construction")
    }
}

/// The incidence matrix of an oriented graph; its rank is n - r, asserted
/// by exact elimination in debug builds.
pub fn incidence(d: &OrientedGraph) -> IncidenceMatrix {
    let g = d.base();
    let mut rows = vec![vec![0i64; g.q()]; g.n()];
    for k in 0..g.q() {
        let (tail, head) = d.direction(k);
        rows[tail][k] = -1;
        rows[head][k] = 1;
    }
    let m = IncidenceMatrix { rows };
    debug_assert_eq!(m.rank(), g.n() - g.component_count());
    m
}

/// A cycle of the base graph split by a fixed traversal: edges agreeing
/// with the traversal direction form `plus_edges` (c+), the rest `minus_edges`
/// (c-). An empty side encodes the monomial 1.
#[derive(Debug, Clone, Serialize)]
pub struct OrientedCycleBinomial {
    /// Canonical vertex sequence (minimum vertex first, toward its smaller
    /// neighbor).
    pub cycle: Vec<usize>,
    pub plus_edges: Vec<usize>,
    pub minus_edges: Vec<usize>,
    pub binomial: Binomial,
}

impl OrientedCycleBinomial {
    /// A consistently oriented cycle yields `1 - t^a` (or `t^a - 1`).
    pub fn is_oriented_cycle(&self) -> bool {
        self.plus_edges.is_empty() || self.minus_edges.is_empty()
    }
}

/// Binomial of a cycle given as a vertex sequence. The sequence is
/// canonicalized first, so the output does not depend on the rotation or
/// direction of the input.
pub fn cycle_binomial(
    d: &OrientedGraph,
    cycle_vertices: &[usize],
) -> Result<OrientedCycleBinomial, OrientError> {
    let g = d.base();
    let m = cycle_vertices.len();
    if m < 3 {
        return Err(OrientError::NotACycle(format!("length {m} is below 3")));
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle_vertices {
        if v >= g.n() || seen[v] {
            return Err(OrientError::NotACycle(format!(
                "vertex {v} repeats or is out of range"
            )));
        }
        seen[v] = true;
    }
    let cycle = canonical_cycle_order(cycle_vertices);
    let mut plus_edges = Vec::new();
    let mut minus_edges = Vec::new();
    for i in 0..m {
        let (a, b) = (cycle[i], cycle[(i + 1) % m]);
        let Some(k) = g.edge_index(a, b) else {
            return Err(OrientError::NotACycle(format!(
                "vertices {a} and {b} are not adjacent"
            )));
        };
        if d.direction(k) == (a, b) {
            plus_edges.push(k);
        } else {
            minus_edges.push(k);
        }
    }
    let binomial = Binomial::from_supports(g.q(), &plus_edges, &minus_edges);
    debug_assert!(incidence(d).kernel_member(&binomial));
    Ok(OrientedCycleBinomial {
        cycle,
        plus_edges,
        minus_edges,
        binomial,
    })
}

/// One binomial per cycle of the base graph: a universal Groebner basis of
/// the toric ideal. Exponential in general; `max_cycles` keeps runaway
/// inputs cancellable.
pub fn universal_groebner_basis(
    d: &OrientedGraph,
    max_cycles: usize,
) -> Result<Vec<OrientedCycleBinomial>, OracleError> {
    let cycles = oracle::all_cycles_capped(d.base(), max_cycles)?;
    Ok(cycles
        .iter()
        .map(|c| cycle_binomial(d, c).expect("enumerated cycles are cycles"))
        .collect())
}

/// Binomials of the primitive cycles only; these already generate the
/// toric ideal.
pub fn toric_generators_oriented(d: &OrientedGraph) -> Vec<OrientedCycleBinomial> {
    enumerate_primitive_cycles(d.base())
        .iter()
        .map(|c| cycle_binomial(d, &c.vertices).expect("primitive cycles are cycles"))
        .collect()
}

/// Outcome of splitting a cycle along a chord: the two sub-cycles and the
/// monomial cofactors of the identity
/// `t_c = cofactor1 * t_c1 - cofactor2 * t_c2` (up to global sign).
#[derive(Debug, Clone)]
pub struct ChordSplit {
    pub c1: OrientedCycleBinomial,
    pub c2: OrientedCycleBinomial,
    /// `t^(beta+) / t_k` where beta+ is the chord-positive side of c2.
    pub cofactor1: Vec<u32>,
    /// `t^(alpha+) / t_k` where alpha+ is the chord-positive side of c1.
    pub cofactor2: Vec<u32>,
}

/// Split a cycle along a chord and verify by exponent arithmetic that the
/// cycle's binomial is the stated combination of the two sub-cycles'.
pub fn split_on_chord(
    d: &OrientedGraph,
    cycle_vertices: &[usize],
    chord: usize,
) -> Result<ChordSplit, OrientError> {
    let g = d.base();
    let whole = cycle_binomial(d, cycle_vertices)?;
    let cycle = &whole.cycle;
    let m = cycle.len();
    let (u, v) = g.edge(chord);
    let pos = |x: usize| cycle.iter().position(|&y| y == x);
    let (Some(pi), Some(pj)) = (pos(u), pos(v)) else {
        return Err(OrientError::NotAChord(chord));
    };
    let (i, j) = (pi.min(pj), pi.max(pj));
    let consecutive = j - i == 1 || (i == 0 && j == m - 1);
    if consecutive {
        return Err(OrientError::NotAChord(chord));
    }
    let c1_vertices: Vec<usize> = cycle[..=i].iter().chain(&cycle[j..]).copied().collect();
    let c2_vertices: Vec<usize> = cycle[i..=j].to_vec();
    let c1 = cycle_binomial(d, &c1_vertices)?;
    let c2 = cycle_binomial(d, &c2_vertices)?;

    // Arrange both sub-binomials with the chord on the positive side.
    let chord_positive = |b: &OrientedCycleBinomial| -> (Vec<u32>, Vec<u32>) {
        if b.plus_edges.contains(&chord) {
            (b.binomial.plus.clone(), b.binomial.minus.clone())
        } else {
            (b.binomial.minus.clone(), b.binomial.plus.clone())
        }
    };
    let (alpha_plus, alpha_minus) = chord_positive(&c1);
    let (beta_plus, beta_minus) = chord_positive(&c2);
    let drop_chord = |mono: &[u32]| -> Vec<u32> {
        let mut out = mono.to_vec();
        debug_assert!(out[chord] > 0);
        out[chord] -= 1;
        out
    };
    let cofactor1 = drop_chord(&beta_plus);
    let cofactor2 = drop_chord(&alpha_plus);
    // gamma1 = (alpha+ - e_k) + beta-, gamma2 = (beta+ - e_k) + alpha-:
    // these must be the two sides of t_c.
    let add =
        |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().zip(b).map(|(&x, &y)| x + y).collect() };
    let gamma1 = add(&drop_chord(&alpha_plus), &beta_minus);
    let gamma2 = add(&drop_chord(&beta_plus), &alpha_minus);
    let t_c = &whole.binomial;
    let holds =
        (gamma1 == t_c.plus && gamma2 == t_c.minus) || (gamma1 == t_c.minus && gamma2 == t_c.plus);
    assert!(holds, "chord split identity must hold for a genuine chord");
    Ok(ChordSplit {
        c1,
        c2,
        cofactor1,
        cofactor2,
    })
}

/// Outcome of [`survey_orientations_ci`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationSurvey {
    pub orientations: u64,
    /// Orientations for which some q - n + r cycle binomials were
    /// certified to generate the toric ideal.
    pub certified: u64,
}

impl OrientationSurvey {
    pub fn all_certified(&self) -> bool {
        self.certified == self.orientations
    }
}

/// Experiment hook for the open question of which graphs are binomial
/// complete intersections under every orientation: enumerate all 2^q
/// orientations of a tiny graph and, for each, search for q - n + r cycle
/// binomials whose completed basis reduces every cycle binomial to zero.
/// Success certifies generation; failure to find such a subset proves
/// nothing, so no completeness is claimed.
pub fn survey_orientations_ci(
    g: &Graph,
    limits: &crate::binomial::EngineLimits,
) -> Result<OrientationSurvey, OracleError> {
    use crate::binomial::buchberger;
    if g.q() > 14 {
        return Err(OracleError::Budget(format!(
            "orientation survey limited to 14 edges, got {}",
            g.q()
        )));
    }
    let cycles = oracle::all_cycles(g);
    let target = g.q() + g.component_count() - g.n();
    let order = crate::binomial::MonomialOrder::default_lex(g.q());
    let mut survey = OrientationSurvey {
        orientations: 0,
        certified: 0,
    };
    let algebra = |e: crate::binomial::AlgebraError| OracleError::Budget(e.to_string());
    for mask in 0u64..(1 << g.q()) {
        survey.orientations += 1;
        let directions: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if mask >> k & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        let d = OrientedGraph::new(g.clone(), directions).expect("directions match");
        let set: Vec<Binomial> = cycles
            .iter()
            .map(|c| cycle_binomial(&d, c).expect("cycle").binomial)
            .collect();
        let mut found = false;
        'subsets: for subset in subsets_of_size(set.len(), target) {
            let gens: Vec<Binomial> = subset.iter().map(|&i| set[i].clone()).collect();
            let gb = buchberger(&gens, &order, limits).map_err(algebra)?;
            for b in &set {
                if gb.normal_form(b, limits).map_err(algebra)?.is_some() {
                    continue 'subsets;
                }
            }
            found = true;
            break;
        }
        if found {
            survey.certified += 1;
        }
    }
    Ok(survey)
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn go(
        start: usize,
        n: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        if n - start < size - current.len() {
            return;
        }
        for v in start..n {
            current.push(v);
            go(v + 1, n, size, current, out);
            current.pop();
        }
    }
    go(0, n, size, &mut current, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    /// Topological ordering: `order[i]` is the vertex at position i, every
    /// edge runs from a smaller to a larger position.
    Acyclic(Vec<usize>),
    /// An oriented cycle as a witness vertex sequence.
    Cyclic(Vec<usize>),
}

impl Acyclicity {
    pub fn ordering(&self) -> Option<&[usize]> {
        match self {
            Acyclicity::Acyclic(o) => Some(o),
            Acyclicity::Cyclic(_) => None,
        }
    }
}

/// Kahn's algorithm; on failure the witness is an oriented cycle found by
/// walking predecessors inside the unresolved remainder.
pub fn is_acyclic(d: &OrientedGraph) -> Acyclicity {
    let g = d.base();
    let n = g.n();
    let mut indegree = vec![0usize; n];
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut in_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for k in 0..g.q() {
        let (tail, head) = d.direction(k);
        indegree[head] += 1;
        out_edges[tail].push(head);
        in_edges[head].push(tail);
    }
    // smallest-vertex-first for determinism
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| indegree[v] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while let Some(std::cmp::Reverse(v)) = ready.pop() {
        order.push(v);
        placed[v] = true;
        for &w in &out_edges[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(std::cmp::Reverse(w));
            }
        }
    }
    if order.len() == n {
        return Acyclicity::Acyclic(order);
    }
    // every unplaced vertex has an unplaced predecessor: walk back until a
    // vertex repeats, then cut out the directed cycle
    let start = (0..n).find(|&v| !placed[v]).expect("unplaced vertex");
    let mut walk = vec![start];
    let mut seen_at = vec![usize::MAX; n];
    seen_at[start] = 0;
    loop {
        let cur = *walk.last().unwrap();
        let pred = *in_edges[cur]
            .iter()
            .find(|&&p| !placed[p])
            .expect("unresolved vertex keeps an unresolved predecessor");
        if seen_at[pred] != usize::MAX {
            let mut cycle: Vec<usize> = walk[seen_at[pred]..].to_vec();
            cycle.reverse(); // walk went backward along edges
            return Acyclicity::Cyclic(cycle);
        }
        seen_at[pred] = walk.len();
        walk.push(pred);
    }
}

/// Positive edge degrees induced by a topological ordering:
/// deg(t_k) = position(head) - position(tail). Every cycle binomial is
/// homogeneous under these degrees.
pub fn grading_degrees(d: &OrientedGraph, order: &[usize]) -> Result<Vec<u64>, OrientError> {
    let g = d.base();
    let n = g.n();
    if order.len() != n {
        return Err(OrientError::BadOrdering);
    }
    let mut pos = vec![usize::MAX; n];
    for (p, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(OrientError::BadOrdering);
        }
        pos[v] = p;
    }
    (0..g.q())
        .map(|k| {
            let (tail, head) = d.direction(k);
            if pos[head] <= pos[tail] {
                Err(OrientError::NotTopological { edge: k })
            } else {
                Ok((pos[head] - pos[tail]) as u64)
            }
        })
        .collect()
}
