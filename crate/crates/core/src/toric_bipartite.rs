//! Toric ideals of bipartite graphs: primitive-cycle generators, the
//! complete intersection classification (exactly the ring graphs), and
//! foliations, whose leading terms are pairwise coprime under a variable
//! order built from the ring certificate.

use crate::binomial::{Binomial, MonomialOrder};
use crate::graph::Graph;
use crate::matrix;
use crate::primitive::{canonical_cycle_order, enumerate_primitive_cycles, PrimitiveCycle};
use crate::ring::{certify_ring, is_ring_by_rank};
use serde::Serialize;
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BipartiteError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("odd cycle has no bipartite binomial")]
    OddCycle,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("fewer than four vertices")]
    TooSmall,
}

/// Alternating binomial of an even cycle: odd-position edges on one side,
/// even-position edges on the other; both sides square-free of degree
/// len/2.
pub fn even_cycle_binomial(g: &Graph, c: &PrimitiveCycle) -> Result<Binomial, BipartiteError> {
    if c.len() % 2 != 0 {
        return Err(BipartiteError::OddCycle);
    }
    let plus: Vec<usize> = c.edges.iter().step_by(2).copied().collect();
    let minus: Vec<usize> = c.edges.iter().skip(1).step_by(2).copied().collect();
    Ok(Binomial::from_supports(g.q(), &plus, &minus))
}

/// The minimal generating set of the toric ideal of a bipartite graph: one
/// alternating binomial per primitive cycle.
pub fn toric_generators_bipartite(g: &Graph) -> Result<Vec<Binomial>, BipartiteError> {
    if !g.is_bipartite() {
        return Err(BipartiteError::NotBipartite);
    }
    enumerate_primitive_cycles(g)
        .iter()
        .map(|c| even_cycle_binomial(g, c))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricHeight {
    pub height: usize,
    /// False when the input was disconnected and per-component heights
    /// were summed.
    pub connected: bool,
}

/// Height of the toric ideal: q - n + 1 for a connected bipartite graph,
/// q - n for a connected non-bipartite one; summed per component (and
/// flagged) otherwise. Cross-checked in debug builds against
/// q - rank of the 0/1 incidence matrix.
pub fn height_toric(g: &Graph) -> ToricHeight {
    let components = g.components();
    let connected = components.len() == 1;
    let mut height = 0;
    for comp in &components {
        let sub = g.induced(comp).expect("component vertices exist");
        let delta = if sub.is_bipartite() { 1 } else { 0 };
        height += sub.q() + delta - sub.n();
    }
    debug_assert_eq!(height, g.q() - unoriented_incidence_rank(g));
    ToricHeight { height, connected }
}

fn unoriented_incidence_rank(g: &Graph) -> usize {
    let mut rows = vec![vec![0i64; g.q()]; g.n()];
    for k in 0..g.q() {
        let (u, v) = g.edge(k);
        rows[u][k] = 1;
        rows[v][k] = 1;
    }
    matrix::rank(&rows)
}

/// A bipartite graph is a complete intersection exactly when it is a ring
/// graph.
pub fn is_complete_intersection_bipartite(g: &Graph) -> Result<bool, BipartiteError> {
    if !g.is_bipartite() {
        return Err(BipartiteError::NotBipartite);
    }
    Ok(is_ring_by_rank(g))
}

/// Ordered generating set whose members chain with single-variable support
/// overlaps; automatically a Groebner basis with pairwise coprime leading
/// terms under lex over `variable_order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Foliation {
    pub members: Vec<Binomial>,
    /// Variable priority: `variable_order[0]` is the lex-highest edge.
    pub variable_order: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FoliationViolation {
    #[error("member {member} is not square-free (condition a)")]
    NotSquareFree { member: usize },
    #[error("member {member} has overlapping sides (condition b)")]
    SharedSupport { member: usize },
    #[error("member {member} meets its predecessors in {size} variables, not 1 (condition c)")]
    OverlapNotSingleton { member: usize, size: usize },
    #[error("leading terms of members {first} and {second} share a variable")]
    LeadingTermsNotCoprime { first: usize, second: usize },
}

/// Mechanical check of the foliation conditions plus pairwise coprimality
/// of the lex leading terms.
pub fn validate_foliation(f: &Foliation) -> Result<(), FoliationViolation> {
    for (i, m) in f.members.iter().enumerate() {
        if !m.is_square_free() {
            return Err(FoliationViolation::NotSquareFree { member: i });
        }
        if !m.has_disjoint_support() {
            return Err(FoliationViolation::SharedSupport { member: i });
        }
    }
    // condition (c): each member meets the union of its predecessors in
    // exactly one variable
    if let Some(first) = f.members.first() {
        let mut union: Vec<bool> = vec![false; first.num_vars()];
        for &v in &first.support_union() {
            union[v] = true;
        }
        for (j, m) in f.members.iter().enumerate().skip(1) {
            let overlap = m.support_union().iter().filter(|&&v| union[v]).count();
            if overlap != 1 {
                return Err(FoliationViolation::OverlapNotSingleton {
                    member: j,
                    size: overlap,
                });
            }
            for &v in &m.support_union() {
                union[v] = true;
            }
        }
    }
    // leading terms under lex(variable_order) are pairwise relatively prime
    let order = MonomialOrder::lex(f.variable_order.clone());
    let leading: Vec<Vec<u32>> = f
        .members
        .iter()
        .map(|m| {
            match order
                .compare(&m.plus, &m.minus)
                .expect("uniform variable count")
            {
                Ordering::Less => m.minus.clone(),
                _ => m.plus.clone(),
            }
        })
        .collect();
    for i in 0..leading.len() {
        for j in i + 1..leading.len() {
            let shares = leading[i]
                .iter()
                .zip(&leading[j])
                .any(|(&a, &b)| a > 0 && b > 0);
            if shares {
                return Err(FoliationViolation::LeadingTermsNotCoprime {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}

/// Foliation of a 2-connected bipartite graph with at least four vertices,
/// or `None` when the graph is not a ring graph (equivalently, not a
/// complete intersection).
///
/// Members follow the ring certificate: the base cycle first, then one
/// cycle per attached H-path (the path plus the edge joining its
/// endpoints). Each attachment's path edges outrank everything older, with
/// the first path edge highest, which puts the leading term of each member
/// on its all-new side and makes the leading terms pairwise coprime.
pub fn build_foliation(g: &Graph) -> Result<Option<Foliation>, BipartiteError> {
    if !g.is_bipartite() {
        return Err(BipartiteError::NotBipartite);
    }
    if g.n() < 4 {
        return Err(BipartiteError::TooSmall);
    }
    if !g.is_connected() || !g.blocks().cutvertices.is_empty() {
        return Err(BipartiteError::NotTwoConnected);
    }
    let outcome = certify_ring(g);
    let Some(cert) = outcome.certificate else {
        return Ok(None);
    };
    debug_assert_eq!(cert.blocks.len(), 1, "2-connected graph has one block");
    let construction = &cert.blocks[0];

    let mut members = vec![even_cycle_binomial(g, &construction.base_cycle)?];
    // highest variables first: later attachments outrank earlier ones
    let mut priority: Vec<usize> = Vec::with_capacity(g.q());
    for path in construction.attachments.iter().rev() {
        for w in path.windows(2) {
            priority.push(g.edge_index(w[0], w[1]).expect("path edge"));
        }
    }
    for path in &construction.attachments {
        // the H-path closed by the edge joining its endpoints is a cycle
        let cycle = PrimitiveCycle::from_vertex_seq(g, canonical_cycle_order(path));
        members.push(even_cycle_binomial(g, &cycle)?);
    }
    priority.extend(construction.base_cycle.edges.iter().copied());
    debug_assert_eq!(priority.len(), g.q());
    let foliation = Foliation {
        members,
        variable_order: priority,
    };
    debug_assert_eq!(validate_foliation(&foliation), Ok(()));
    Ok(Some(foliation))
}
