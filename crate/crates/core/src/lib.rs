//! Ring graph recognition and complete intersection toric ideals of graphs.
//!
//! A graph is a ring graph when its 2-connected blocks arise from a cycle
//! by repeatedly attaching paths of length at least two at adjacent
//! vertices. The crate decides this three independent ways (cycle rank vs.
//! free rank, primitive cycle property plus K4-subdivision-freeness, and a
//! constructive certificate), classifies complete intersection toric
//! ideals of bipartite and oriented graphs, and constructs an acyclic
//! orientation whose fundamental-cycle binomials generate the toric ideal.
//! A binomial Groebner engine and brute-force oracles verify every claim
//! at small scale.

#![forbid(unsafe_code)]

pub mod binomial;
pub mod cycle_space;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod orientation;
pub mod primitive;
pub mod ring;
pub mod toric_bipartite;
pub mod toric_oriented;

pub use graph::{Graph, GraphError};
