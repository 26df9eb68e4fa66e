//! Command-line surface: structural analysis, ring recognition, complete
//! intersection classification, the special orientation, and generator
//! listings, all as JSON on stdout. Exit code 0 on success, 1 on domain
//! errors (with a machine-readable error object), 2 on usage errors.

#![forbid(unsafe_code)]

use clap::{Parser, Subcommand};
use ringtoric::binomial::{buchberger, Binomial, EngineLimits, MonomialOrder};
use ringtoric::cycle_space::cycle_rank;
use ringtoric::graph::{Graph, GraphError};
use ringtoric::oracle::{self, families, rng::Rng, OracleError};
use ringtoric::orientation::ci_generators;
use ringtoric::primitive::{frank, k4_subdivision_free, pcp};
use ringtoric::ring::{certify_ring, is_ring_by_pcp_sp, is_ring_by_rank};
use ringtoric::toric_bipartite::{
    build_foliation, height_toric, is_complete_intersection_bipartite, toric_generators_bipartite,
    BipartiteError,
};
use ringtoric::toric_oriented::{
    incidence, is_acyclic, toric_generators_oriented, universal_groebner_basis, Acyclicity,
    OrientError, OrientedGraph,
};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ringtoric",
    version,
    about = "Ring graphs and toric ideals of graphs"
)]
struct Cli {
    /// Cap on enumerated cycles and on Groebner pair processing.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex/edge counts, cycle rank, free rank, PCP and K4-freeness.
    Analyze { file: PathBuf },
    /// Decide ring-graph-ness three independent ways.
    RingCheck {
        file: PathBuf,
        /// Include the construction certificate in the output.
        #[arg(long)]
        certificate: bool,
    },
    /// Complete intersection classification of a bipartite graph.
    CiCheck { file: PathBuf },
    /// Build the acyclic orientation whose fundamental-cycle binomials
    /// generate the toric ideal.
    Orient {
        file: PathBuf,
        /// Write a DOT rendering with the spanning tree edges bold.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Toric ideal generators of an oriented graph.
    Generators {
        file: PathBuf,
        /// Direction file (`u v` lines meaning u -> v); defaults to
        /// orienting every edge from its smaller to its larger index.
        #[arg(long)]
        orientation: Option<PathBuf>,
        /// Emit one binomial per cycle (a universal Groebner basis)
        /// instead of primitive cycles only.
        #[arg(long)]
        universal: bool,
        /// Check kernel membership of every generator and reduce every
        /// cycle binomial against the primitive-cycle basis.
        #[arg(long)]
        verify: bool,
    },
    /// Exhaustive small-graph agreement suite plus a seeded random batch.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 3_405_691_582)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        random_count: usize,
    },
}

/// Domain failure carrying the machine-readable object to print.
struct Failure(Value);

impl Failure {
    fn new(kind: &str, message: impl ToString) -> Failure {
        Failure(json!({"error": kind, "message": message.to_string()}))
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        let kind = match &e {
            GraphError::Loop { .. } => "loop",
            GraphError::MultiEdge { .. } => "multi-edge",
            GraphError::Parse { .. } => "parse",
            GraphError::UnknownVertex(_) => "unknown-vertex",
        };
        let mut value = json!({"error": kind, "message": e.to_string()});
        match &e {
            GraphError::Parse { line, .. }
            | GraphError::Loop { line, .. }
            | GraphError::MultiEdge { line, .. } => value["line"] = json!(line),
            GraphError::UnknownVertex(_) => {}
        }
        Failure(value)
    }
}

impl From<OrientError> for Failure {
    fn from(e: OrientError) -> Failure {
        Failure::new("orientation", e)
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Failure {
        Failure::new("budget", e)
    }
}

impl From<ringtoric::binomial::AlgebraError> for Failure {
    fn from(e: ringtoric::binomial::AlgebraError) -> Failure {
        match e {
            ringtoric::binomial::AlgebraError::Budget(_) => Failure::new("budget", e),
            _ => Failure::new("algebra", e),
        }
    }
}

impl From<ringtoric::orientation::OrientationError> for Failure {
    fn from(e: ringtoric::orientation::OrientationError) -> Failure {
        Failure::new("orientation", e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("valid json")
            );
            ExitCode::SUCCESS
        }
        Err(Failure(value)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("valid json")
            );
            ExitCode::FAILURE
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut text)
            .map_err(|e| Failure::new("io", format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new("io", format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(Graph::parse(&read_file(path)?)?)
}

fn binomial_json(b: &Binomial) -> Value {
    json!({
        "plus": Binomial::support_with_multiplicity(&b.plus),
        "minus": Binomial::support_with_multiplicity(&b.minus),
    })
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.command {
        Command::Analyze { file } => {
            let g = load_graph(file)?;
            Ok(json!({
                "graph": g,
                "n": g.n(),
                "q": g.q(),
                "r": g.component_count(),
                "rank": cycle_rank(&g),
                "frank": frank(&g),
                "pcp": pcp(&g).holds,
                "k4_free": k4_subdivision_free(&g),
            }))
        }
        Command::RingCheck { file, certificate } => {
            let g = load_graph(file)?;
            let by_rank = is_ring_by_rank(&g);
            let by_pcp_sp = is_ring_by_pcp_sp(&g);
            let outcome = certify_ring(&g);
            let mut value = json!({
                "is_ring": by_rank,
                "method_agreement": by_rank == by_pcp_sp && by_rank == outcome.is_ring(),
                "methods": {
                    "rank_equals_frank": by_rank,
                    "pcp_and_k4_free": by_pcp_sp,
                    "certificate_found": outcome.is_ring(),
                },
                "peeling_stalled": outcome.stalled,
            });
            if *certificate {
                value["certificate"] = match outcome.certificate {
                    Some(cert) => serde_json::to_value(&cert).expect("serializable"),
                    None => Value::Null,
                };
            }
            Ok(value)
        }
        Command::CiCheck { file } => {
            let g = load_graph(file)?;
            let height = height_toric(&g);
            let bipartite = g.is_bipartite();
            let (is_ci, generators) = if bipartite {
                let gens = toric_generators_bipartite(&g).expect("bipartite checked");
                (
                    Some(is_complete_intersection_bipartite(&g).expect("bipartite checked")),
                    gens.iter().map(binomial_json).collect::<Vec<_>>(),
                )
            } else {
                (None, Vec::new())
            };
            let foliation = match build_foliation(&g) {
                Ok(Some(f)) => json!({
                    "members": f.members.iter().map(binomial_json).collect::<Vec<_>>(),
                    "variable_order": f.variable_order,
                }),
                Ok(None) => Value::Null,
                Err(
                    BipartiteError::NotBipartite
                    | BipartiteError::NotTwoConnected
                    | BipartiteError::TooSmall,
                ) => Value::Null,
                Err(e) => return Err(Failure::new("bipartite", e)),
            };
            Ok(json!({
                "bipartite": bipartite,
                "is_ci": is_ci,
                "height": height.height,
                "connected": height.connected,
                "generators": generators,
                "foliation": foliation,
            }))
        }
        Command::Orient { file, dot } => {
            let g = load_graph(file)?;
            let cert = ci_generators(&g)?;
            if let Some(dot_path) = dot {
                std::fs::write(dot_path, render_dot(&g, &cert))
                    .map_err(|e| Failure::new("io", format!("{}: {e}", dot_path.display())))?;
            }
            let stages: Vec<Value> = cert
                .tree_sequences
                .iter()
                .flat_map(|s| {
                    serde_json::to_value(&s.stages)
                        .expect("serializable")
                        .as_array()
                        .cloned()
                        .unwrap_or_default()
                })
                .collect();
            Ok(json!({
                "labeling": cert.labeling.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                "directed_edges": cert.oriented.directions().iter()
                    .map(|&(t, h)| json!([g.label(t), g.label(h)]))
                    .collect::<Vec<_>>(),
                "tree_edges": cert.tree_edges,
                "generators": cert.fundamental.iter().map(|f| json!({
                    "non_tree_edge": f.non_tree_edge,
                    "cycle": f.cycle,
                    "binomial": binomial_json(&f.binomial),
                })).collect::<Vec<_>>(),
                "primitive_generators": cert.primitive_generators.iter()
                    .map(|b| binomial_json(&b.binomial))
                    .collect::<Vec<_>>(),
                "stages": stages,
                "connected": cert.connected,
            }))
        }
        Command::Generators {
            file,
            orientation,
            universal,
            verify,
        } => {
            let g = load_graph(file)?;
            let d = match orientation {
                Some(path) => OrientedGraph::parse_orientation(g, &read_file(path)?)?,
                None => OrientedGraph::ascending(g),
            };
            let listed = if *universal {
                universal_groebner_basis(&d, cli.budget as usize)?
            } else {
                toric_generators_oriented(&d)
            };
            let mut value = json!({
                "universal": universal,
                "generators": listed.iter().map(|b| json!({
                    "cycle": b.cycle,
                    "plus_edges": b.plus_edges,
                    "minus_edges": b.minus_edges,
                    "binomial": binomial_json(&b.binomial),
                })).collect::<Vec<_>>(),
                "acyclic": matches!(is_acyclic(&d), Acyclicity::Acyclic(_)),
            });
            if *verify {
                value["verification"] = verify_generators(&d, cli.budget)?;
            }
            Ok(value)
        }
        Command::Selftest {
            max_vertices,
            seed,
            random_count,
        } => selftest(*max_vertices, *seed, *random_count),
    }
}

/// Kernel membership of every listed generator, plus normal form of every
/// cycle binomial against a basis completed from the primitive cycles.
fn verify_generators(d: &OrientedGraph, budget: u64) -> Result<Value, Failure> {
    let matrix = incidence(d);
    let primitive = toric_generators_oriented(d);
    let all = universal_groebner_basis(d, budget as usize)?;
    for b in primitive.iter().chain(all.iter()) {
        if !matrix.kernel_member(&b.binomial) {
            return Ok(json!({"ok": false, "reason": "kernel membership failed"}));
        }
    }
    let limits = EngineLimits {
        max_pairs: budget,
        ..Default::default()
    };
    let order = MonomialOrder::default_lex(d.base().q());
    let gens: Vec<Binomial> = primitive.iter().map(|b| b.binomial.clone()).collect();
    let gb = buchberger(&gens, &order, &limits)?;
    for b in &all {
        if gb.normal_form(&b.binomial, &limits)?.is_some() {
            return Ok(json!({
                "ok": false,
                "reason": "cycle binomial does not reduce to zero",
                "cycle": b.cycle,
            }));
        }
    }
    Ok(json!({
        "ok": true,
        "kernel_checked": primitive.len() + all.len(),
        "cycles_reduced": all.len(),
        "basis_size": gb.elements.len(),
    }))
}

/// Three-way ring agreement plus oracle agreement on every connected graph
/// with up to `max_vertices` vertices, then the same on a seeded random
/// batch.
fn selftest(max_vertices: usize, seed: u64, random_count: usize) -> Result<Value, Failure> {
    let mut graphs_checked = 0u64;
    let mut failures: Vec<String> = Vec::new();
    let check = |g: &Graph| -> Result<(), String> {
        let by_rank = is_ring_by_rank(g);
        if by_rank != is_ring_by_pcp_sp(g) {
            return Err("rank/frank disagrees with pcp+sp".into());
        }
        let outcome = certify_ring(g);
        if by_rank != outcome.is_ring() {
            return Err("certificate presence disagrees with rank/frank".into());
        }
        if frank(g) != oracle::oracle_frank(g) {
            return Err("frank disagrees with oracle".into());
        }
        if g.n() <= 9 {
            let has_k4 = oracle::oracle_k4_subdivision(g).expect("within oracle budget");
            if k4_subdivision_free(g) != !has_k4 {
                return Err("k4 reduction disagrees with oracle".into());
            }
        }
        Ok(())
    };
    for n in 1..=max_vertices {
        let report = oracle::sweep_labeled_graphs(n, true, check);
        graphs_checked += report.graphs;
        failures.extend(report.failures);
    }
    let mut rng = Rng::new(seed);
    for _ in 0..random_count {
        let n = 2 + rng.below(9);
        let g = families::random_graph(&mut rng, n, 1, 2);
        graphs_checked += 1;
        if let Err(msg) = check(&g) {
            failures.push(format!("random: {msg}"));
        }
    }
    if failures.is_empty() {
        Ok(json!({
            "ok": true,
            "graphs_checked": graphs_checked,
            "max_vertices": max_vertices,
            "seed": seed,
        }))
    } else {
        Err(Failure(json!({
            "error": "selftest",
            "graphs_checked": graphs_checked,
            "seed": seed,
            "failures": failures,
        })))
    }
}

/// DOT rendering with spanning tree edges bold.
fn render_dot(g: &Graph, cert: &ringtoric::orientation::OrientationCertificate) -> String {
    let mut out = String::from("digraph oriented {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  \"{}\";\n", g.label(v)));
    }
    for (k, &(tail, head)) in cert.oriented.directions().iter().enumerate() {
        let style = if cert.tree_edges.contains(&k) {
            " [style=bold]"
        } else {
            ""
        };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\"{};\n",
            g.label(tail),
            g.label(head),
            style
        ));
    }
    out.push_str("}\n");
    out
}
