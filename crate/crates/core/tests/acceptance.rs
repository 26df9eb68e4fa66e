//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the corpus size it covered (visible under `--nocapture`).
//!
//! Criterion 5 sweeps connected graphs exhaustively; the 6-vertex tier
//! runs by default and the 7-vertex tier is `#[ignore]`d (run it with
//! `cargo test --test acceptance -- --ignored`).

use ringtoric::binomial::{
    buchberger, kernel_member, normal_form, s_binomial, Binomial, EngineLimits, MonomialOrder,
    OrderKind,
};
use ringtoric::cycle_space::{cycle_rank, gf2_rank, ChainVector};
use ringtoric::graph::Graph;
use ringtoric::matrix;
use ringtoric::oracle::{self, families, rng::Rng};
use ringtoric::orientation::{ci_generators, fundamental_binomials};
use ringtoric::primitive::{enumerate_primitive_cycles, frank};
use ringtoric::ring::{certify_ring, is_ring_by_pcp_sp, is_ring_by_rank, replay_certificate};
use ringtoric::toric_bipartite::{
    build_foliation, height_toric, toric_generators_bipartite, validate_foliation,
};
use ringtoric::toric_oriented::{
    cycle_binomial, grading_degrees, incidence, is_acyclic, split_on_chord, Acyclicity,
    OrientedGraph,
};

const CORPUS_SEED: u64 = 20260808;

/// The shared random corpus for criteria 1 and 2: 2000 seeded graphs on
/// up to 10 vertices, mixed densities, connected and disconnected.
fn random_corpus() -> Vec<Graph> {
    let mut rng = Rng::new(CORPUS_SEED);
    let mut out = Vec::with_capacity(2000);
    for i in 0..2000 {
        let n = 1 + rng.below(10);
        let (num, den) = [(1, 4), (1, 3), (1, 2), (2, 3)][i % 4];
        out.push(families::random_graph(&mut rng, n, num, den));
    }
    out
}

fn three_way_check(g: &Graph) -> Result<(), String> {
    let by_rank = is_ring_by_rank(g);
    let by_pcp_sp = is_ring_by_pcp_sp(g);
    let outcome = certify_ring(g);
    if by_rank != by_pcp_sp || by_rank != outcome.is_ring() {
        return Err(format!(
            "ring verdicts disagree: rank={by_rank} pcp+sp={by_pcp_sp} certificate={}",
            outcome.is_ring()
        ));
    }
    if let Some(cert) = &outcome.certificate {
        if !replay_certificate(g, cert) {
            return Err("certificate replay failed to reconstruct the blocks".into());
        }
    }
    Ok(())
}

#[test]
fn criterion_01_three_way_ring_equivalence() {
    let mut graphs = 0u64;
    for n in 1..=7 {
        let report = oracle::sweep_labeled_graphs(n, true, three_way_check);
        assert!(report.ok(), "n={n}: {:?}", report.failures);
        graphs += report.graphs;
    }
    for (i, g) in random_corpus().iter().enumerate() {
        three_way_check(g).unwrap_or_else(|e| panic!("random graph {i}: {e}"));
        graphs += 1;
    }
    println!("PASS criterion 1: three-way ring equivalence on {graphs} graphs");
}

fn rank_span_check(g: &Graph) -> Result<(), String> {
    let rank = cycle_rank(g);
    let cycles = enumerate_primitive_cycles(g);
    if rank > cycles.len() {
        return Err(format!("rank {rank} exceeds frank {}", cycles.len()));
    }
    let vectors: Vec<ChainVector> = cycles.into_iter().map(|c| c.chain).collect();
    let spanned = gf2_rank(&vectors);
    if spanned != rank {
        return Err(format!(
            "primitive cycle vectors span rank {spanned}, cycle rank is {rank}"
        ));
    }
    Ok(())
}

#[test]
fn criterion_02_rank_leq_frank_and_primitive_span() {
    let mut graphs = 0u64;
    for n in 1..=7 {
        let report = oracle::sweep_labeled_graphs(n, true, rank_span_check);
        assert!(report.ok(), "n={n}: {:?}", report.failures);
        graphs += report.graphs;
    }
    for (i, g) in random_corpus().iter().enumerate() {
        rank_span_check(g).unwrap_or_else(|e| panic!("random graph {i}: {e}"));
        graphs += 1;
    }
    println!("PASS criterion 2: rank <= frank and primitive span on {graphs} graphs");
}

#[test]
fn criterion_03_block_reduction() {
    let mut graphs = 0u64;
    for n in 1..=7 {
        let report = oracle::sweep_labeled_graphs(n, true, |g| {
            let global = cycle_rank(g) == frank(g);
            let mut frank_sum = 0usize;
            let mut blockwise = true;
            for block in &g.blocks().blocks {
                let sub = g.induced(&block.vertices).expect("block vertices");
                frank_sum += frank(&sub);
                if cycle_rank(&sub) != frank(&sub) {
                    blockwise = false;
                }
            }
            if global != blockwise {
                return Err(format!(
                    "global rank==frank is {global} but per-block it is {blockwise}"
                ));
            }
            if frank_sum != frank(g) {
                return Err(format!(
                    "frank {} is not the sum {frank_sum} over blocks",
                    frank(g)
                ));
            }
            Ok(())
        });
        assert!(report.ok(), "n={n}: {:?}", report.failures);
        graphs += report.graphs;
    }
    println!("PASS criterion 3: block reduction of rank==frank on {graphs} graphs");
}

#[test]
fn criterion_04_bipartite_complete_intersection() {
    let mut graphs = 0u64;
    let mut foliations = 0u64;
    for n in 1..=8 {
        let report = oracle::sweep_connected_bipartite(n, |g| {
            let gens = toric_generators_bipartite(g).expect("corpus is bipartite");
            let height = height_toric(g);
            assert!(height.connected);
            let is_ring = is_ring_by_rank(g);
            if (gens.len() == height.height) != is_ring {
                return Err(format!(
                    "{} primitive cycles vs height {} contradicts ring verdict {is_ring}",
                    gens.len(),
                    height.height
                ));
            }
            // kernel membership of every generator under the 0/1 incidence
            let mut rows = vec![vec![0i64; g.q()]; g.n()];
            for k in 0..g.q() {
                let (u, v) = g.edge(k);
                rows[u][k] = 1;
                rows[v][k] = 1;
            }
            for b in &gens {
                if kernel_member(&rows, b) != Ok(true) {
                    return Err("generator escapes the incidence kernel".into());
                }
            }
            // foliations exactly on the 2-connected ring instances
            if g.n() >= 4 && g.blocks().cutvertices.is_empty() {
                match build_foliation(g).expect("preconditions hold") {
                    Some(f) => {
                        if !is_ring {
                            return Err("foliation built for a non-ring graph".into());
                        }
                        if let Err(v) = validate_foliation(&f) {
                            return Err(format!("foliation invalid: {v}"));
                        }
                        if f.members.len() != height.height {
                            return Err("foliation size differs from height".into());
                        }
                    }
                    None => {
                        if is_ring {
                            return Err(
                                "no foliation for a 2-connected bipartite ring graph".into()
                            );
                        }
                    }
                }
            }
            Ok(())
        });
        assert!(report.ok(), "n={n}: {:?}", report.failures);
        graphs += report.graphs;
        foliations += report.graphs; // upper bound; per-graph detail not tracked
    }
    let _ = foliations;
    println!(
        "PASS criterion 4: bipartite CI classification on {graphs} connected bipartite graphs"
    );
}

/// Criterion 5 body: the constructed orientation is acyclic, yields
/// exactly q - n + 1 generators of singleton shape, homogeneous under the
/// induced grading, and every cycle binomial reduces to zero against them.
fn icd_check(g: &Graph) -> Result<(), String> {
    let cert = ci_generators(g).map_err(|e| e.to_string())?;
    let expected = g.q() + g.component_count() - g.n();
    if cert.fundamental.len() != expected {
        return Err(format!(
            "expected {expected} generators, got {}",
            cert.fundamental.len()
        ));
    }
    for f in &cert.fundamental {
        if !f.has_fundamental_shape(&cert.tree_edges) {
            return Err(format!(
                "generator for edge {} lacks the singleton shape",
                f.non_tree_edge
            ));
        }
    }
    let Acyclicity::Acyclic(topo) = is_acyclic(&cert.oriented) else {
        return Err("constructed orientation has an oriented cycle".into());
    };
    let degrees = grading_degrees(&cert.oriented, &topo).map_err(|e| e.to_string())?;
    let weigh =
        |side: &[u32]| -> u64 { side.iter().zip(&degrees).map(|(&e, &w)| e as u64 * w).sum() };
    for f in &cert.fundamental {
        if weigh(&f.binomial.plus) != weigh(&f.binomial.minus) {
            return Err("generator is not homogeneous under the grading".into());
        }
    }
    // lex order ranking non-tree variables above tree variables puts the
    // singleton side in the lead; the basis is then Groebner by coprimality
    let mut permutation: Vec<usize> = (0..g.q())
        .filter(|k| !cert.tree_edges.contains(k))
        .collect();
    permutation.extend(cert.tree_edges.iter().copied());
    let order = MonomialOrder::lex(permutation);
    let limits = EngineLimits::default();
    let gens: Vec<Binomial> = cert
        .fundamental
        .iter()
        .map(|f| f.binomial.clone())
        .collect();
    let gb = buchberger(&gens, &order, &limits).map_err(|e| e.to_string())?;
    if gb.elements.len() != gens.len() {
        return Err("coprime leading terms should complete to themselves".into());
    }
    let matrix = incidence(&cert.oriented);
    for cycle in oracle::all_cycles(g) {
        let ocb = cycle_binomial(&cert.oriented, &cycle).map_err(|e| e.to_string())?;
        if !matrix.kernel_member(&ocb.binomial) {
            return Err("cycle binomial escapes the incidence kernel".into());
        }
        match gb.normal_form(&ocb.binomial, &limits) {
            Ok(None) => {}
            Ok(Some(_)) => {
                return Err(format!(
                    "cycle {cycle:?} has nonzero normal form: the ideal is not generated"
                ))
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(())
}

#[test]
fn criterion_05_icd_generation_fast_tier() {
    let mut graphs = 0u64;
    for n in 1..=6 {
        let report = oracle::sweep_labeled_graphs(n, true, icd_check);
        assert!(report.ok(), "n={n}: {:?}", report.failures);
        graphs += report.graphs;
    }
    println!("PASS criterion 5 (fast tier): ideal generation by the constructed orientation on {graphs} graphs");
}

#[test]
#[ignore = "7-vertex full tier; ~5 minutes, run with -- --ignored"]
fn criterion_05_icd_generation_full_n7() {
    let report = oracle::sweep_labeled_graphs(7, true, icd_check);
    assert!(report.ok(), "{:?}", report.failures);
    println!(
        "PASS criterion 5 (full tier): ideal generation on {} further graphs",
        report.graphs
    );
}

#[test]
fn criterion_06_universal_groebner_basis() {
    let mut rng = Rng::new(CORPUS_SEED ^ 0x6b);
    let limits = EngineLimits::default();
    let mut pairs_checked = 0u64;
    for instance in 0..20 {
        let n = 3 + rng.below(5);
        let g = families::random_connected_graph(&mut rng, n, 1, 2);
        let directions: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| if rng.chance(1, 2) { (u, v) } else { (v, u) })
            .collect();
        let d = OrientedGraph::new(g.clone(), directions).expect("directions match");
        let set: Vec<Binomial> = oracle::all_cycles(&g)
            .iter()
            .map(|c| cycle_binomial(&d, c).expect("cycle").binomial)
            .collect();
        for trial in 0..5 {
            let order = random_order(&mut rng, g.q());
            for i in 0..set.len() {
                for j in i + 1..set.len() {
                    let Some(s) = s_binomial(&set[i], &set[j], &order).expect("uniform lengths")
                    else {
                        continue;
                    };
                    pairs_checked += 1;
                    let nf = normal_form(&s, &set, &order, &limits).expect("within budget");
                    assert!(
                        nf.is_none(),
                        "instance {instance} trial {trial}: S-pair ({i},{j}) does not reduce to zero"
                    );
                }
            }
        }
    }
    println!(
        "PASS criterion 6: universal Groebner property, {pairs_checked} S-pairs reduced to zero"
    );
}

fn random_order(rng: &mut Rng, num_vars: usize) -> MonomialOrder {
    let permutation = rng.permutation(num_vars);
    match rng.below(3) {
        0 => MonomialOrder::lex(permutation),
        1 => MonomialOrder::graded_lex(permutation),
        _ => MonomialOrder::graded_revlex(permutation),
    }
}

#[test]
fn criterion_07_chord_splitting() {
    let mut rng = Rng::new(CORPUS_SEED ^ 0x7c);
    for instance in 0..200 {
        let m = 4 + rng.below(6);
        // cycle 0..m plus one chord between non-consecutive vertices
        let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        let (a, b) = loop {
            let a = rng.below(m);
            let b = rng.below(m);
            let (a, b) = (a.min(b), a.max(b));
            let consecutive = b == a + 1 || (a == 0 && b == m - 1);
            if a != b && !consecutive {
                break (a, b);
            }
        };
        edges.push((a, b));
        let chord = edges.len() - 1;
        let g = Graph::from_edges(m, &edges).unwrap();
        let directions: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| if rng.chance(1, 2) { (u, v) } else { (v, u) })
            .collect();
        let d = OrientedGraph::new(g, directions).unwrap();
        let cycle: Vec<usize> = (0..m).collect();
        let split = split_on_chord(&d, &cycle, chord).expect("chord is a chord");
        // independent exponent arithmetic: cof1 * t_c1 - cof2 * t_c2 must
        // cancel to t_c after aligning the chord on the positive sides
        let whole = cycle_binomial(&d, &cycle).unwrap();
        let chord_positive = |b: &ringtoric::toric_oriented::OrientedCycleBinomial| {
            if b.plus_edges.contains(&chord) {
                (b.binomial.plus.clone(), b.binomial.minus.clone())
            } else {
                (b.binomial.minus.clone(), b.binomial.plus.clone())
            }
        };
        let (a_plus, a_minus) = chord_positive(&split.c1);
        let (b_plus, b_minus) = chord_positive(&split.c2);
        let mul =
            |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(&p, &q)| p + q).collect() };
        // four signed monomials of cof1*(a+ - a-) - cof2*(b+ - b-)
        let mut terms: Vec<(i32, Vec<u32>)> = vec![
            (1, mul(&split.cofactor1, &a_plus)),
            (-1, mul(&split.cofactor1, &a_minus)),
            (-1, mul(&split.cofactor2, &b_plus)),
            (1, mul(&split.cofactor2, &b_minus)),
        ];
        // cancel equal monomials with opposite signs
        let mut reduced: Vec<(i32, Vec<u32>)> = Vec::new();
        'outer: for (s, m) in terms.drain(..) {
            for r in &mut reduced {
                if r.1 == m {
                    r.0 += s;
                    continue 'outer;
                }
            }
            reduced.push((s, m));
        }
        reduced.retain(|&(s, _)| s != 0);
        reduced.sort();
        let mut expected = vec![
            (1i32, whole.binomial.plus.clone()),
            (-1, whole.binomial.minus.clone()),
        ];
        expected.sort();
        let mut negated = vec![
            (-1i32, whole.binomial.plus.clone()),
            (1, whole.binomial.minus.clone()),
        ];
        negated.sort();
        assert!(
            reduced == expected || reduced == negated,
            "instance {instance}: chord identity fails exactly"
        );
    }
    println!("PASS criterion 7: chord splitting identity on 200 instances");
}

#[test]
fn criterion_08_total_unimodularity_and_circuits() {
    let mut rng = Rng::new(CORPUS_SEED ^ 0x8d);
    // minors up to 5x5 of 100 random incidence matrices lie in {0, +-1}
    for instance in 0..100 {
        let n = 2 + rng.below(7);
        let g = families::random_graph(&mut rng, n, 1, 2);
        let directions: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| if rng.chance(1, 2) { (u, v) } else { (v, u) })
            .collect();
        let d = OrientedGraph::new(g.clone(), directions).unwrap();
        let m = incidence(&d);
        for size in 1..=5usize.min(g.n()).min(g.q().max(1)) {
            for rows in subsets(g.n(), size) {
                for cols in subsets(g.q(), size) {
                    let sub: Vec<Vec<i64>> = rows
                        .iter()
                        .map(|&r| cols.iter().map(|&c| m.entry(r, c)).collect())
                        .collect();
                    let det = matrix::det(&sub);
                    assert!(
                        det == 0 || det == 1 || det == -1,
                        "instance {instance}: {size}x{size} minor {det} breaks total unimodularity"
                    );
                }
            }
        }
    }
    // kernel circuits equal cycle edge sets, by brute force on <= 8 edges
    let mut circuit_graphs = 0;
    let mut attempts = 0;
    while circuit_graphs < 40 && attempts < 4000 {
        attempts += 1;
        let n = 3 + rng.below(6);
        let g = families::random_graph(&mut rng, n, 1, 3);
        if g.q() > 8 || g.q() == 0 {
            continue;
        }
        circuit_graphs += 1;
        let directions: Vec<(usize, usize)> = g.edges().to_vec();
        let d = OrientedGraph::new(g.clone(), directions).unwrap();
        let m = incidence(&d);
        let mut circuits: Vec<Vec<usize>> = Vec::new();
        for mask in 1u32..(1 << g.q()) {
            let support: Vec<usize> = (0..g.q()).filter(|&k| mask >> k & 1 == 1).collect();
            if !is_dependent(&m, &support) {
                continue;
            }
            let minimal = support.iter().all(|&skip| {
                let sub: Vec<usize> = support.iter().copied().filter(|&k| k != skip).collect();
                sub.is_empty() || !is_dependent(&m, &sub)
            });
            if minimal {
                circuits.push(support);
            }
        }
        let mut cycle_sets: Vec<Vec<usize>> = oracle::all_cycles(&g)
            .iter()
            .map(|c| {
                let mut ks: Vec<usize> = (0..c.len())
                    .map(|i| g.edge_index(c[i], c[(i + 1) % c.len()]).unwrap())
                    .collect();
                ks.sort_unstable();
                ks
            })
            .collect();
        circuits.sort();
        cycle_sets.sort();
        assert_eq!(
            circuits, cycle_sets,
            "kernel circuits must be exactly the cycle edge sets"
        );
    }
    assert_eq!(
        circuit_graphs, 40,
        "not enough small-edge-count graphs drawn"
    );
    println!(
        "PASS criterion 8: total unimodularity (100 graphs) and circuit correspondence (40 graphs)"
    );
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
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
        for v in start..n {
            current.push(v);
            go(v + 1, n, size, current, out);
            current.pop();
        }
    }
    go(0, n, size, &mut current, &mut out);
    out
}

/// Columns indexed by `support` are linearly dependent over the rationals.
fn is_dependent(m: &ringtoric::toric_oriented::IncidenceMatrix, support: &[usize]) -> bool {
    let rows: Vec<Vec<i64>> = m
        .rows()
        .iter()
        .map(|r| support.iter().map(|&k| r[k]).collect())
        .collect();
    matrix::rank(&rows) < support.len()
}

#[test]
fn criterion_09_hereditary_and_outerplanar() {
    // hereditary closure over every vertex subset of every ring graph on
    // up to 7 vertices, disconnected ones included
    let mut ring_graphs = 0u64;
    for n in 1..=7 {
        let report = oracle::sweep_labeled_graphs(n, false, |g| {
            if !is_ring_by_rank(g) {
                return Ok(());
            }
            for mask in 0u32..(1 << g.n()) {
                let subset: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                let h = g.induced(&subset).expect("subset of vertices");
                if !is_ring_by_rank(&h) {
                    return Err(format!("induced subgraph {subset:?} is not a ring graph"));
                }
            }
            Ok(())
        });
        assert!(report.ok(), "n={n}: {:?}", report.failures);
        ring_graphs += report.graphs;
    }
    // outerplanar families satisfy rank == frank
    let mut rng = Rng::new(CORPUS_SEED ^ 0x9e);
    let mut outerplanar = 0u64;
    for n in 2..=10 {
        let g = families::fan(n);
        assert_eq!(cycle_rank(&g), frank(&g), "fan on {n} vertices");
        outerplanar += 1;
    }
    for _ in 0..100 {
        let n = 3 + rng.below(10);
        let g = families::triangulated_polygon(&mut rng, n);
        assert_eq!(cycle_rank(&g), frank(&g), "triangulated polygon on {n}");
        outerplanar += 1;
    }
    for _ in 0..100 {
        let n = 3 + rng.below(10);
        let g = families::polygon_with_chords(&mut rng, n);
        assert_eq!(cycle_rank(&g), frank(&g), "chorded polygon on {n}");
        outerplanar += 1;
    }
    println!(
        "PASS criterion 9: hereditary closure over all subsets of all ring graphs <= 7 vertices ({ring_graphs} graphs swept) and {outerplanar} outerplanar instances"
    );
}

#[test]
fn criterion_10_acyclic_tournaments() {
    let limits = EngineLimits::default();
    let mut tournaments = 0u64;
    for n in 2..=6usize {
        for perm in permutations(n) {
            tournaments += 1;
            // tournament: every pair oriented from the earlier to the later
            // vertex in the permutation
            let g = families::complete(n);
            let mut pos = vec![0usize; n];
            for (p, &v) in perm.iter().enumerate() {
                pos[v] = p;
            }
            let directions: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| if pos[u] < pos[v] { (u, v) } else { (v, u) })
                .collect();
            let d = OrientedGraph::new(g.clone(), directions).unwrap();
            assert!(matches!(is_acyclic(&d), Acyclicity::Acyclic(_)));
            // the spanning oriented path follows the permutation
            let tree: Vec<usize> = perm
                .windows(2)
                .map(|w| g.edge_index(w[0], w[1]).unwrap())
                .collect();
            let gens = fundamental_binomials(&d, &tree).unwrap();
            assert_eq!(gens.len(), g.q() + 1 - n);
            for f in &gens {
                assert!(
                    f.has_fundamental_shape(&tree),
                    "n={n} perm={perm:?}: generator not singleton-shaped"
                );
            }
            // distinct single-variable leading terms under a lex order
            // ranking non-tree variables highest: Groebner by coprimality
            let mut permutation: Vec<usize> = (0..g.q()).filter(|k| !tree.contains(k)).collect();
            permutation.extend(tree.iter().copied());
            let order = MonomialOrder::lex(permutation);
            let binomials: Vec<Binomial> = gens.iter().map(|f| f.binomial.clone()).collect();
            let gb = buchberger(&binomials, &order, &limits).unwrap();
            assert_eq!(gb.elements.len(), binomials.len());
            let mut leads: Vec<usize> = gb
                .elements
                .iter()
                .map(|e| {
                    let support: Vec<usize> = e
                        .plus
                        .iter()
                        .enumerate()
                        .filter(|&(_, &x)| x > 0)
                        .map(|(i, _)| i)
                        .collect();
                    assert_eq!(support.len(), 1, "leading term must be a single variable");
                    assert_eq!(e.plus[support[0]], 1);
                    support[0]
                })
                .collect();
            leads.sort_unstable();
            leads.dedup();
            assert_eq!(leads.len(), gb.elements.len(), "leading variables repeat");
        }
    }
    assert_eq!(tournaments, (2..=6).map(factorial).sum::<u64>());
    println!("PASS criterion 10: {tournaments} acyclic tournaments minimally generated by a Groebner basis");
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn order_kinds_are_exercised() {
    // keep the random-order helper honest: all three kinds appear
    let mut rng = Rng::new(1);
    let mut kinds = std::collections::HashSet::new();
    for _ in 0..64 {
        kinds.insert(match random_order(&mut rng, 4).kind {
            OrderKind::Lex => 0,
            OrderKind::GradedLex => 1,
            OrderKind::GradedRevLex => 2,
        });
    }
    assert_eq!(kinds.len(), 3);
}
