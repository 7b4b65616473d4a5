//! The shipped graph corpus: the named instances every verification suite
//! runs on, plus a seeded family of small random graphs. Construction is
//! deterministic; the `.edges` files under `corpus/` are the serialized form
//! of exactly these graphs (a test keeps them in sync).

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for the random members of the corpus; embedded in suite reports.
pub const CORPUS_SEED: u64 = 0x5EDE_2026;

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

/// The cycle graph on vertices `x1..xk`.
pub fn cycle(k: usize) -> Graph {
    let edges: Vec<(String, String)> = (1..=k)
        .map(|i| (format!("x{i}"), format!("x{}", i % k + 1)))
        .collect();
    Graph::from_parts(Vec::<String>::new(), edges).expect("cycle")
}

/// The path graph on vertices `p1..pk`.
pub fn path(k: usize) -> Graph {
    let edges: Vec<(String, String)> = (1..k)
        .map(|i| (format!("p{i}"), format!("p{}", i + 1)))
        .collect();
    Graph::from_parts(vec!["p1".to_string()], edges).expect("path")
}

/// A star with `k` leaves: center `c`, leaves `l1..lk`.
pub fn star(k: usize) -> Graph {
    let edges: Vec<(String, String)> = (1..=k)
        .map(|i| ("c".to_string(), format!("l{i}")))
        .collect();
    Graph::from_parts(Vec::<String>::new(), edges).expect("star")
}

/// `r` pairwise disjoint edges `u_i v_i`.
pub fn disjoint_edges(r: usize) -> Graph {
    let edges: Vec<(String, String)> = (1..=r)
        .map(|i| (format!("u{i}"), format!("v{i}")))
        .collect();
    Graph::from_parts(Vec::<String>::new(), edges).expect("disjoint edges")
}

/// The cycle `x1..xk` with a whisker `xi - yi` at every cycle vertex.
pub fn whiskered_cycle(k: usize) -> Graph {
    let mut edges: Vec<(String, String)> = (1..=k)
        .map(|i| (format!("x{i}"), format!("x{}", i % k + 1)))
        .collect();
    edges.extend((1..=k).map(|i| (format!("x{i}"), format!("y{i}"))));
    Graph::from_parts(Vec::<String>::new(), edges).expect("whiskered cycle")
}

/// The cycle `x1..xk` with a single whisker `x1 - y1`.
pub fn one_whisker_cycle(k: usize) -> Graph {
    let mut edges: Vec<(String, String)> = (1..=k)
        .map(|i| (format!("x{i}"), format!("x{}", i % k + 1)))
        .collect();
    edges.push(("x1".to_string(), "y1".to_string()));
    Graph::from_parts(Vec::<String>::new(), edges).expect("one-whisker cycle")
}

/// The 5-cycle with a pendant path `x1 - y - z`: the unicyclic graph whose
/// cycle is not dominating (`z` has no cycle neighbor).
pub fn c5_path() -> Graph {
    let mut edges: Vec<(String, String)> = (1..=5)
        .map(|i| (format!("x{i}"), format!("x{}", i % 5 + 1)))
        .collect();
    edges.push(("x1".to_string(), "y".to_string()));
    edges.push(("y".to_string(), "z".to_string()));
    Graph::from_parts(Vec::<String>::new(), edges).expect("c5 path")
}

/// The clique-sum of a triangle and a 5-cycle glued at `x1`: vertices
/// `x1..x7`, the 5-cycle on `x1..x5` and the triangle `x1 x6 x7`.
pub fn clique_sum_c3_c5() -> Graph {
    let edges = [
        ("x1", "x2"),
        ("x2", "x3"),
        ("x3", "x4"),
        ("x4", "x5"),
        ("x5", "x1"),
        ("x1", "x6"),
        ("x6", "x7"),
        ("x7", "x1"),
    ];
    Graph::from_parts(
        Vec::<String>::new(),
        edges
            .iter()
            .map(|&(u, v)| (u.to_string(), v.to_string()))
            .collect::<Vec<_>>(),
    )
    .expect("clique sum")
}

/// The 5-cycle together with one disjoint edge `u v` (disconnected unicyclic).
pub fn c5_plus_edge() -> Graph {
    let mut edges: Vec<(String, String)> = (1..=5)
        .map(|i| (format!("x{i}"), format!("x{}", i % 5 + 1)))
        .collect();
    edges.push(("u".to_string(), "v".to_string()));
    Graph::from_parts(Vec::<String>::new(), edges).expect("c5 plus edge")
}

/// Deterministic random graphs on `min_n..=max_n` vertices named `v1..`,
/// each with at least one edge.
pub fn random_graphs(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(min_n..=max_n);
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if rng.gen_bool(0.4) {
                    edges.push((format!("v{i}"), format!("v{j}")));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        out.push(Graph::from_parts(vertices, edges).expect("random graph"));
    }
    out
}

/// The full shipped corpus, in a fixed order.
pub fn corpus() -> Vec<CorpusGraph> {
    let mut items: Vec<(String, Graph)> = vec![
        ("c3".into(), cycle(3)),
        ("c4".into(), cycle(4)),
        ("c5".into(), cycle(5)),
        ("c6".into(), cycle(6)),
        ("c7".into(), cycle(7)),
        ("c9".into(), cycle(9)),
        ("tree_path4".into(), path(4)),
        ("tree_star3".into(), star(3)),
        ("c3_whisker_full".into(), whiskered_cycle(3)),
        ("c3_whisker_one".into(), one_whisker_cycle(3)),
        ("c5_whisker_full".into(), whiskered_cycle(5)),
        ("c5_whisker_one".into(), one_whisker_cycle(5)),
        ("c5_path".into(), c5_path()),
        ("c5_plus_edge".into(), c5_plus_edge()),
        ("clique_sum_c3_c5".into(), clique_sum_c3_c5()),
    ];
    for (i, g) in random_graphs(CORPUS_SEED, 20, 4, 7).into_iter().enumerate() {
        items.push((format!("rand{:02}", i + 1), g));
    }
    items
        .into_iter()
        .map(|(name, graph)| CorpusGraph { name, graph })
        .collect()
}

/// Corpus graphs that are unicyclic with an odd cycle and a dominating cycle
/// (whiskers only) — the hypothesis class of the dominating-cycle identities.
pub fn dominating_odd_unicyclic() -> Vec<CorpusGraph> {
    corpus()
        .into_iter()
        .filter(|cg| {
            let cs = cg.graph.cycle_structure();
            cs.is_unicyclic
                && cs.dominating
                && cs.cycle.is_some_and(|c| c.len() % 2 == 1)
                && cg.graph.is_connected()
        })
        .collect()
}
