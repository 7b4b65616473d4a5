//! Named verification suites: each binds a family of algebraic identities, or
//! a counterexample, to executable checks over the shipped corpus. Every case
//! recomputes both sides from scratch through public operations; reports are
//! deterministic byte-for-byte for a fixed corpus and budget (wall time is
//! tracked but excluded from serialization).

use crate::betti::{regularity, BettiBudget};
use crate::corpus::{self, CorpusGraph, CORPUS_SEED};
use crate::graph::Graph;
use crate::ideal::{edge_ideal, maximal_ideal, Monomial, MonomialIdeal, VarContext};
use crate::symbolic::{symbolic_power, symbolic_power_cover, symbolic_power_unicyclic};
use serde::Serialize;
use std::time::{Duration, Instant};

const BRIEF: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteCase {
    pub instance: String,
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub cases: Vec<SuiteCase>,
    #[serde(skip)]
    pub wall: Duration,
}

impl SuiteReport {
    fn assemble(suite: &str, cases: Vec<SuiteCase>, started: Instant) -> SuiteReport {
        SuiteReport {
            schema: 1,
            suite: suite.to_string(),
            seed: CORPUS_SEED,
            passed: cases.iter().all(|c| c.pass),
            cases,
            wall: started.elapsed(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("suite report serialization")
    }
}

fn equality_case(
    instance: &str,
    claim: &str,
    lhs: &MonomialIdeal,
    rhs: &MonomialIdeal,
) -> SuiteCase {
    SuiteCase {
        instance: instance.to_string(),
        claim: claim.to_string(),
        lhs: lhs.brief(BRIEF),
        rhs: rhs.brief(BRIEF),
        pass: lhs == rhs,
    }
}

/// Cycle data `(n, w)` for a unicyclic graph with odd cycle `C_{2n+1}`.
fn odd_cycle_info(g: &Graph) -> Option<(u32, Monomial)> {
    let cs = g.cycle_structure();
    let cycle = cs.cycle.filter(|c| c.len() % 2 == 1)?;
    let ctx = VarContext::of_graph(g);
    let w = ctx
        .monomial(cycle.iter().map(|v| (v.as_str(), 1)))
        .expect("cycle vertices are variables");
    Some((((cycle.len() - 1) / 2) as u32, w))
}

/// Decomposition formula vs the cover-intersection oracle on every unicyclic
/// corpus graph.
pub fn suite_decomposition() -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    for CorpusGraph { name, graph } in corpus::corpus() {
        let cs = graph.cycle_structure();
        if !cs.is_unicyclic {
            continue;
        }
        let s_top = match &cs.cycle {
            Some(c) if c.len() % 2 == 1 => {
                let n = (c.len() as u32 - 1) / 2;
                // big instances get the first symbolic degree only
                if c.len() >= 9 || graph.vertex_count() > 10 {
                    n + 1
                } else {
                    2 * (n + 1) + 1
                }
            }
            _ => 4,
        };
        for s in 1..=s_top {
            let formula = symbolic_power_unicyclic(&graph, s).expect("unicyclic input");
            let oracle = symbolic_power_cover(&graph, s).expect("graph has an edge");
            cases.push(equality_case(
                &format!("{name}, s={s}"),
                "decomposition formula = cover oracle",
                &formula.ideal,
                &oracle.ideal,
            ));
        }
    }
    SuiteReport::assemble("decomposition", cases, started)
}

/// `I^{k(n+1)} : w^k = m^k` on dominating-cycle graphs, plus the
/// counterexample on the pendant-path graph.
pub fn suite_colon_w() -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    for CorpusGraph { name, graph } in corpus::dominating_odd_unicyclic() {
        if name.starts_with("rand") {
            continue;
        }
        let (n, w) = odd_cycle_info(&graph).expect("dominating family");
        let i = edge_ideal(&graph);
        let m = maximal_ideal(i.ctx());
        for k in 1..=2 {
            let lhs = i.power(k * (n + 1)).colon(&w.pow(k)).expect("colon");
            let rhs = m.power(k);
            cases.push(equality_case(
                &format!("{name}, k={k}"),
                &format!("I^{} : w^{k} = m^{k}", k * (n + 1)),
                &lhs,
                &rhs,
            ));
        }
    }
    // counterexample: the 5-cycle with pendant path, k = 2
    {
        let graph = corpus::c5_path();
        let i = edge_ideal(&graph);
        let ctx = i.ctx().clone();
        let (_, w) = odd_cycle_info(&graph).expect("odd cycle");
        let lhs = i.power(6).colon(&w.pow(2)).expect("colon");
        let m2 = maximal_ideal(&ctx).power(2);
        let z2 = ctx.monomial([("z", 2)]).expect("z is a variable");
        let pass = lhs != m2 && m2.contains(&z2) && !lhs.contains(&z2);
        cases.push(SuiteCase {
            instance: "c5_path, k=2".to_string(),
            claim: "I^6 : w^2 differs from m^2, witnessed by z^2".to_string(),
            lhs: lhs.brief(BRIEF),
            rhs: m2.brief(BRIEF),
            pass,
        });
    }
    SuiteReport::assemble("colon-w", cases, started)
}

/// The two colon identities for `I^s : I^{(s)}`, plus the counterexample.
pub fn suite_colon_symbolic() -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();

    // fringe formula at s = n + 1 on connected unicyclic graphs
    for CorpusGraph { name, graph } in corpus::corpus() {
        if name.starts_with("rand") {
            continue;
        }
        let cs = graph.cycle_structure();
        if !cs.is_unicyclic || !graph.is_connected() {
            continue;
        }
        let Some((n, _)) = odd_cycle_info(&graph) else {
            continue;
        };
        let i = edge_ideal(&graph);
        let ctx = i.ctx().clone();
        let sym = symbolic_power(&graph, n + 1).expect("unicyclic").ideal;
        let lhs = i.power(n + 1).colon_ideal(&sym).expect("colon ideal");

        let cycle: Vec<String> = cs.cycle.clone().expect("unicyclic");
        let fringe = graph.tree_fringe().expect("connected unicyclic");
        let mut gens: Vec<Monomial> = cycle
            .iter()
            .chain(fringe.iter())
            .map(|v| ctx.var(v).expect("vertex is a variable"))
            .collect();
        let cycle_set: std::collections::BTreeSet<&str> =
            cycle.iter().map(|s| s.as_str()).collect();
        for (u, v) in graph.edge_names() {
            let on_cycle = cycle_set.contains(u) && cycle_set.contains(v);
            let touches_fringe = fringe.contains(u) || fringe.contains(v);
            if !on_cycle && !touches_fringe {
                gens.push(ctx.monomial([(u, 1), (v, 1)]).expect("edge"));
            }
        }
        let rhs = MonomialIdeal::from_gens(ctx, gens).expect("formula ideal");
        cases.push(equality_case(
            &format!("{name}, s={}", n + 1),
            "I^(n+1) : I^((n+1)) = cycle variables + fringe + far forest edges",
            &lhs,
            &rhs,
        ));
    }

    // power formula on the dominating family
    for CorpusGraph { name, graph } in corpus::dominating_odd_unicyclic() {
        if name.starts_with("rand") {
            continue;
        }
        let (n, _) = odd_cycle_info(&graph).expect("dominating family");
        let i = edge_ideal(&graph);
        let m = maximal_ideal(i.ctx());
        for s in (n + 1)..=(n + 3) {
            let k = s / (n + 1);
            let sym = symbolic_power(&graph, s).expect("unicyclic").ideal;
            let lhs = i.power(s).colon_ideal(&sym).expect("colon ideal");
            let rhs = m.power(k);
            cases.push(equality_case(
                &format!("{name}, s={s}"),
                &format!("I^{s} : I^(({s})) = m^{k}"),
                &lhs,
                &rhs,
            ));
        }
    }

    // counterexample: pendant-path graph at s = 3 stops short of m
    {
        let graph = corpus::c5_path();
        let i = edge_ideal(&graph);
        let ctx = i.ctx().clone();
        let sym = symbolic_power(&graph, 3).expect("unicyclic").ideal;
        let lhs = i.power(3).colon_ideal(&sym).expect("colon ideal");
        let expect = MonomialIdeal::from_gens(
            ctx.clone(),
            ["x1", "x2", "x3", "x4", "x5", "y"]
                .iter()
                .map(|v| ctx.var(v).expect("variable"))
                .collect(),
        )
        .expect("expected colon");
        let pass = lhs == expect && lhs != maximal_ideal(&ctx);
        cases.push(SuiteCase {
            instance: "c5_path, s=3".to_string(),
            claim: "I^3 : I^((3)) = (x1..x5, y), a proper subideal of m".to_string(),
            lhs: lhs.brief(BRIEF),
            rhs: expect.brief(BRIEF),
            pass,
        });
    }
    SuiteReport::assemble("colon-symbolic", cases, started)
}

/// `I^s = I^{(s)} ∩ m^{2s}` on dominating-cycle graphs, plus the witness
/// failure on the pendant-path graph.
pub fn suite_intersection_m2s() -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    for CorpusGraph { name, graph } in corpus::dominating_odd_unicyclic() {
        if name.starts_with("rand") {
            continue;
        }
        let (n, _) = odd_cycle_info(&graph).expect("dominating family");
        let i = edge_ideal(&graph);
        let m = maximal_ideal(i.ctx());
        for s in (n + 1)..=(n + 3) {
            let sym = symbolic_power(&graph, s).expect("unicyclic").ideal;
            let lhs = i.power(s);
            let rhs = sym.intersect(&m.power(2 * s)).expect("intersection");
            cases.push(equality_case(
                &format!("{name}, s={s}"),
                &format!("I^{s} = I^(({s})) ∩ m^{}", 2 * s),
                &lhs,
                &rhs,
            ));
        }
    }
    // counterexample: w*z lies in I^((3)) ∩ m^6 but not in I^3
    {
        let graph = corpus::c5_path();
        let i = edge_ideal(&graph);
        let ctx = i.ctx().clone();
        let m = maximal_ideal(&ctx);
        let sym = symbolic_power(&graph, 3).expect("unicyclic").ideal;
        let witness = ctx
            .monomial([("x1", 1), ("x2", 1), ("x3", 1), ("x4", 1), ("x5", 1), ("z", 1)])
            .expect("witness monomial");
        let meet = sym.intersect(&m.power(6)).expect("intersection");
        let cube = i.power(3);
        let pass = meet.contains(&witness) && !cube.contains(&witness) && meet != cube;
        cases.push(SuiteCase {
            instance: "c5_path, s=3".to_string(),
            claim: "x1*x2*x3*x4*x5*z ∈ I^((3)) ∩ m^6 but ∉ I^3".to_string(),
            lhs: cube.brief(BRIEF),
            rhs: meet.brief(BRIEF),
            pass,
        });
    }
    SuiteReport::assemble("intersection-m2s", cases, started)
}

/// `reg I^{(s)} = reg I^s = 2s + ν - 1` on odd cycles and whiskered odd
/// cycles, both regularities computed independently through the Betti table.
pub fn suite_regularity(budget: &BettiBudget) -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    let picks: &[(&str, &[u32])] = &[
        ("c3", &[2, 3, 4]),
        ("c5", &[2, 3]),
        ("c7", &[2]),
        ("c3_whisker_one", &[2]),
        ("c5_whisker_one", &[2]),
    ];
    let all = corpus::corpus();
    for &(name, degrees) in picks {
        let graph = &all
            .iter()
            .find(|cg| cg.name == name)
            .expect("corpus member")
            .graph;
        let nu = graph
            .invariants()
            .expect("small graph")
            .induced_matching_number as i64;
        let i = edge_ideal(graph);
        for &s in degrees {
            let sym = symbolic_power(graph, s).expect("unicyclic").ideal;
            let case = match (regularity(&sym, budget), regularity(&i.power(s), budget)) {
                (Ok(reg_sym), Ok(reg_ord)) => {
                    let closed = 2 * s as i64 + nu - 1;
                    SuiteCase {
                        instance: format!("{name}, s={s}"),
                        claim: format!("reg I^(({s})) = reg I^{s} = 2s + ν - 1 = {closed}"),
                        lhs: reg_sym.to_string(),
                        rhs: format!("{reg_ord} (ordinary), {closed} (closed form)"),
                        pass: reg_sym == reg_ord && reg_sym == closed,
                    }
                }
                (e1, e2) => SuiteCase {
                    instance: format!("{name}, s={s}"),
                    claim: "regularity computable within budget".to_string(),
                    lhs: format!("{e1:?}"),
                    rhs: format!("{e2:?}"),
                    pass: false,
                },
            };
            cases.push(case);
        }
    }
    SuiteReport::assemble("regularity", cases, started)
}

/// `I^s ∩ J = w m I^{s-(n+1)}` with `J` the positive strata of the
/// decomposition, on odd cycles and dominating-cycle graphs.
pub fn suite_lemma_isj() -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    for CorpusGraph { name, graph } in corpus::dominating_odd_unicyclic() {
        if name.starts_with("rand") {
            continue;
        }
        let (n, w) = odd_cycle_info(&graph).expect("dominating family");
        let i = edge_ideal(&graph);
        let ctx = i.ctx().clone();
        let m = maximal_ideal(&ctx);
        for s in (n + 1)..=(2 * (n + 1)) {
            let k = s / (n + 1);
            let mut j = MonomialIdeal::zero(ctx.clone());
            for t in 1..=k {
                let stratum = i
                    .power(s - t * (n + 1))
                    .product(
                        &MonomialIdeal::principal(ctx.clone(), w.pow(t)).expect("principal"),
                    )
                    .expect("product");
                j = j.sum(&stratum).expect("sum");
            }
            let lhs = i.power(s).intersect(&j).expect("intersection");
            let rhs = MonomialIdeal::principal(ctx.clone(), w.clone())
                .expect("principal")
                .product(&m)
                .expect("product")
                .product(&i.power(s - (n + 1)))
                .expect("product");
            cases.push(equality_case(
                &format!("{name}, s={s}"),
                &format!("I^{s} ∩ J = w·m·I^{}", s - (n + 1)),
                &lhs,
                &rhs,
            ));
        }
    }
    SuiteReport::assemble("lemma-isj", cases, started)
}

pub const SUITE_NAMES: [&str; 6] = [
    "decomposition",
    "colon-w",
    "colon-symbolic",
    "intersection-m2s",
    "regularity",
    "lemma-isj",
];

pub fn suite_by_name(name: &str, budget: &BettiBudget) -> Option<SuiteReport> {
    match name {
        "decomposition" => Some(suite_decomposition()),
        "colon-w" => Some(suite_colon_w()),
        "colon-symbolic" => Some(suite_colon_symbolic()),
        "intersection-m2s" => Some(suite_intersection_m2s()),
        "regularity" => Some(suite_regularity(budget)),
        "lemma-isj" => Some(suite_lemma_isj()),
        _ => None,
    }
}

pub fn all_suites(budget: &BettiBudget) -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|n| suite_by_name(n, budget).expect("known suite"))
        .collect()
}
