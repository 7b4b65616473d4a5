//! Symbolic powers of edge ideals by independent routes, containment between
//! symbolic and ordinary powers, and the asymptotic invariants derived from
//! the containment grid.
//!
//! The reference oracle intersects prime powers over all minimal vertex
//! covers. Unicyclic graphs with an odd cycle also admit a decomposition into
//! ordinary powers times powers of the cycle monomial; agreement of the two
//! routes is a tested property, not an assumption. Every ratio reported here
//! is an exact rational.

use crate::graph::{Graph, GraphError};
use crate::ideal::{edge_ideal, IdealError, Monomial, MonomialIdeal, VarContext};
use crate::rational::Rational;
use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("graph has no edges")]
    Edgeless,
    #[error("symbolic powers are indexed by positive integers")]
    NonPositivePower,
    #[error("graph has more than one cycle")]
    NotUnicyclic,
    #[error("search bounds must be at least 1")]
    BadBounds,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// How a symbolic power was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SymbolicMethod {
    #[serde(rename = "cover-intersection")]
    CoverIntersection,
    #[serde(rename = "unicyclic-formula")]
    UnicyclicFormula,
    #[serde(rename = "derivation-membership")]
    DerivationMembership,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPowerResult {
    pub ideal: MonomialIdeal,
    pub s: u32,
    pub method: SymbolicMethod,
}

/// The monomial primes of the minimal vertex covers, in cover order.
pub fn cover_primes(g: &Graph) -> Result<Vec<MonomialIdeal>, SymbolicError> {
    let ctx = VarContext::of_graph(g);
    let covers = g.minimal_vertex_covers()?;
    let mut primes = Vec::with_capacity(covers.len());
    for cover in covers {
        let gens = cover
            .iter()
            .map(|name| ctx.var(name).expect("cover vertex is a variable"))
            .collect();
        primes.push(MonomialIdeal::from_gens(ctx.clone(), gens)?);
    }
    Ok(primes)
}

/// Reference oracle: the intersection over all minimal vertex covers of the
/// s-th power of the cover's prime.
pub fn symbolic_power_cover(g: &Graph, s: u32) -> Result<SymbolicPowerResult, SymbolicError> {
    if s == 0 {
        return Err(SymbolicError::NonPositivePower);
    }
    if !g.has_edges() {
        return Err(SymbolicError::Edgeless);
    }
    let primes = cover_primes(g)?;
    let mut acc: Option<MonomialIdeal> = None;
    for p in &primes {
        let ps = p.power(s);
        acc = Some(match acc {
            None => ps,
            Some(a) => a.intersect(&ps)?,
        });
    }
    Ok(SymbolicPowerResult {
        ideal: acc.expect("a graph with an edge has a cover"),
        s,
        method: SymbolicMethod::CoverIntersection,
    })
}

/// Data of the odd cycle a formula-path computation runs on.
struct OddCycle {
    /// Half-length parameter: the cycle has `2n + 1` vertices.
    n: u32,
    /// Product of the cycle variables.
    w: Monomial,
}

fn odd_cycle_data(g: &Graph) -> Result<Option<OddCycle>, SymbolicError> {
    let cs = g.cycle_structure();
    if !cs.is_unicyclic {
        // forests are fine (no cycle at all); two or more cycles are not
        if g.girth().is_some() {
            return Err(SymbolicError::NotUnicyclic);
        }
        return Ok(None);
    }
    let cycle = cs.cycle.expect("unicyclic graph has a cycle");
    if cycle.len().is_multiple_of(2) {
        return Ok(None);
    }
    let ctx = VarContext::of_graph(g);
    let w = ctx
        .monomial(cycle.iter().map(|v| (v.as_str(), 1)))
        .expect("cycle vertices are variables");
    Ok(Some(OddCycle {
        n: ((cycle.len() - 1) / 2) as u32,
        w,
    }))
}

/// Fast path: for a unicyclic graph with odd cycle `C_{2n+1}` the s-th
/// symbolic power decomposes as the sum over `t = 0..=k` of
/// `I^{s - t(n+1)} * w^t` with `k = floor(s / (n+1))` and `w` the cycle
/// monomial. Forests and even-cycle unicyclic graphs are bipartite, where the
/// symbolic power equals the ordinary one.
pub fn symbolic_power_unicyclic(
    g: &Graph,
    s: u32,
) -> Result<SymbolicPowerResult, SymbolicError> {
    if s == 0 {
        return Err(SymbolicError::NonPositivePower);
    }
    if !g.has_edges() {
        return Err(SymbolicError::Edgeless);
    }
    let ideal = match odd_cycle_data(g)? {
        None => edge_ideal(g).power(s),
        Some(oc) => {
            let powers = ordinary_powers(&edge_ideal(g), s);
            odd_cycle_symbolic(&powers, &oc, s)?
        }
    };
    Ok(SymbolicPowerResult {
        ideal,
        s,
        method: SymbolicMethod::UnicyclicFormula,
    })
}

/// `I^0..I^max`, computed once and shared.
fn ordinary_powers(i: &MonomialIdeal, max: u32) -> Vec<MonomialIdeal> {
    let mut powers = Vec::with_capacity(max as usize + 1);
    powers.push(MonomialIdeal::unit(i.ctx().clone()));
    for p in 1..=max {
        let next = powers[(p - 1) as usize]
            .product(i)
            .expect("context is shared");
        powers.push(next);
    }
    powers
}

fn odd_cycle_symbolic(
    powers: &[MonomialIdeal],
    oc: &OddCycle,
    s: u32,
) -> Result<MonomialIdeal, SymbolicError> {
    let step = oc.n + 1;
    let k = s / step;
    let ctx = powers[0].ctx().clone();
    let mut acc = powers[s as usize].clone();
    for t in 1..=k {
        let stratum = powers[(s - t * step) as usize]
            .product(&MonomialIdeal::principal(ctx.clone(), oc.w.pow(t))?)?;
        acc = acc.sum(&stratum)?;
    }
    Ok(acc)
}

/// Symbolic power by the cheapest valid route: the decomposition formula for
/// forests and unicyclic graphs, the cover oracle otherwise.
pub fn symbolic_power(g: &Graph, s: u32) -> Result<SymbolicPowerResult, SymbolicError> {
    match symbolic_power_unicyclic(g, s) {
        Ok(res) => Ok(res),
        Err(SymbolicError::NotUnicyclic) => symbolic_power_cover(g, s),
        Err(e) => Err(e),
    }
}

/// Membership in the s-th symbolic power by the derivation criterion over a
/// field of characteristic zero: `m` belongs iff for every exponent vector
/// `b <= m` with `|b| <= s - 1` the quotient `m / x^b` lies in the edge
/// ideal. Orders that exceed an exponent differentiate the monomial to zero
/// and are vacuous.
pub fn derivation_member(g: &Graph, m: &Monomial, s: u32) -> bool {
    if s == 0 {
        return true;
    }
    let i = edge_ideal(g);
    assert_eq!(m.arity(), i.ctx().len(), "monomial arity mismatch");
    let budget = s - 1;
    let mut b = vec![0u32; m.arity()];
    derivation_scan(&i, m, &mut b, 0, budget)
}

fn derivation_scan(
    i: &MonomialIdeal,
    m: &Monomial,
    b: &mut Vec<u32>,
    pos: usize,
    left: u32,
) -> bool {
    if pos == b.len() {
        let quotient = Monomial::new(
            m.exps()
                .iter()
                .zip(b.iter())
                .map(|(&e, &d)| e - d)
                .collect(),
        );
        return i.contains(&quotient);
    }
    let cap = m.exps()[pos].min(left);
    for d in 0..=cap {
        b[pos] = d;
        if !derivation_scan(i, m, b, pos + 1, left - d) {
            b[pos] = 0;
            return false;
        }
    }
    b[pos] = 0;
    true
}

/// Whether `I^{(s)} ⊆ I^t`, decided by direct generator membership.
pub fn containment(g: &Graph, s: u32, t: u32) -> Result<bool, SymbolicError> {
    if s == 0 || t == 0 {
        return Err(SymbolicError::BadBounds);
    }
    let sym = symbolic_power(g, s)?.ideal;
    let ord = edge_ideal(g).power(t);
    Ok(ord.contains_ideal(&sym)?)
}

/// Exhaustive symbolic-vs-ordinary containment search over a finite grid,
/// with the exact invariants read off it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResurgenceReport {
    pub graph: String,
    pub s_max: u32,
    pub t_max: u32,
    /// Grid points `(s, t)` with `s >= t` and `I^{(s)} ⊄ I^t`, sorted. Points
    /// with `s < t` fail for every graph with an edge (the least generator of
    /// `I^{(s)}` has degree at most `2s < 2t`), so they are not recorded.
    pub violations: Vec<(u32, u32)>,
    /// Largest `s/t` over the violations; `None` when there are none.
    pub max_ratio: Option<Rational>,
    /// `(2n+2)/(2n+1)` for a unicyclic graph with odd cycle `C_{2n+1}`; the
    /// true resurgence, which the finite grid approaches strictly from below.
    pub closed_form: Option<Rational>,
    /// `(s, alpha(I^{(s)}))` for `s = 1..=s_max`.
    pub alpha_table: Vec<(u32, u32)>,
    /// `alpha(I^{(s_max)}) / s_max` — a truncation estimate, not the limit.
    pub waldschmidt_estimate: Rational,
    /// `(2n+1)/(n+1)` in the odd-cycle unicyclic case.
    pub waldschmidt_closed_form: Option<Rational>,
}

pub fn resurgence_search(
    g: &Graph,
    graph_id: &str,
    s_max: u32,
    t_max: u32,
) -> Result<ResurgenceReport, SymbolicError> {
    if s_max == 0 || t_max == 0 {
        return Err(SymbolicError::BadBounds);
    }
    if !g.has_edges() {
        return Err(SymbolicError::Edgeless);
    }
    let i = edge_ideal(g);
    let powers = ordinary_powers(&i, s_max.max(t_max));
    let odd = odd_cycle_data(g);
    let symbolic: Vec<MonomialIdeal> = match odd {
        Ok(Some(ref oc)) => (1..=s_max)
            .map(|s| odd_cycle_symbolic(&powers, oc, s))
            .collect::<Result<_, _>>()?,
        Ok(None) => (1..=s_max).map(|s| Ok(powers[s as usize].clone())).collect::<Result<_, SymbolicError>>()?,
        Err(SymbolicError::NotUnicyclic) => (1..=s_max)
            .map(|s| symbolic_power_cover(g, s).map(|r| r.ideal))
            .collect::<Result<_, _>>()?,
        Err(e) => return Err(e),
    };

    let mut violations = Vec::new();
    for s in 1..=s_max {
        for t in 1..=t_max.min(s) {
            let contained = powers[t as usize].contains_ideal(&symbolic[(s - 1) as usize])?;
            if !contained {
                violations.push((s, t));
            }
        }
    }
    let max_ratio = violations
        .iter()
        .map(|&(s, t)| Rational::new(s as i64, t as i64))
        .max();

    let alpha_table: Vec<(u32, u32)> = (1..=s_max)
        .map(|s| {
            (
                s,
                symbolic[(s - 1) as usize]
                    .alpha()
                    .expect("symbolic power of a nonzero ideal is nonzero"),
            )
        })
        .collect();
    let waldschmidt_estimate = Rational::new(
        alpha_table[(s_max - 1) as usize].1 as i64,
        s_max as i64,
    );

    let (closed_form, waldschmidt_closed_form) = match odd_cycle_data(g) {
        Ok(Some(oc)) => {
            let n = oc.n as i64;
            (
                Some(Rational::new(2 * n + 2, 2 * n + 1)),
                Some(Rational::new(2 * n + 1, n + 1)),
            )
        }
        _ => (None, None),
    };

    Ok(ResurgenceReport {
        graph: graph_id.to_string(),
        s_max,
        t_max,
        violations,
        max_ratio,
        closed_form,
        alpha_table,
        waldschmidt_estimate,
        waldschmidt_closed_form,
    })
}
