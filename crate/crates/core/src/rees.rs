//! Degree-truncated discovery of minimal algebra generators of the symbolic
//! Rees algebra of an edge ideal.
//!
//! Working degree by degree, the degree-b component of the subalgebra spanned
//! by the generators found so far is the ideal generated by all products of
//! found generators whose t-degrees sum to b. A minimal generator of the
//! b-th symbolic power that is not in that product ideal is a new algebra
//! generator. Output is always labelled "up to max_degree": finite generation
//! holds but no global degree bound is computed here.

use crate::graph::Graph;
use crate::ideal::{edge_ideal, IdealError, Monomial, MonomialIdeal, VarContext};
use crate::symbolic::{symbolic_power, SymbolicError};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReesError {
    #[error("graph has no edges")]
    Edgeless,
    #[error("max_degree must be at least 1")]
    BadDegree,
    #[error("symbolic power at degree {degree} has {gens} generators, over the budget of {cap}")]
    Budget { degree: u32, gens: usize, cap: usize },
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Cap on intermediate ideal sizes during the degree-by-degree search.
pub const DEFAULT_GENERATOR_BUDGET: usize = 200_000;

/// Minimal algebra generators of the symbolic Rees algebra, stratified by
/// t-degree, discovered up to `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesGeneratorSet {
    pub max_degree: u32,
    pub variables: VarContext,
    /// t-degree -> new generators at that degree; degrees with no new
    /// generators are present with an empty list.
    pub strata: BTreeMap<u32, Vec<Monomial>>,
}

impl ReesGeneratorSet {
    /// All discovered generators squarefree — the implosive property,
    /// verified only up to the truncation bound.
    pub fn implosive_up_to_bound(&self) -> bool {
        self.strata
            .values()
            .flatten()
            .all(|m| m.is_squarefree())
    }

    /// Generators at a given t-degree.
    pub fn stratum(&self, degree: u32) -> &[Monomial] {
        self.strata
            .get(&degree)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// Degrees carrying at least one new generator.
    pub fn populated_degrees(&self) -> Vec<u32> {
        self.strata
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(&d, _)| d)
            .collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Dto<'a> {
            max_degree: u32,
            variables: &'a [String],
            strata: BTreeMap<String, Vec<Vec<u32>>>,
            implosive_up_to_max_degree: bool,
        }
        let strata = self
            .strata
            .iter()
            .map(|(&d, gens)| {
                (
                    d.to_string(),
                    gens.iter().map(|m| m.exps().to_vec()).collect(),
                )
            })
            .collect();
        serde_json::to_string(&Dto {
            max_degree: self.max_degree,
            variables: self.variables.names(),
            strata,
            implosive_up_to_max_degree: self.implosive_up_to_bound(),
        })
        .expect("rees serialization")
    }
}

/// Default truncation bound: twice the girth plus one for graphs with a
/// cycle, 3 for forests.
pub fn default_max_degree(g: &Graph) -> u32 {
    match g.girth() {
        Some(girth) => 2 * girth as u32 + 1,
        None => 3,
    }
}

pub fn rees_generators(
    g: &Graph,
    max_degree: u32,
    generator_budget: usize,
) -> Result<ReesGeneratorSet, ReesError> {
    if !g.has_edges() {
        return Err(ReesError::Edgeless);
    }
    if max_degree == 0 {
        return Err(ReesError::BadDegree);
    }
    let ctx = VarContext::of_graph(g);
    let edges = edge_ideal(g);

    let mut strata: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    strata.insert(1, edges.gens().to_vec());
    // components[b] = degree-b piece of the subalgebra generated so far
    let mut components: Vec<MonomialIdeal> = vec![MonomialIdeal::unit(ctx.clone()), edges];

    for b in 2..=max_degree {
        let target = symbolic_power(g, b)?.ideal;
        if target.num_gens() > generator_budget {
            return Err(ReesError::Budget {
                degree: b,
                gens: target.num_gens(),
                cap: generator_budget,
            });
        }
        let mut products = MonomialIdeal::zero(ctx.clone());
        for p in 1..=(b / 2) {
            let q = b - p;
            products = products.sum(&components[p as usize].product(&components[q as usize])?)?;
        }
        let fresh: Vec<Monomial> = target
            .gens()
            .iter()
            .filter(|m| !products.contains(m))
            .cloned()
            .collect();
        components.push(target);
        strata.insert(b, fresh);
    }

    Ok(ReesGeneratorSet {
        max_degree,
        variables: ctx,
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::Graph;
    use crate::ideal::edge_ideal;
    use crate::symbolic::symbolic_power_cover;

    #[test]
    fn single_edge_generates_in_degree_one_only() {
        let g = Graph::parse("u v").unwrap();
        let set = rees_generators(&g, 5, DEFAULT_GENERATOR_BUDGET).unwrap();
        assert_eq!(set.populated_degrees(), vec![1]);
        assert!(set.implosive_up_to_bound());
    }

    #[test]
    fn c5_generates_in_degrees_one_and_three() {
        let g = corpus::cycle(5);
        let set = rees_generators(&g, 6, DEFAULT_GENERATOR_BUDGET).unwrap();
        assert_eq!(set.populated_degrees(), vec![1, 3]);
        assert_eq!(set.stratum(1).len(), 5);
        let cycle_monomial = Monomial::new(vec![1, 1, 1, 1, 1]);
        assert_eq!(set.stratum(3), &[cycle_monomial]);
        assert!(set.implosive_up_to_bound());
    }

    #[test]
    fn degree_one_stratum_is_the_edge_ideal() {
        for g in [corpus::cycle(7), corpus::c5_path(), corpus::clique_sum_c3_c5()] {
            let set = rees_generators(&g, 2, DEFAULT_GENERATOR_BUDGET).unwrap();
            assert_eq!(set.stratum(1), edge_ideal(&g).gens());
        }
    }

    #[test]
    fn reconstruction_matches_cover_oracle_on_c5() {
        let g = corpus::cycle(5);
        let set = rees_generators(&g, 6, DEFAULT_GENERATOR_BUDGET).unwrap();
        let ctx = set.variables.clone();
        // rebuild components from the discovered strata only
        let mut comps: Vec<MonomialIdeal> = vec![MonomialIdeal::unit(ctx.clone())];
        for b in 1..=6u32 {
            let mut acc = MonomialIdeal::from_gens(ctx.clone(), set.stratum(b).to_vec()).unwrap();
            for p in 1..=(b / 2) {
                acc = acc
                    .sum(&comps[p as usize].product(&comps[(b - p) as usize]).unwrap())
                    .unwrap();
            }
            comps.push(acc);
        }
        for s in 1..=6u32 {
            assert_eq!(
                comps[s as usize],
                symbolic_power_cover(&g, s).unwrap().ideal,
                "degree {s}"
            );
        }
    }

    #[test]
    fn wheel_five_is_not_implosive() {
        // C5 plus a hub adjacent to every cycle vertex: the minimal covers
        // are the 5-cycle itself and the ten {3 cycle vertices + hub} sets,
        // so hub^2 * x1..x5 lies in the 5th symbolic power but in no product
        // of lower-degree generators.
        let edges = [
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "x5"),
            ("x5", "x1"),
            ("h", "x1"),
            ("h", "x2"),
            ("h", "x3"),
            ("h", "x4"),
            ("h", "x5"),
        ];
        let g = Graph::from_parts(
            Vec::<String>::new(),
            edges
                .iter()
                .map(|&(u, v)| (u.to_string(), v.to_string()))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let set = rees_generators(&g, 5, DEFAULT_GENERATOR_BUDGET).unwrap();
        assert!(!set.implosive_up_to_bound());
        assert_eq!(set.stratum(5), &[Monomial::new(vec![2, 1, 1, 1, 1, 1])]);
    }

    #[test]
    fn rejects_edgeless_and_zero_bound() {
        let g = Graph::parse("vertex a").unwrap();
        assert_eq!(
            rees_generators(&g, 3, DEFAULT_GENERATOR_BUDGET).unwrap_err(),
            ReesError::Edgeless
        );
        let c3 = corpus::cycle(3);
        assert_eq!(
            rees_generators(&c3, 0, DEFAULT_GENERATOR_BUDGET).unwrap_err(),
            ReesError::BadDegree
        );
    }

    #[test]
    fn budget_is_enforced() {
        let g = corpus::cycle(5);
        assert!(matches!(
            rees_generators(&g, 4, 10).unwrap_err(),
            ReesError::Budget { .. }
        ));
    }

    #[test]
    fn default_bound_tracks_girth() {
        assert_eq!(default_max_degree(&corpus::cycle(5)), 11);
        assert_eq!(default_max_degree(&corpus::clique_sum_c3_c5()), 7);
        assert_eq!(default_max_degree(&corpus::path(4)), 3);
    }

    #[test]
    fn json_shape() {
        let g = Graph::parse("u v").unwrap();
        let set = rees_generators(&g, 2, DEFAULT_GENERATOR_BUDGET).unwrap();
        let json = set.to_json();
        assert!(json.contains("\"max_degree\":2"));
        assert!(json.contains("\"strata\""));
        assert!(json.contains("\"implosive_up_to_max_degree\":true"));
    }
}
