//! Exact computation with edge ideals of finite simple graphs: symbolic and
//! ordinary powers, Castelnuovo–Mumford regularity via multigraded Betti
//! tables, asymptotic invariants (Waldschmidt constant, resurgence frontier),
//! degree-truncated symbolic Rees algebra generators, and a battery of named
//! verification suites over a shipped graph corpus.
//!
//! Everything is computed exactly — integer exponent vectors, exact rational
//! ratios, and simplicial homology ranks over the rationals via fraction-free
//! integer elimination. There is no floating point in any computational path.

pub mod betti;
pub mod cli;
pub mod corpus;
pub mod graph;
pub mod ideal;
pub mod rational;
pub mod rees;
pub mod symbolic;
pub mod verify;

pub use betti::{
    betti_table, reduced_homology_ranks, reg_lower_bound_check, regularity, upper_koszul,
    BettiBudget, BettiError, BettiTable, RegBoundCheck, SimplicialComplex,
};
pub use graph::{
    CycleStructure, DecompositionWitness, Graph, GraphError, GraphInvariants, DEFAULT_VERTEX_CAP,
};
pub use ideal::{
    edge_ideal, maximal_ideal, minimalize, IdealError, Monomial, MonomialIdeal, VarContext,
};
pub use rational::Rational;
pub use rees::{rees_generators, ReesError, ReesGeneratorSet};
pub use symbolic::{
    containment, derivation_member, resurgence_search, symbolic_power, symbolic_power_cover,
    symbolic_power_unicyclic, ResurgenceReport, SymbolicError, SymbolicMethod,
    SymbolicPowerResult,
};
pub use verify::{SuiteCase, SuiteReport};
