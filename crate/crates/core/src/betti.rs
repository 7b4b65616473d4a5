//! Multigraded Betti numbers of monomial ideals via upper-Koszul simplicial
//! complexes and exact simplicial homology, and Castelnuovo–Mumford
//! regularity read off the graded table.
//!
//! For a monomial ideal `I` and a multidegree `α`, the Betti number
//! `β_{i,α}(I)` is the rank of the reduced homology `H̃_{i-1}` of the
//! upper-Koszul complex of `I` at `α`, computed over the rationals. Ranks come
//! from integer boundary matrices by fraction-free (Bareiss) elimination over
//! arbitrary-precision integers, so results are exact. Every multidegree with
//! nonzero homology is an lcm of generators and therefore lies inside the box
//! bounded by the componentwise maximum of the generator exponents; the table
//! is assembled by scanning that box, skipping multidegrees outside the ideal
//! (void complex) and cone complexes (contractible).

use crate::graph::{Graph, GraphError};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::symbolic::{symbolic_power_cover, SymbolicError};
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error("multidegree box has {points} points, over the budget of {cap}")]
    BoxBudget { points: u64, cap: u64 },
    #[error("complex would have up to {faces} faces, over the budget of {cap}")]
    FaceBudget { faces: u64, cap: u64 },
    #[error("Betti numbers of the zero ideal are not defined here")]
    ZeroIdeal,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// Resource caps for the box scan. The defaults accommodate every shipped
/// corpus computation, including `C7` and `C9` at `s = 2`.
#[derive(Debug, Clone, Copy)]
pub struct BettiBudget {
    pub max_box_points: u64,
    pub max_faces: u64,
}

impl Default for BettiBudget {
    fn default() -> Self {
        BettiBudget {
            max_box_points: 5_000_000,
            max_faces: 1 << 16,
        }
    }
}

/// A simplicial complex on a subset of the ambient variables, stored by its
/// facets. Distinguishes the void complex (no faces at all, `facets` empty)
/// from the irrelevant complex `{∅}` (`facets == [0]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    /// Ambient variable indices carrying the complex, sorted.
    vertices: Vec<usize>,
    /// Maximal faces as bitmasks over positions in `vertices`.
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// All faces (downward closure of the facets), sorted.
    pub fn faces(&self) -> Vec<u64> {
        let mut set = std::collections::BTreeSet::new();
        for &f in &self.facets {
            // enumerate submasks
            let mut sub = f;
            loop {
                set.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        set.into_iter().collect()
    }

    /// A vertex lying in every facet makes the complex a cone, hence
    /// contractible with vanishing reduced homology.
    pub fn has_cone_point(&self) -> bool {
        if self.facets.is_empty() {
            return false;
        }
        self.facets.iter().fold(!0u64, |acc, &f| acc & f) != 0
    }
}

/// The upper-Koszul complex of `a` at multidegree `alpha`: the faces are the
/// squarefree divisors `W ⊆ supp(alpha)` with `x^alpha / ∏W ∈ a`. Downward
/// closure is automatic because `a` is an ideal. Void when `x^alpha ∉ a`.
pub fn upper_koszul(a: &MonomialIdeal, alpha: &Monomial) -> SimplicialComplex {
    assert_eq!(alpha.arity(), a.ctx().len(), "multidegree arity mismatch");
    let support = alpha.support();
    assert!(support.len() < 64, "support too wide for mask representation");
    if !a.contains(alpha) {
        return SimplicialComplex {
            vertices: support,
            facets: Vec::new(),
        };
    }
    let k = support.len();
    let mut faces: Vec<u64> = Vec::new();
    for mask in 0..(1u64 << k) {
        let mut exps = alpha.exps().to_vec();
        for (pos, &var) in support.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                exps[var] -= 1;
            }
        }
        if a.contains(&Monomial::new(exps)) {
            faces.push(mask);
        }
    }
    let facets = extract_facets(&faces, k);
    SimplicialComplex {
        vertices: support,
        facets,
    }
}

fn extract_facets(faces: &[u64], width: usize) -> Vec<u64> {
    let set: std::collections::BTreeSet<u64> = faces.iter().copied().collect();
    faces
        .iter()
        .copied()
        .filter(|&f| {
            (0..width).all(|p| f >> p & 1 == 1 || !set.contains(&(f | (1 << p))))
        })
        .collect()
}

/// Ranks of the reduced rational homology, keyed by dimension (including
/// dimension -1); only nonzero ranks are listed. The void complex has none.
pub fn reduced_homology_ranks(k: &SimplicialComplex) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    if k.is_void() {
        return out;
    }
    let faces = k.faces();
    let top = faces
        .iter()
        .map(|f| f.count_ones() as i64 - 1)
        .max()
        .unwrap();
    // faces by dimension, each level sorted for stable column order
    let mut by_dim: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
    for &f in &faces {
        by_dim.entry(f.count_ones() as i64 - 1).or_default().push(f);
    }
    // rank of each boundary map ∂_d : C_d -> C_{d-1}
    let mut boundary_rank: BTreeMap<i64, usize> = BTreeMap::new();
    for d in 0..=top {
        let (lower, upper) = match (by_dim.get(&(d - 1)), by_dim.get(&d)) {
            (Some(l), Some(u)) => (l, u),
            _ => continue,
        };
        let index: BTreeMap<u64, usize> =
            lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut matrix = vec![vec![BigInt::from(0); upper.len()]; lower.len()];
        for (col, &face) in upper.iter().enumerate() {
            let mut sign = BigInt::from(1);
            for p in 0..64 {
                if face >> p & 1 == 0 {
                    continue;
                }
                let sub = face & !(1u64 << p);
                let row = index[&sub];
                matrix[row][col] = sign.clone();
                sign = -sign;
            }
        }
        boundary_rank.insert(d, matrix_rank(matrix));
    }
    for d in -1..=top {
        let n_d = by_dim.get(&d).map_or(0, |v| v.len());
        let r_d = boundary_rank.get(&d).copied().unwrap_or(0);
        let r_up = boundary_rank.get(&(d + 1)).copied().unwrap_or(0);
        let h = n_d - r_d - r_up;
        if h > 0 {
            out.insert(d, h as u64);
        }
    }
    out
}

/// Rank over the rationals of an integer matrix by fraction-free Gaussian
/// elimination with row swaps and column skips; all divisions are exact.
fn matrix_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| m[r][col] != zero) else {
            continue;
        };
        m.swap(row, p);
        for r in (row + 1)..rows {
            for c in (col + 1)..cols {
                let val = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = zero.clone();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// The graded and multigraded Betti table of a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// `(i, j) -> β_{i,j}`; only nonzero entries are stored.
    pub entries: BTreeMap<(u32, u32), u64>,
    /// `(i, α) -> β_{i,α}`; only nonzero entries are stored.
    pub multigraded: BTreeMap<(u32, Vec<u32>), u64>,
    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub regularity: i64,
}

impl BettiTable {
    pub fn beta(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// CSV with header `i,j,beta` and a trailing `# reg=R` comment line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,beta\n");
        for (&(i, j), &b) in &self.entries {
            out.push_str(&format!("{i},{j},{b}\n"));
        }
        out.push_str(&format!("# reg={}\n", self.regularity));
        out
    }

    /// Multigraded entries as JSON records `{"i":…,"alpha":[…],"beta":…}`.
    pub fn multigraded_json(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            i: u32,
            alpha: &'a [u32],
            beta: u64,
        }
        let rows: Vec<Row> = self
            .multigraded
            .iter()
            .map(|(&(i, ref alpha), &beta)| Row {
                i,
                alpha,
                beta,
            })
            .collect();
        serde_json::to_string(&rows).expect("betti serialization")
    }
}

pub fn betti_table(a: &MonomialIdeal, budget: &BettiBudget) -> Result<BettiTable, BettiError> {
    if a.is_zero() {
        return Err(BettiError::ZeroIdeal);
    }
    let nvars = a.ctx().len();
    let mut maxexp = vec![0u32; nvars];
    for g in a.gens() {
        for (i, &e) in g.exps().iter().enumerate() {
            maxexp[i] = maxexp[i].max(e);
        }
    }
    let mut points: u64 = 1;
    for &m in &maxexp {
        points = points.saturating_mul(m as u64 + 1);
    }
    if points > budget.max_box_points {
        return Err(BettiError::BoxBudget {
            points,
            cap: budget.max_box_points,
        });
    }
    let alpha_min = a.alpha().expect("nonzero ideal");

    let mut entries: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    let mut multigraded: BTreeMap<(u32, Vec<u32>), u64> = BTreeMap::new();

    let mut counter = vec![0u32; nvars];
    let mut degree: u32 = 0;
    loop {
        if degree >= alpha_min {
            let alpha = Monomial::new(counter.clone());
            if a.contains(&alpha) {
                let width = alpha.support().len() as u64;
                if width >= 63 || (1u64 << width) > budget.max_faces {
                    return Err(BettiError::FaceBudget {
                        faces: 1u64.checked_shl(width as u32).unwrap_or(u64::MAX),
                        cap: budget.max_faces,
                    });
                }
                let complex = upper_koszul(a, &alpha);
                if !complex.has_cone_point() {
                    for (d, rank) in reduced_homology_ranks(&complex) {
                        let i = (d + 1) as u32;
                        *entries.entry((i, degree)).or_insert(0) += rank;
                        multigraded.insert((i, counter.clone()), rank);
                    }
                }
            }
        }
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == nvars {
                let regularity = entries
                    .keys()
                    .map(|&(i, j)| j as i64 - i as i64)
                    .max()
                    .expect("a nonzero ideal has generators");
                return Ok(BettiTable {
                    entries,
                    multigraded,
                    regularity,
                });
            }
            if counter[pos] < maxexp[pos] {
                counter[pos] += 1;
                degree += 1;
                break;
            }
            degree -= counter[pos];
            counter[pos] = 0;
            pos += 1;
        }
    }
}

pub fn regularity(a: &MonomialIdeal, budget: &BettiBudget) -> Result<i64, BettiError> {
    Ok(betti_table(a, budget)?.regularity)
}

/// Outcome of checking the linear lower bound for the regularity of a
/// symbolic power against the induced matching number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegBoundCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// Computes `reg I^{(s)}` through the cover oracle and compares it with
/// `2s + ν(G) - 1`.
pub fn reg_lower_bound_check(
    g: &Graph,
    s: u32,
    budget: &BettiBudget,
) -> Result<RegBoundCheck, BettiError> {
    let sym = symbolic_power_cover(g, s)?;
    let lhs = regularity(&sym.ideal, budget)?;
    let nu = g.invariants()?.induced_matching_number as i64;
    let rhs = 2 * s as i64 + nu - 1;
    Ok(RegBoundCheck {
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ideal::{edge_ideal, MonomialIdeal, VarContext};

    fn budget() -> BettiBudget {
        BettiBudget::default()
    }

    #[test]
    fn upper_koszul_c3_at_ones() {
        let i = edge_ideal(&corpus::cycle(3));
        let alpha = Monomial::new(vec![1, 1, 1]);
        let k = upper_koszul(&i, &alpha);
        // ∅ and the three singletons are faces; no pair is
        assert_eq!(k.faces(), vec![0b000, 0b001, 0b010, 0b100]);
        let ranks = reduced_homology_ranks(&k);
        assert_eq!(ranks.get(&0), Some(&2));
        assert_eq!(ranks.len(), 1);
    }

    #[test]
    fn upper_koszul_at_minimal_generator_is_irrelevant() {
        let i = edge_ideal(&corpus::cycle(3));
        let gen = i.gens()[0].clone();
        let k = upper_koszul(&i, &gen);
        assert_eq!(k.faces(), vec![0]);
        let ranks = reduced_homology_ranks(&k);
        assert_eq!(ranks.get(&-1), Some(&1));
    }

    #[test]
    fn upper_koszul_outside_ideal_is_void() {
        let i = edge_ideal(&corpus::cycle(3));
        let alpha = Monomial::new(vec![1, 0, 0]);
        let k = upper_koszul(&i, &alpha);
        assert!(k.is_void());
        assert!(reduced_homology_ranks(&k).is_empty());
    }

    #[test]
    fn homology_of_hollow_triangle_is_a_circle() {
        let k = SimplicialComplex {
            vertices: vec![0, 1, 2],
            facets: vec![0b011, 0b101, 0b110],
        };
        let ranks = reduced_homology_ranks(&k);
        assert_eq!(ranks.get(&1), Some(&1));
        assert_eq!(ranks.len(), 1);
    }

    #[test]
    fn homology_of_full_simplex_vanishes() {
        let k = SimplicialComplex {
            vertices: vec![0, 1, 2, 3],
            facets: vec![0b1111],
        };
        assert!(k.has_cone_point());
        assert!(reduced_homology_ranks(&k).is_empty());
    }

    #[test]
    fn betti_of_c3_edge_ideal() {
        let i = edge_ideal(&corpus::cycle(3));
        let t = betti_table(&i, &budget()).unwrap();
        assert_eq!(t.beta(0, 2), 3);
        assert_eq!(t.beta(1, 3), 2);
        assert_eq!(t.entries.len(), 2);
        assert_eq!(t.regularity, 2);
    }

    #[test]
    fn betti_of_principal_ideal() {
        let ctx = VarContext::new(["x", "y"]).unwrap();
        let i = MonomialIdeal::principal(ctx, Monomial::new(vec![2, 3])).unwrap();
        let t = betti_table(&i, &budget()).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.beta(0, 5), 1);
        assert_eq!(t.regularity, 5);
    }

    #[test]
    fn betti_zero_ideal_is_an_error() {
        let ctx = VarContext::new(["x"]).unwrap();
        let z = MonomialIdeal::zero(ctx);
        assert!(matches!(
            betti_table(&z, &budget()),
            Err(BettiError::ZeroIdeal)
        ));
    }

    #[test]
    fn box_budget_is_enforced() {
        let i = edge_ideal(&corpus::cycle(5)).power(3);
        let tiny = BettiBudget {
            max_box_points: 10,
            max_faces: 1 << 16,
        };
        assert!(matches!(
            betti_table(&i, &tiny),
            Err(BettiError::BoxBudget { .. })
        ));
    }

    #[test]
    fn regularity_of_c5_edge_ideal() {
        let i = edge_ideal(&corpus::cycle(5));
        assert_eq!(regularity(&i, &budget()).unwrap(), 3);
    }

    #[test]
    fn regularity_of_complete_intersection_powers() {
        // r disjoint edges: reg I^s = 2s + r - 1
        for r in 1..=2u32 {
            let i = edge_ideal(&corpus::disjoint_edges(r as usize));
            for s in 1..=2u32 {
                assert_eq!(
                    regularity(&i.power(s), &budget()).unwrap(),
                    2 * s as i64 + r as i64 - 1
                );
            }
        }
    }

    #[test]
    fn reg_lower_bound_examples() {
        let c5 = corpus::cycle(5);
        let chk = reg_lower_bound_check(&c5, 2, &budget()).unwrap();
        assert_eq!((chk.lhs, chk.rhs, chk.holds), (4, 4, true));

        let two_edges = corpus::disjoint_edges(2);
        let chk = reg_lower_bound_check(&two_edges, 3, &budget()).unwrap();
        assert_eq!((chk.lhs, chk.rhs, chk.holds), (7, 7, true));
    }

    #[test]
    fn csv_format() {
        let i = edge_ideal(&corpus::cycle(3));
        let t = betti_table(&i, &budget()).unwrap();
        assert_eq!(t.to_csv(), "i,j,beta\n0,2,3\n1,3,2\n# reg=2\n");
    }

    #[test]
    fn beta_zero_counts_minimal_generators_by_degree() {
        let i = edge_ideal(&corpus::c5_path());
        let sym = crate::symbolic::symbolic_power(&corpus::cycle(5), 3)
            .unwrap()
            .ideal;
        for ideal in [&i, &sym] {
            let t = betti_table(ideal, &budget()).unwrap();
            let mut by_degree: BTreeMap<u32, u64> = BTreeMap::new();
            for g in ideal.gens() {
                *by_degree.entry(g.degree()).or_insert(0) += 1;
            }
            for (&j, &count) in &by_degree {
                assert_eq!(t.beta(0, j), count);
            }
            let total: u64 = t
                .entries
                .iter()
                .filter(|(&(i0, _), _)| i0 == 0)
                .map(|(_, &b)| b)
                .sum();
            assert_eq!(total, ideal.num_gens() as u64);
        }
    }
}
