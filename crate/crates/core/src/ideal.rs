//! Monomials and monomial ideals over a fixed ordered variable list.
//!
//! Ideals are represented by their minimal generating set, kept canonical:
//! divisibility-minimal and sorted lexicographically by exponent vector. All
//! operations (sum, product, power, intersection, colon, containment) close
//! over this representation exactly. Exponent arithmetic is checked, so an
//! overflow aborts loudly instead of corrupting results.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("variable contexts differ")]
    ContextMismatch,
    #[error("monomial has {got} exponents, expected {expected}")]
    WrongArity { got: usize, expected: usize },
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable `{0}` missing from target context")]
    MissingVariable(String),
    #[error("invalid ideal JSON: {0}")]
    Json(String),
}

/// An ordered list of variable names shared by the monomials of an ideal.
#[derive(Debug, Clone, Eq)]
pub struct VarContext {
    names: Arc<Vec<String>>,
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl VarContext {
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(
        names: I,
    ) -> Result<VarContext, IdealError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(IdealError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarContext {
            names: Arc::new(names),
        })
    }

    /// Variables of a graph's polynomial ring, in the canonical vertex order.
    pub fn of_graph(g: &Graph) -> VarContext {
        VarContext {
            names: Arc::new(g.vertices().to_vec()),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The monomial `x_i`.
    pub fn var(&self, name: &str) -> Option<Monomial> {
        self.index_of(name).map(|i| {
            let mut e = vec![0; self.len()];
            e[i] = 1;
            Monomial::new(e)
        })
    }

    /// Builds a monomial from `(name, exponent)` pairs.
    pub fn monomial<'a, I: IntoIterator<Item = (&'a str, u32)>>(
        &self,
        parts: I,
    ) -> Result<Monomial, IdealError> {
        let mut e = vec![0u32; self.len()];
        for (name, k) in parts {
            match self.index_of(name) {
                Some(i) => e[i] += k,
                None => return Err(IdealError::MissingVariable(name.to_string())),
            }
        }
        Ok(Monomial::new(e))
    }
}

/// A monomial as an exponent vector over the ambient variable list, with the
/// total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflow");
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variable positions with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Support as a bitmask; only valid below 64 variables.
    fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate().take(64) {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial::new(exps)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial::new(exps)
    }

    /// `self / other`, which must divide exactly.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Monomial::new(exps)
    }

    /// `self / gcd(self, other)` — the colon quotient.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Monomial::new(exps)
    }

    /// Renders the monomial against variable names, e.g. `x1*x2^2`.
    pub fn render(&self, ctx: &VarContext) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ctx.names()[i].clone()),
                _ => parts.push(format!("{}^{}", ctx.names()[i], e)),
            }
        }
        parts.join("*")
    }
}

/// A monomial ideal in canonical form: a divisibility-minimal generating set
/// sorted lexicographically by exponent vector. The zero ideal has no
/// generators; the unit ideal is generated by 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: VarContext,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset of a monomial set, canonically sorted.
/// Idempotent.
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut gens = gens;
    gens.sort_unstable_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.cmp(b)));
    gens.dedup();
    // equal-degree distinct monomials never divide one another, so only
    // strictly smaller degrees can knock a candidate out
    let mut kept: Vec<Monomial> = Vec::new();
    let mut kept_masks: Vec<u64> = Vec::new();
    let mut cut = 0; // number of kept gens with degree < current degree
    let mut cur_degree = u32::MAX;
    for g in gens {
        if g.degree != cur_degree {
            cur_degree = g.degree;
            cut = kept.len();
        }
        let gm = g.support_mask();
        let dominated = kept[..cut]
            .iter()
            .zip(&kept_masks[..cut])
            .any(|(k, &km)| km & !gm == 0 && k.divides(&g));
        if !dominated {
            kept_masks.push(gm);
            kept.push(g);
        }
    }
    kept.sort_unstable();
    kept
}

impl MonomialIdeal {
    pub fn zero(ctx: VarContext) -> MonomialIdeal {
        MonomialIdeal {
            ctx,
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: VarContext) -> MonomialIdeal {
        let one = Monomial::one(ctx.len());
        MonomialIdeal {
            ctx,
            gens: vec![one],
        }
    }

    /// Canonicalizing constructor: minimalizes and sorts the generators.
    pub fn from_gens(ctx: VarContext, gens: Vec<Monomial>) -> Result<MonomialIdeal, IdealError> {
        for g in &gens {
            if g.arity() != ctx.len() {
                return Err(IdealError::WrongArity {
                    got: g.arity(),
                    expected: ctx.len(),
                });
            }
        }
        Ok(MonomialIdeal {
            ctx,
            gens: minimalize(gens),
        })
    }

    /// Principal ideal `(m)`.
    pub fn principal(ctx: VarContext, m: Monomial) -> Result<MonomialIdeal, IdealError> {
        MonomialIdeal::from_gens(ctx, vec![m])
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_ctx(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(IdealError::ContextMismatch)
        }
    }

    /// Least generating degree. Errors on the zero ideal.
    pub fn alpha(&self) -> Result<u32, IdealError> {
        self.gens
            .iter()
            .map(|g| g.degree())
            .min()
            .ok_or(IdealError::ZeroIdeal)
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.arity(), self.ctx.len(), "monomial arity mismatch");
        let mm = m.support_mask();
        self.gens
            .iter()
            .any(|g| g.support_mask() & !mm == 0 && g.divides(m))
    }

    /// Ideal containment `other ⊆ self`: every generator of `other` is a
    /// member of `self`. The zero ideal is contained in everything.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool, IdealError> {
        self.check_ctx(other)?;
        Ok(other.gens.iter().all(|g| self.contains(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ctx(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimalize(gens),
        })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ctx(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len().max(1));
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimalize(gens),
        })
    }

    /// `self^s`, with `self^0` the unit ideal. Iterated product with
    /// minimalization at each step; powers of the full maximal ideal are
    /// enumerated directly.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        if s == 0 {
            return MonomialIdeal::unit(self.ctx.clone());
        }
        if self.is_zero() {
            return self.clone();
        }
        if self.is_maximal_ideal() {
            return MonomialIdeal {
                ctx: self.ctx.clone(),
                gens: monomials_of_degree(self.ctx.len(), s),
            };
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self).expect("context is shared");
        }
        acc
    }

    fn is_maximal_ideal(&self) -> bool {
        !self.ctx.is_empty()
            && self.gens.len() == self.ctx.len()
            && self.gens.iter().all(|g| g.degree() == 1)
    }

    /// Intersection via pairwise lcms of generators, minimalized. Generators
    /// of one side already lying in the other contribute themselves and make
    /// the rest of their row/column redundant, which prunes most pairs.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ctx.clone()));
        }
        let mut candidates: BTreeSet<Monomial> = BTreeSet::new();
        let mut rows: Vec<&Monomial> = Vec::new();
        for a in &self.gens {
            if other.contains(a) {
                candidates.insert(a.clone());
            } else {
                rows.push(a);
            }
        }
        let mut cols: Vec<&Monomial> = Vec::new();
        for b in &other.gens {
            if self.contains(b) {
                candidates.insert(b.clone());
            } else {
                cols.push(b);
            }
        }
        for a in rows {
            for b in &cols {
                candidates.insert(a.lcm(b));
            }
        }
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimalize(candidates.into_iter().collect()),
        })
    }

    /// Colon by a monomial: generated by `g / gcd(g, b)`.
    pub fn colon(&self, b: &Monomial) -> Result<MonomialIdeal, IdealError> {
        if b.arity() != self.ctx.len() {
            return Err(IdealError::WrongArity {
                got: b.arity(),
                expected: self.ctx.len(),
            });
        }
        let gens = self.gens.iter().map(|g| g.quotient_by(b)).collect();
        Ok(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimalize(gens),
        })
    }

    /// Colon by an ideal: the intersection of the colons by its generators.
    /// Errors on a zero divisor ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ctx(other)?;
        if other.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let mut acc = MonomialIdeal::unit(self.ctx.clone());
        for b in &other.gens {
            // b already in self means self : b is the unit ideal
            if self.contains(b) {
                continue;
            }
            acc = acc.intersect(&self.colon(b)?)?;
        }
        Ok(acc)
    }

    /// Re-expresses the ideal in a larger context, matching variables by
    /// name. Errors when a variable with a nonzero exponent is missing.
    pub fn extend_to(&self, target: &VarContext) -> Result<MonomialIdeal, IdealError> {
        let mut map = Vec::with_capacity(self.ctx.len());
        for name in self.ctx.names() {
            map.push(target.index_of(name));
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut e = vec![0u32; target.len()];
            for (i, &exp) in g.exps().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = exp,
                    None => {
                        return Err(IdealError::MissingVariable(self.ctx.names()[i].clone()))
                    }
                }
            }
            gens.push(Monomial::new(e));
        }
        MonomialIdeal::from_gens(target.clone(), gens)
    }

    /// Compact human rendering: full generator list when small, a summary
    /// with a content hash otherwise. Deterministic.
    pub fn brief(&self, limit: usize) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        if self.gens.len() <= limit {
            let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.ctx)).collect();
            format!("({})", parts.join(", "))
        } else {
            format!(
                "<{} gens, deg {}..{}, fnv={:016x}>",
                self.gens.len(),
                self.alpha().unwrap(),
                self.max_gen_degree().unwrap(),
                self.content_hash()
            )
        }
    }

    fn content_hash(&self) -> u64 {
        // FNV-1a over the canonical exponent stream
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        for g in &self.gens {
            for &e in g.exps() {
                eat(e as u64);
            }
            eat(u64::MAX);
        }
        h
    }

    pub fn to_json(&self) -> String {
        let dto = IdealJson {
            variables: self.ctx.names().to_vec(),
            generators: self.gens.iter().map(|g| g.exps().to_vec()).collect(),
        };
        serde_json::to_string(&dto).expect("ideal serialization")
    }

    pub fn from_json(text: &str) -> Result<MonomialIdeal, IdealError> {
        let dto: IdealJson =
            serde_json::from_str(text).map_err(|e| IdealError::Json(e.to_string()))?;
        let ctx = VarContext::new(dto.variables)?;
        let gens = dto.generators.into_iter().map(Monomial::new).collect();
        MonomialIdeal::from_gens(ctx, gens)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    variables: Vec<String>,
    generators: Vec<Vec<u32>>,
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.brief(16))
    }
}

/// All monomials of total degree `d` in `nvars` variables, canonically
/// sorted. These are exactly the minimal generators of `m^d`.
fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(cur, i + 1, left - e, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(&mut cur, 0, d, &mut out);
    out.sort_unstable();
    out
}

/// The edge ideal of a graph: one squarefree degree-2 generator per edge,
/// over the graph's canonical vertex order.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let ctx = VarContext::of_graph(g);
    let n = ctx.len();
    let gens = g
        .edge_indices()
        .map(|(a, b)| {
            let mut e = vec![0u32; n];
            e[a] = 1;
            e[b] = 1;
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::from_gens(ctx, gens).expect("edge monomials match context")
}

/// The ideal generated by all variables of the context.
pub fn maximal_ideal(ctx: &VarContext) -> MonomialIdeal {
    let n = ctx.len();
    let gens = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 1;
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::from_gens(ctx.clone(), gens).expect("variable monomials match context")
}
