//! Finite simple graphs with exact, exhaustively computed invariants.
//!
//! Vertices are named; the canonical vertex order is lexicographic by name and
//! fixes the variable order of every ideal built downstream. All invariants
//! (matching number, induced matching number, vertex cover number, minimal
//! vertex covers, decomposability) are computed by exhaustive search over
//! bitmask-encoded vertex sets, so graphs handled by those operations are
//! capped at [`DEFAULT_VERTEX_CAP`] vertices unless a larger cap is passed
//! explicitly.

use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Default vertex cap for the exhaustive-search invariants.
pub const DEFAULT_VERTEX_CAP: usize = 16;

/// The two sides of a vertex partition witnessing decomposability.
pub type DecompositionWitness = (Vec<String>, Vec<String>);

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("multiplicity vector has length {got}, expected {expected}")]
    MultiplicityLength { got: usize, expected: usize },
    #[error("graph has {got} vertices; exhaustive search is capped at {cap}")]
    TooLarge { got: usize, cap: usize },
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not connected")]
    NotConnected,
}

/// A finite simple graph: no loops, no multi-edges. Immutable after
/// construction; vertices are stored sorted and edges as index pairs `(i, j)`
/// with `i < j` into the vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    verts: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

/// Result of [`Graph::cycle_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    pub is_unicyclic: bool,
    /// The unique cycle, listed from its lexicographically least vertex toward
    /// that vertex's lesser cycle neighbor. `None` for forests and graphs with
    /// more than one cycle.
    pub cycle: Option<Vec<String>>,
    /// True iff the graph is unicyclic and every off-cycle vertex has a
    /// neighbor on the cycle.
    pub dominating: bool,
}

/// The exact graph invariants consumed by the algebraic layers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub matching_number: usize,
    pub induced_matching_number: usize,
    pub vertex_cover_number: usize,
    pub unique_cycle: Option<Vec<String>>,
    pub is_unicyclic: bool,
    pub cycle_is_dominating: bool,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Graph {
    /// Builds a canonical graph from vertex names and name pairs. Endpoints
    /// not listed among `vertices` are added; duplicate edges collapse.
    pub fn from_parts<I, J, S, T>(vertices: I, edges: J) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let mut names: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        let raw: Vec<(String, String)> = edges
            .into_iter()
            .map(|(u, v)| (u.into(), v.into()))
            .collect();
        for (u, v) in &raw {
            if u == v {
                return Err(GraphError::Parse {
                    line: 0,
                    msg: format!("loop edge `{u} {v}`"),
                });
            }
            names.insert(u.clone());
            names.insert(v.clone());
        }
        let verts: Vec<String> = names.into_iter().collect();
        let index: BTreeMap<&str, usize> = verts
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut set = BTreeSet::new();
        for (u, v) in &raw {
            let (a, b) = (index[u.as_str()], index[v.as_str()]);
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { verts, edges: set })
    }

    /// Parses the edge-list text format: one `u v` edge per line, `vertex u`
    /// for isolated vertices, `#` comments, blank lines ignored.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let body = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let fields: Vec<&str> = body.split_whitespace().collect();
            match fields.as_slice() {
                [] => continue,
                ["vertex", name] => {
                    if !valid_name(name) {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("invalid vertex name `{name}`"),
                        });
                    }
                    vertices.push((*name).to_string());
                }
                [u, v] => {
                    if !valid_name(u) || !valid_name(v) {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("invalid vertex name in `{u} {v}`"),
                        });
                    }
                    if u == v {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("loop edge `{u} {u}`"),
                        });
                    }
                    edges.push(((*u).to_string(), (*v).to_string()));
                }
                _ => {
                    return Err(GraphError::Parse {
                        line,
                        msg: format!("expected `u v` or `vertex u`, got `{}`", body.trim()),
                    })
                }
            }
        }
        Graph::from_parts(vertices, edges)
    }

    /// Canonical serialization: isolated vertices first (`vertex u` lines),
    /// then edges, everything sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let covered: BTreeSet<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        for (i, name) in self.verts.iter().enumerate() {
            if !covered.contains(&i) {
                out.push_str("vertex ");
                out.push_str(name);
                out.push('\n');
            }
        }
        for &(a, b) in &self.edges {
            out.push_str(&self.verts[a]);
            out.push(' ');
            out.push_str(&self.verts[b]);
            out.push('\n');
        }
        out
    }

    pub fn vertices(&self) -> &[String] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    /// Edges as name pairs, in canonical order.
    pub fn edge_names(&self) -> Vec<(&str, &str)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.verts[a].as_str(), self.verts[b].as_str()))
            .collect()
    }

    /// Edges as index pairs `(i, j)`, `i < j`, into [`Graph::vertices`].
    pub fn edge_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.edges.contains(&(a.min(b), a.max(b))),
            _ => false,
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.verts.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn neighbors(&self, name: &str) -> Vec<&str> {
        match self.index_of(name) {
            None => Vec::new(),
            Some(i) => adj_original(self, i)
                .into_iter()
                .map(|j| self.verts[j].as_str())
                .collect(),
        }
    }

    /// Per-vertex adjacency bitmasks. Only valid for graphs on at most 64
    /// vertices, which every exhaustive operation checks first.
    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.verts.len()];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    fn check_cap(&self, cap: usize) -> Result<(), GraphError> {
        let n = self.verts.len();
        if n > cap.min(24) {
            return Err(GraphError::TooLarge {
                got: n,
                cap: cap.min(24),
            });
        }
        Ok(())
    }

    /// Induced subgraph on the given vertex names.
    pub fn induced_subgraph<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        keep: I,
    ) -> Result<Graph, GraphError> {
        let mut mask_set = BTreeSet::new();
        for name in keep {
            match self.index_of(name) {
                Some(i) => {
                    mask_set.insert(i);
                }
                None => return Err(GraphError::UnknownVertex(name.to_string())),
            }
        }
        let verts: Vec<String> = mask_set.iter().map(|&i| self.verts[i].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| mask_set.contains(a) && mask_set.contains(b))
            .map(|&(a, b)| (self.verts[a].clone(), self.verts[b].clone()));
        Graph::from_parts(verts, edges.collect::<Vec<_>>())
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let n = self.verts.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    pub fn is_connected(&self) -> bool {
        self.verts.is_empty() || self.component_count() == 1
    }

    /// Detects the unique cycle when there is exactly one. A graph is
    /// unicyclic iff its cyclomatic number `|E| - |V| + components` equals 1;
    /// the cycle is then the 2-core, obtained by repeatedly stripping leaves.
    pub fn cycle_structure(&self) -> CycleStructure {
        let n = self.verts.len();
        let cyclomatic =
            self.edges.len() as i64 - n as i64 + self.component_count() as i64;
        if cyclomatic != 1 {
            return CycleStructure {
                is_unicyclic: false,
                cycle: None,
                dominating: false,
            };
        }
        // strip leaves until the 2-core remains
        let mut deg: Vec<usize> = vec![0; n];
        let mut alive = vec![true; n];
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(a, b) in &self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
            deg[a] += 1;
            deg[b] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| deg[i] <= 1).collect();
        while let Some(v) = queue.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &u in &adj[v].clone() {
                if alive[u] {
                    adj[u].remove(&v);
                    deg[u] -= 1;
                    if deg[u] <= 1 {
                        queue.push(u);
                    }
                }
            }
        }
        let core: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
        // walk the cycle from its least vertex toward its lesser neighbor
        let start = core[0];
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = *adj[start].iter().next().expect("core vertex has degree 2");
        while cur != start {
            cycle.push(cur);
            let next = *adj[cur]
                .iter()
                .find(|&&u| u != prev && alive[u])
                .expect("cycle walk");
            prev = cur;
            cur = next;
        }
        let core_set: BTreeSet<usize> = core.iter().copied().collect();
        let dominating = (0..n)
            .filter(|i| !core_set.contains(i))
            .all(|v| adj_original(self, v).iter().any(|u| core_set.contains(u)));
        CycleStructure {
            is_unicyclic: true,
            cycle: Some(cycle.into_iter().map(|i| self.verts[i].clone()).collect()),
            dominating,
        }
    }

    /// All inclusion-minimal vertex covers, each sorted, the family sorted.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<Vec<String>>, GraphError> {
        self.minimal_vertex_covers_capped(DEFAULT_VERTEX_CAP)
    }

    pub fn minimal_vertex_covers_capped(
        &self,
        cap: usize,
    ) -> Result<Vec<Vec<String>>, GraphError> {
        self.check_cap(cap)?;
        let n = self.verts.len();
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        let covers_mask = |mask: u64| -> bool {
            edges
                .iter()
                .all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1)
        };
        let mut out = Vec::new();
        for mask in 0..(1u64 << n) {
            if !covers_mask(mask) {
                continue;
            }
            let minimal = (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .all(|v| !covers_mask(mask & !(1 << v)));
            if minimal {
                out.push(
                    (0..n)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| self.verts[v].clone())
                        .collect::<Vec<_>>(),
                );
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn invariants(&self) -> Result<GraphInvariants, GraphError> {
        self.invariants_capped(DEFAULT_VERTEX_CAP)
    }

    pub fn invariants_capped(&self, cap: usize) -> Result<GraphInvariants, GraphError> {
        self.check_cap(cap)?;
        let n = self.verts.len();
        let adj = self.adjacency();
        let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };

        let cs = self.cycle_structure();
        Ok(GraphInvariants {
            matching_number: max_matching(&adj, full, &mut BTreeMap::new()),
            induced_matching_number: max_induced_matching(&adj, n),
            vertex_cover_number: self.vertex_cover_number_capped(cap)?,
            unique_cycle: cs.cycle,
            is_unicyclic: cs.is_unicyclic,
            cycle_is_dominating: cs.dominating,
        })
    }

    pub fn vertex_cover_number(&self) -> Result<usize, GraphError> {
        self.vertex_cover_number_capped(DEFAULT_VERTEX_CAP)
    }

    pub fn vertex_cover_number_capped(&self, cap: usize) -> Result<usize, GraphError> {
        self.check_cap(cap)?;
        let n = self.verts.len();
        let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
        Ok(tau_table(self, n)[full as usize] as usize)
    }

    /// Parallelization: vertex `i` is deleted when `mult[i] == 0` and
    /// duplicated `mult[i] - 1` times otherwise, the k-th duplicate of `x`
    /// named `x#k`. Duplicates inherit the full neighborhood, so duplicates of
    /// adjacent vertices are pairwise adjacent; copies of one vertex are not.
    pub fn parallelization(&self, mult: &[u32]) -> Result<Graph, GraphError> {
        if mult.len() != self.verts.len() {
            return Err(GraphError::MultiplicityLength {
                got: mult.len(),
                expected: self.verts.len(),
            });
        }
        let mut copies: Vec<Vec<String>> = Vec::with_capacity(self.verts.len());
        for (i, &m) in mult.iter().enumerate() {
            let mut group = Vec::new();
            if m >= 1 {
                group.push(self.verts[i].clone());
                for k in 1..m {
                    group.push(format!("{}#{}", self.verts[i], k));
                }
            }
            copies.push(group);
        }
        let vertices: Vec<String> = copies.iter().flatten().cloned().collect();
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            for u in &copies[a] {
                for v in &copies[b] {
                    edges.push((u.clone(), v.clone()));
                }
            }
        }
        Graph::from_parts(vertices, edges)
    }

    /// Tests whether some proper 2-partition `V = V1 | V2` satisfies
    /// `tau(G) = tau(G[V1]) + tau(G[V2])`. Checking 2-partitions suffices:
    /// tau is superadditive over partitions, so an r-part equality forces
    /// equality for every coarsening to two parts.
    pub fn is_decomposable(&self) -> Result<(bool, Option<DecompositionWitness>), GraphError> {
        self.is_decomposable_capped(DEFAULT_VERTEX_CAP)
    }

    pub fn is_decomposable_capped(
        &self,
        cap: usize,
    ) -> Result<(bool, Option<DecompositionWitness>), GraphError> {
        self.check_cap(cap)?;
        let n = self.verts.len();
        if n < 2 {
            return Ok((false, None));
        }
        let tau = tau_table(self, n);
        let full: u64 = (1 << n) - 1;
        for m in (1..full).step_by(2) {
            // vertex 0 always in V1, so each partition is seen once
            let other = full & !m;
            if other == 0 {
                continue;
            }
            if tau[full as usize] == tau[m as usize] + tau[other as usize] {
                let names = |mask: u64| {
                    (0..n)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| self.verts[v].clone())
                        .collect::<Vec<_>>()
                };
                return Ok((true, Some((names(m), names(other)))));
            }
        }
        Ok((false, None))
    }

    /// For a connected unicyclic graph: the union over all attached rooted
    /// trees of the neighbors of the root inside its tree — equivalently, the
    /// off-cycle neighbors of cycle vertices.
    pub fn tree_fringe(&self) -> Result<BTreeSet<String>, GraphError> {
        let cs = self.cycle_structure();
        let cycle = match cs.cycle {
            Some(c) if cs.is_unicyclic => c,
            _ => return Err(GraphError::NotUnicyclic),
        };
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let on_cycle: BTreeSet<&str> = cycle.iter().map(|s| s.as_str()).collect();
        let mut fringe = BTreeSet::new();
        for &(a, b) in &self.edges {
            let (na, nb) = (self.verts[a].as_str(), self.verts[b].as_str());
            if on_cycle.contains(na) && !on_cycle.contains(nb) {
                fringe.insert(nb.to_string());
            }
            if on_cycle.contains(nb) && !on_cycle.contains(na) {
                fringe.insert(na.to_string());
            }
        }
        Ok(fringe)
    }

    /// Girth (length of a shortest cycle), if the graph has a cycle.
    pub fn girth(&self) -> Option<usize> {
        let n = self.verts.len();
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for start in 0..n {
            // BFS from start; a non-tree edge closing back gives a cycle length
            let mut dist = vec![usize::MAX; n];
            let mut par = vec![usize::MAX; n];
            dist[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in 0..n {
                    if adj[v] >> u & 1 == 0 {
                        continue;
                    }
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        par[u] = v;
                        queue.push_back(u);
                    } else if par[v] != u {
                        let len = dist[v] + dist[u] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }
}

fn adj_original(g: &Graph, v: usize) -> Vec<usize> {
    g.edges
        .iter()
        .filter_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
        .collect()
}

/// Minimum vertex cover size of every induced subgraph, indexed by vertex
/// mask: `tau[m] = 0` when `G[m]` has no edge, else `1 + min` over deleting
/// either endpoint of its first edge.
fn tau_table(g: &Graph, n: usize) -> Vec<u8> {
    let edges: Vec<(usize, usize)> = g.edges.iter().copied().collect();
    let size = 1usize << n;
    let mut tau = vec![0u8; size];
    for mask in 1..size as u64 {
        let inside = edges
            .iter()
            .find(|&&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1);
        if let Some(&(a, b)) = inside {
            let da = tau[(mask & !(1 << a)) as usize];
            let db = tau[(mask & !(1 << b)) as usize];
            tau[mask as usize] = 1 + da.min(db);
        }
    }
    tau
}

fn max_matching(adj: &[u64], mask: u64, memo: &mut BTreeMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    // v unmatched
    let mut best = max_matching(adj, rest, memo);
    // v matched to some available neighbor
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + max_matching(adj, rest & !(1 << u), memo));
    }
    memo.insert(mask, best);
    best
}

/// An induced matching is a vertex set whose induced subgraph is 1-regular;
/// scan all vertex subsets.
fn max_induced_matching(adj: &[u64], n: usize) -> usize {
    let mut best = 0;
    for mask in 0..(1u64 << n) {
        if (mask.count_ones() as usize) / 2 <= best {
            continue;
        }
        let one_regular = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| (adj[v] & mask).count_ones() == 1);
        if one_regular {
            best = best.max(mask.count_ones() as usize / 2);
        }
    }
    best
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph on {} vertices, {} edges",
            self.verts.len(),
            self.edges.len()
        )
    }
}
