//! Immutable simple undirected graphs with dense 0-based vertex ids, the
//! construction operators the kernelizations rely on, and the canonical
//! edge-cut encoding that serves as solution identity everywhere else.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("edge ({u}, {v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("sides are not a bipartition of the vertex set: {reason}")]
    NotABipartition { reason: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {v} out of range (n = {n})")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// A simple undirected graph. Adjacency lists are sorted and deduplicated;
/// `u ∈ adj(v)` iff `v ∈ adj(u)`, and there are no self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, collapsing duplicates.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n()
    }

    /// All edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of neighbors of `v` inside `set` (which must be sorted).
    pub fn neighbors_in_sorted(&self, v: usize, set: &[usize]) -> usize {
        // Walk the shorter list, binary-search the longer one.
        if self.adj[v].len() <= set.len() {
            self.adj[v]
                .iter()
                .filter(|w| set.binary_search(w).is_ok())
                .count()
        } else {
            set.iter()
                .filter(|w| self.adj[v].binary_search(w).is_ok())
                .count()
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Serializes to the edge-list document format accepted by [`load_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{} {}", u, v);
        }
        s
    }
}

/// Parses an edge-list document: a header line `n m`, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are ignored.
pub fn load_graph(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut m_declared = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let a = parts.next();
        let b = parts.next();
        let extra = parts.next();
        let (a, b) = match (a, b, extra) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(ParseError::Malformed {
                    line: line_no,
                    msg: format!("expected two integers, got {:?}", line),
                })
            }
        };
        let pa: usize = a.parse().map_err(|_| ParseError::Malformed {
            line: line_no,
            msg: format!("not an integer: {:?}", a),
        })?;
        let pb: usize = b.parse().map_err(|_| ParseError::Malformed {
            line: line_no,
            msg: format!("not an integer: {:?}", b),
        })?;
        match n {
            None => {
                n = Some(pa);
                m_declared = pb;
            }
            Some(n) => {
                if pa >= n {
                    return Err(ParseError::VertexOutOfRange {
                        line: line_no,
                        v: pa,
                        n,
                    });
                }
                if pb >= n {
                    return Err(ParseError::VertexOutOfRange {
                        line: line_no,
                        v: pb,
                        n,
                    });
                }
                if pa == pb {
                    return Err(ParseError::SelfLoop {
                        line: line_no,
                        v: pa,
                    });
                }
                edges.push((pa, pb));
            }
        }
    }
    let n = n.ok_or(ParseError::Malformed {
        line: 0,
        msg: "missing header line \"n m\"".into(),
    })?;
    if edges.len() != m_declared {
        return Err(ParseError::EdgeCountMismatch {
            expected: m_declared,
            found: edges.len(),
        });
    }
    // Duplicates collapse silently; ids were validated above.
    Ok(Graph::from_edges(n, edges).expect("validated edges"))
}

/// Attaches a pendant clique of `r` new vertices to `anchor`: the new
/// vertices form a clique and each is additionally adjacent to `anchor`
/// only. Returns the extended graph and the ids of the new vertices.
pub fn attach_pendant_clique(
    g: &Graph,
    anchor: usize,
    r: usize,
) -> Result<(Graph, Vec<usize>), GraphError> {
    if anchor >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            v: anchor,
            n: g.n(),
        });
    }
    assert!(r >= 1, "pendant clique must have at least one vertex");
    let n0 = g.n();
    let mut edges = g.edges();
    let fresh: Vec<usize> = (n0..n0 + r).collect();
    for (i, &u) in fresh.iter().enumerate() {
        edges.push((anchor, u));
        for &v in &fresh[i + 1..] {
            edges.push((u, v));
        }
    }
    let h = Graph::from_edges(n0 + r, edges)?;
    Ok((h, fresh))
}

/// Bijective relabeling produced by [`induced_subgraph`]: maps the compact
/// ids of the subgraph back to the host graph's ids and vice versa.
#[derive(Debug, Clone)]
pub struct IdMap {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl IdMap {
    /// Identity map on `0..n`.
    pub fn identity(n: usize) -> Self {
        IdMap {
            new_to_old: (0..n).collect(),
            old_to_new: (0..n).map(Some).collect(),
        }
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn kept(&self) -> &[usize] {
        &self.new_to_old
    }
}

/// Induced subgraph on `keep`, relabeled to compact ids `0..keep.len()`
/// preserving the relative order of the kept vertices.
pub fn induced_subgraph(g: &Graph, keep: &BTreeSet<usize>) -> Result<(Graph, IdMap), GraphError> {
    if let Some(&v) = keep.iter().find(|&&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange { v, n: g.n() });
    }
    let new_to_old: Vec<usize> = keep.iter().copied().collect();
    let mut old_to_new = vec![None; g.n()];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    let mut edges = Vec::new();
    for (new_u, &old_u) in new_to_old.iter().enumerate() {
        for &old_v in g.neighbors(old_u) {
            if let Some(new_v) = old_to_new[old_v] {
                if new_u < new_v {
                    edges.push((new_u, new_v));
                }
            }
        }
    }
    let h = Graph::from_edges(new_to_old.len(), edges)?;
    Ok((
        h,
        IdMap {
            new_to_old,
            old_to_new,
        },
    ))
}

/// An unordered two-sided vertex partition witnessing a cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: BTreeSet<usize>,
    pub side_b: BTreeSet<usize>,
}

impl Bipartition {
    /// Validates that the two sides are nonempty, disjoint, and cover `0..g.n()`.
    pub fn new(
        g: &Graph,
        side_a: BTreeSet<usize>,
        side_b: BTreeSet<usize>,
    ) -> Result<Self, GraphError> {
        if side_a.is_empty() || side_b.is_empty() {
            return Err(GraphError::NotABipartition {
                reason: "a side is empty".into(),
            });
        }
        if let Some(&v) = side_a.intersection(&side_b).next() {
            return Err(GraphError::NotABipartition {
                reason: format!("vertex {v} on both sides"),
            });
        }
        if side_a.len() + side_b.len() != g.n() {
            return Err(GraphError::NotABipartition {
                reason: format!(
                    "sides cover {} vertices, graph has {}",
                    side_a.len() + side_b.len(),
                    g.n()
                ),
            });
        }
        if let Some(&v) = side_a.union(&side_b).find(|&&v| v >= g.n()) {
            return Err(GraphError::NotABipartition {
                reason: format!("vertex {v} out of range"),
            });
        }
        Ok(Bipartition { side_a, side_b })
    }

    /// Side membership: true for side A.
    pub fn on_a(&self, v: usize) -> bool {
        self.side_a.contains(&v)
    }
}

/// The canonical edge cut of a bipartition: all crossing edges, sorted.
pub fn edge_cut_of(g: &Graph, p: &Bipartition) -> EdgeCut {
    let mut cut = Vec::new();
    for &u in &p.side_a {
        for &v in g.neighbors(u) {
            if p.side_b.contains(&v) {
                cut.push((u.min(v), u.max(v)));
            }
        }
    }
    EdgeCut::from_pairs(cut)
}

/// Canonical edge-set identity of a cut: sorted, duplicate-free `(u, v)`
/// pairs with `u < v`. Two cuts are the same solution iff these agree;
/// `Ord` is the lexicographic order used to pick canonical kernel solutions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeCut {
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct EdgeCutDoc<'a> {
    edges: &'a [(usize, usize)],
}

impl EdgeCut {
    pub fn empty() -> Self {
        EdgeCut::default()
    }

    /// Canonicalizes arbitrary pairs: orders endpoints, sorts, dedups.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeCut { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn is_subset_of(&self, other: &EdgeCut) -> bool {
        self.edges
            .iter()
            .all(|e| other.edges.binary_search(e).is_ok())
    }

    /// Set union of two cuts.
    pub fn union(&self, other: &EdgeCut) -> EdgeCut {
        EdgeCut::from_pairs(self.edges.iter().chain(other.edges.iter()).copied())
    }

    /// Edges of `self` not in `other`.
    pub fn difference(&self, other: &EdgeCut) -> EdgeCut {
        EdgeCut::from_pairs(
            self.edges
                .iter()
                .filter(|e| other.edges.binary_search(e).is_err())
                .copied(),
        )
    }

    /// Every edge incident to `v` in `g`.
    pub fn star(g: &Graph, v: usize) -> EdgeCut {
        EdgeCut::from_pairs(g.neighbors(v).iter().map(|&w| (v, w)))
    }

    /// Translates through an id map (subgraph ids to host ids). Fails if an
    /// endpoint has no image, i.e. the edge touches an artificial vertex.
    pub fn translate(&self, map: impl Fn(usize) -> Option<usize>) -> Option<EdgeCut> {
        let mut out = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            out.push((map(u)?, map(v)?));
        }
        Some(EdgeCut::from_pairs(out))
    }

    /// One JSON object per cut: `{"edges": [[u,v],...]}`.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&EdgeCutDoc { edges: &self.edges }).expect("edge cut serializes")
    }
}

impl FromIterator<(usize, usize)> for EdgeCut {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        EdgeCut::from_pairs(iter)
    }
}
