//! Structural parameters consumed by the kernelizations: vertex covers,
//! neighborhood decompositions, and clique partitions.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("blocks do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("block {block} is not a clique: vertices {u} and {v} are non-adjacent")]
    NonCliqueBlock { block: usize, u: usize, v: usize },
    #[error("vertex set does not cover edge ({u}, {v})")]
    NotACover { u: usize, v: usize },
    #[error("graph too large for the exact solver (n = {n}, limit = {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    Exact,
    TwoApprox,
}

/// A vertex set touching every edge.
#[derive(Debug, Clone)]
pub struct VertexCoverWitness {
    pub cover: Vec<usize>,
    pub kind: CoverKind,
}

impl VertexCoverWitness {
    pub fn validate(&self, g: &Graph) -> Result<(), ParamError> {
        let set: BTreeSet<usize> = self.cover.iter().copied().collect();
        for (u, v) in g.edges() {
            if !set.contains(&u) && !set.contains(&v) {
                return Err(ParamError::NotACover { u, v });
            }
        }
        Ok(())
    }
}

/// Both endpoints of a greedily computed maximal matching, iterating edges
/// in `(u, v)`-sorted order. At most twice a minimum vertex cover.
pub fn approx_vertex_cover(g: &Graph) -> VertexCoverWitness {
    let mut matched = vec![false; g.n()];
    let mut cover = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            cover.push(u);
            cover.push(v);
        }
    }
    cover.sort_unstable();
    VertexCoverWitness {
        cover,
        kind: CoverKind::TwoApprox,
    }
}

/// Minimum vertex cover by exhaustive search, for test-scale graphs only.
pub fn exact_vertex_cover(g: &Graph, limit: usize) -> Result<VertexCoverWitness, ParamError> {
    let n = g.n();
    if n > limit {
        return Err(ParamError::TooLarge { n, limit });
    }
    let edges = g.edges();
    let mut best: Option<u64> = None;
    for mask in 0u64..(1u64 << n) {
        if let Some(b) = best {
            if mask.count_ones() >= b.count_ones() {
                continue;
            }
        }
        if edges
            .iter()
            .all(|&(u, v)| (mask >> u) & 1 == 1 || (mask >> v) & 1 == 1)
        {
            best = Some(mask);
        }
    }
    let mask = best.unwrap_or(0);
    Ok(VertexCoverWitness {
        cover: (0..n).filter(|&v| (mask >> v) & 1 == 1).collect(),
        kind: CoverKind::Exact,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    Clique,
    Independent,
}

#[derive(Debug, Clone)]
pub struct Module {
    pub vertices: Vec<usize>,
    pub kind: ModuleKind,
}

/// A minimum neighborhood decomposition: vertices grouped by the twin
/// relation `N(u) \ {v} = N(v) \ {u}`, each class a clique or an
/// independent set with a uniform neighborhood outside.
#[derive(Debug, Clone)]
pub struct NeighborhoodDecomposition {
    pub modules: Vec<Module>,
}

impl NeighborhoodDecomposition {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Uniform outside neighborhood of a module.
    pub fn outside_neighborhood(&self, g: &Graph, idx: usize) -> Vec<usize> {
        let module: BTreeSet<usize> = self.modules[idx].vertices.iter().copied().collect();
        let rep = self.modules[idx].vertices[0];
        g.neighbors(rep)
            .iter()
            .copied()
            .filter(|w| !module.contains(w))
            .collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ParamError> {
        validate_partition(g.n(), self.modules.iter().map(|m| m.vertices.as_slice()))?;
        for (idx, module) in self.modules.iter().enumerate() {
            let set: BTreeSet<usize> = module.vertices.iter().copied().collect();
            let outside = self.outside_neighborhood(g, idx);
            for &u in &module.vertices {
                let mine: Vec<usize> = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|w| !set.contains(w))
                    .collect();
                if mine != outside {
                    return Err(ParamError::NotAPartition(format!(
                        "module {idx} is not a module: vertex {u} has a different outside neighborhood"
                    )));
                }
            }
            for (i, &u) in module.vertices.iter().enumerate() {
                for &v in &module.vertices[i + 1..] {
                    let adjacent = g.has_edge(u, v);
                    match module.kind {
                        ModuleKind::Clique if !adjacent => {
                            return Err(ParamError::NonCliqueBlock { block: idx, u, v })
                        }
                        ModuleKind::Independent if adjacent => {
                            return Err(ParamError::NotAPartition(format!(
                                "module {idx} marked independent but {u} and {v} are adjacent"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }
}

/// Groups vertices into twin classes (same neighborhood up to each other),
/// classifying each class as a clique or an independent set. Singleton
/// classes count as independent. The class count is the neighborhood
/// diversity of the graph.
pub fn neighborhood_decomposition(g: &Graph) -> NeighborhoodDecomposition {
    // False twins share an open neighborhood; true twins share a closed one.
    let mut by_open: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut by_closed: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in g.vertices() {
        let open: Vec<usize> = g.neighbors(v).to_vec();
        let mut closed = open.clone();
        closed.push(v);
        closed.sort_unstable();
        if let Some(&c) = by_open.get(&open) {
            classes[c].push(v);
        } else if let Some(&c) = by_closed.get(&closed) {
            classes[c].push(v);
        } else {
            let c = classes.len();
            classes.push(vec![v]);
            by_open.insert(open, c);
            by_closed.insert(closed, c);
        }
    }
    let modules = classes
        .into_iter()
        .map(|vertices| {
            let kind = if vertices.len() >= 2 && g.has_edge(vertices[0], vertices[1]) {
                ModuleKind::Clique
            } else {
                ModuleKind::Independent
            };
            Module { vertices, kind }
        })
        .collect();
    NeighborhoodDecomposition { modules }
}

/// A partition of the vertices into cliques. Never claims minimality.
#[derive(Debug, Clone)]
pub struct CliquePartitionWitness {
    pub cliques: Vec<Vec<usize>>,
}

impl CliquePartitionWitness {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// Accepts `blocks` iff they partition the vertex set and each block
/// induces a clique.
pub fn validate_clique_partition(
    g: &Graph,
    blocks: &[Vec<usize>],
) -> Result<CliquePartitionWitness, ParamError> {
    validate_partition(g.n(), blocks.iter().map(|b| b.as_slice()))?;
    for (idx, block) in blocks.iter().enumerate() {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(ParamError::NonCliqueBlock { block: idx, u, v });
                }
            }
        }
    }
    let mut cliques: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    cliques.sort();
    Ok(CliquePartitionWitness { cliques })
}

/// Greedy clique partition: repeatedly grow a maximal clique from the
/// lowest unassigned vertex. Valid but not minimum.
pub fn greedy_clique_partition(g: &Graph) -> CliquePartitionWitness {
    let mut assigned = vec![false; g.n()];
    let mut cliques = Vec::new();
    for v in g.vertices() {
        if assigned[v] {
            continue;
        }
        let mut clique = vec![v];
        assigned[v] = true;
        #[allow(clippy::needless_range_loop)]
        for u in v + 1..g.n() {
            if !assigned[u] && clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
                assigned[u] = true;
            }
        }
        cliques.push(clique);
    }
    CliquePartitionWitness { cliques }
}

/// Minimum clique partition by backtracking (clique cover = coloring of the
/// complement), for test-scale graphs only.
pub fn exact_clique_partition(g: &Graph, limit: usize) -> Result<CliquePartitionWitness, ParamError> {
    let n = g.n();
    if n > limit {
        return Err(ParamError::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok(CliquePartitionWitness { cliques: vec![] });
    }
    for k in 1..=n {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
        if try_color(g, 0, k, &mut blocks) {
            blocks.retain(|b| !b.is_empty());
            return validate_clique_partition(g, &blocks);
        }
    }
    unreachable!("n singleton cliques always work");
}

fn try_color(g: &Graph, v: usize, k: usize, blocks: &mut Vec<Vec<usize>>) -> bool {
    if v == g.n() {
        return true;
    }
    for b in 0..k {
        if blocks[b].iter().all(|&u| g.has_edge(u, v)) {
            blocks[b].push(v);
            if try_color(g, v + 1, k, blocks) {
                return true;
            }
            blocks[b].pop();
        }
        // Placing v into a later empty block is symmetric to this one.
        if blocks[b].is_empty() {
            break;
        }
    }
    false
}

/// Parses a partition file: one block per line, space-separated vertex ids.
/// Blocks must partition `0..n-1`. `#` lines are ignored.
pub fn parse_partition(text: &str, n: usize) -> Result<Vec<Vec<usize>>, ParamError> {
    let mut blocks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut block = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| ParamError::Malformed {
                line: idx + 1,
                msg: format!("not an integer: {tok:?}"),
            })?;
            if v >= n {
                return Err(ParamError::Malformed {
                    line: idx + 1,
                    msg: format!("vertex {v} out of range (n = {n})"),
                });
            }
            block.push(v);
        }
        blocks.push(block);
    }
    validate_partition(n, blocks.iter().map(|b| b.as_slice()))?;
    Ok(blocks)
}

fn validate_partition<'a>(
    n: usize,
    blocks: impl Iterator<Item = &'a [usize]>,
) -> Result<(), ParamError> {
    let mut seen = vec![false; n];
    let mut total = 0usize;
    for block in blocks {
        for &v in block {
            if v >= n {
                return Err(ParamError::NotAPartition(format!(
                    "vertex {v} out of range (n = {n})"
                )));
            }
            if seen[v] {
                return Err(ParamError::NotAPartition(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
            total += 1;
        }
    }
    if total != n {
        return Err(ParamError::NotAPartition(format!(
            "blocks cover {total} of {n} vertices"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_graph;

    #[test]
    fn cover_k2() {
        let g = load_graph("2 1\n0 1\n").unwrap();
        let w = approx_vertex_cover(&g);
        assert_eq!(w.cover, vec![0, 1]);
        w.validate(&g).unwrap();
    }

    #[test]
    fn cover_star() {
        let g = load_graph("6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n").unwrap();
        let w = approx_vertex_cover(&g);
        assert_eq!(w.cover.len(), 2);
        assert!(w.cover.contains(&0));
        w.validate(&g).unwrap();
        let exact = exact_vertex_cover(&g, 10).unwrap();
        assert_eq!(exact.cover.len(), 1);
        assert!(w.cover.len() <= 2 * exact.cover.len());
    }

    #[test]
    fn cover_empty_graph() {
        assert!(approx_vertex_cover(&Graph::empty(4)).cover.is_empty());
    }

    #[test]
    fn cover_leaves_edgeless_rest() {
        let g = load_graph("7 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n1 4\n").unwrap();
        let w = approx_vertex_cover(&g);
        let set: BTreeSet<usize> = w.cover.iter().copied().collect();
        for (u, v) in g.edges() {
            assert!(set.contains(&u) || set.contains(&v));
        }
    }

    #[test]
    fn nd_of_star() {
        let g = load_graph("7 6\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n").unwrap();
        let nd = neighborhood_decomposition(&g);
        assert_eq!(nd.len(), 2);
        nd.validate(&g).unwrap();
        let leaves = nd.modules.iter().find(|m| m.vertices.len() == 6).unwrap();
        assert_eq!(leaves.kind, ModuleKind::Independent);
    }

    #[test]
    fn nd_of_p4_and_k4() {
        let p4 = load_graph("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(neighborhood_decomposition(&p4).len(), 4);
        let k4 = load_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        let nd = neighborhood_decomposition(&k4);
        assert_eq!(nd.len(), 1);
        assert_eq!(nd.modules[0].kind, ModuleKind::Clique);
        nd.validate(&k4).unwrap();
    }

    #[test]
    fn nd_is_minimum_on_small_graphs() {
        // Compare against exhaustive search over partitions for n <= 6.
        fn min_valid_partition(g: &Graph) -> usize {
            let n = g.n();
            // Enumerate set partitions via restricted growth strings.
            let mut rgs = vec![0usize; n];
            let mut best = n;
            loop {
                let k = rgs.iter().copied().max().map_or(0, |x| x + 1);
                if k < best && partition_is_nd(g, &rgs, k) {
                    best = k;
                }
                // next restricted growth string
                let mut i = n;
                loop {
                    if i == 0 {
                        return best.max(if n == 0 { 0 } else { 1 });
                    }
                    i -= 1;
                    let cap = rgs[..i].iter().copied().max().map_or(0, |x| x + 1);
                    if rgs[i] < cap.min(n - 1) {
                        rgs[i] += 1;
                        for x in rgs[i + 1..].iter_mut() {
                            *x = 0;
                        }
                        break;
                    }
                    rgs[i] = 0;
                }
            }
        }
        fn partition_is_nd(g: &Graph, rgs: &[usize], k: usize) -> bool {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
            for (v, &c) in rgs.iter().enumerate() {
                blocks[c].push(v);
            }
            for b in &blocks {
                let set: BTreeSet<usize> = b.iter().copied().collect();
                let clique = b
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v)));
                let indep = b
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| b[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
                if !clique && !indep {
                    return false;
                }
                let outside: Vec<BTreeSet<usize>> = b
                    .iter()
                    .map(|&u| {
                        g.neighbors(u)
                            .iter()
                            .copied()
                            .filter(|w| !set.contains(w))
                            .collect()
                    })
                    .collect();
                if outside.windows(2).any(|w| w[0] != w[1]) {
                    return false;
                }
            }
            true
        }

        let samples = [
            "5 4\n0 1\n1 2\n2 3\n3 4\n",
            "6 7\n0 1\n0 2\n1 2\n3 4\n4 5\n3 5\n2 3\n",
            "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n",
            "5 6\n0 1\n0 2\n1 2\n1 3\n2 4\n3 4\n",
        ];
        for text in samples {
            let g = load_graph(text).unwrap();
            let nd = neighborhood_decomposition(&g);
            nd.validate(&g).unwrap();
            assert_eq!(nd.len(), min_valid_partition(&g), "graph {text:?}");
        }
    }

    #[test]
    fn clique_partition_accepts_and_rejects() {
        let two_triangles = load_graph("6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n").unwrap();
        validate_clique_partition(&two_triangles, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();

        let p3 = load_graph("3 2\n0 1\n1 2\n").unwrap();
        validate_clique_partition(&p3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(
            validate_clique_partition(&p3, &[vec![0, 2], vec![1]]).unwrap_err(),
            ParamError::NonCliqueBlock { block: 0, u: 0, v: 2 }
        );
    }

    #[test]
    fn exact_clique_partition_minimum() {
        let p3 = load_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(exact_clique_partition(&p3, 8).unwrap().len(), 2);
        let k4 = load_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(exact_clique_partition(&k4, 8).unwrap().len(), 1);
        let c5 = load_graph("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
        assert_eq!(exact_clique_partition(&c5, 8).unwrap().len(), 3);
    }

    #[test]
    fn partition_file_round_trip() {
        let blocks = parse_partition("0 1 2\n3 4\n# comment\n5\n", 6).unwrap();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert!(parse_partition("0 1\n1 2\n", 3).is_err());
        assert!(parse_partition("0 1\n", 3).is_err());
    }
}
