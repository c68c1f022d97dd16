//! Ground-truth predicates and exponential-time enumerators for d-cuts,
//! used to verify every kernelization in this crate, plus the union-find
//! closure that computes a sound monochromatic partition.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{EdgeCut, Graph};

/// Default cap on the size of a connected component the brute-force
/// enumerator is willing to exhaust.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("edge set contains a non-edge ({u}, {v})")]
    NonEdge { u: usize, v: usize },
    #[error("component with {size} vertices exceeds the oracle limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("{0}")]
    Precondition(String),
}

/// Decides whether `f` is the edge cut of some d-cut of `g`.
///
/// The edge set is a d-cut iff every vertex is incident to at most `d`
/// edges of `f` and `f` is realizable: the components of `g - f` admit a
/// 2-coloring in which every edge of `f` joins opposite colors and both
/// colors are used. The empty set qualifies exactly when `g` is
/// disconnected.
pub fn is_d_cut(g: &Graph, d: usize, f: &EdgeCut) -> Result<bool, OracleError> {
    for &(u, v) in f.edges() {
        if !g.has_edge(u, v) {
            return Err(OracleError::NonEdge { u, v });
        }
    }
    let mut inc = vec![0usize; g.n()];
    for &(u, v) in f.edges() {
        inc[u] += 1;
        inc[v] += 1;
        if inc[u] > d || inc[v] > d {
            return Ok(false);
        }
    }
    if f.is_empty() {
        return Ok(!g.is_connected() && g.n() >= 2);
    }
    // Component ids of g - f.
    let mut comp = vec![usize::MAX; g.n()];
    let mut next = 0usize;
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if comp[v] == usize::MAX && !f.contains(u, v) {
                    comp[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    // 2-color the component graph induced by f; every f-edge must cross.
    let mut color = vec![u8::MAX; next];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); next];
    for &(u, v) in f.edges() {
        let (cu, cv) = (comp[u], comp[v]);
        if cu == cv {
            return Ok(false);
        }
        adj[cu].push(cv);
        adj[cv].push(cu);
    }
    for s in 0..next {
        if color[s] != u8::MAX || adj[s].is_empty() {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in adj[u].clone() {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All d-cuts of `g` as distinct edge cuts, by exhausting the 2-colorings
/// of every connected component and combining them. Components larger
/// than `limit` are refused.
pub fn enumerate_all_bruteforce(
    g: &Graph,
    d: usize,
    limit: usize,
) -> Result<BTreeSet<EdgeCut>, OracleError> {
    let comps = g.components();
    let mut per_comp: Vec<Vec<EdgeCut>> = Vec::with_capacity(comps.len());
    for comp in &comps {
        let mut cuts: Vec<EdgeCut> = component_cuts(g, comp, d, limit)?.into_iter().collect();
        cuts.push(EdgeCut::empty()); // component placed wholly on one side
        per_comp.push(cuts);
    }
    let mut out = BTreeSet::new();
    // Odometer over per-component choices; the union of disjoint choices is
    // injective, so no dedup subtleties arise.
    let mut idx = vec![0usize; per_comp.len()];
    loop {
        let mut cut = EdgeCut::empty();
        for (ci, &i) in idx.iter().enumerate() {
            cut = cut.union(&per_comp[ci][i]);
        }
        let all_one_sided = idx
            .iter()
            .enumerate()
            .all(|(ci, &i)| per_comp[ci][i].is_empty());
        // The all-empty combination is a valid cut only when the graph is
        // disconnected (two components can face each other).
        if !(all_one_sided && comps.len() < 2) {
            out.insert(cut);
        }
        // advance odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < per_comp[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Nonempty d-cuts of a single connected component, by exhausting its
/// `2^{nc-1}` two-sided splits. Crossing degrees are popcounts over local
/// adjacency bitmasks, with early exit at the first over-budget vertex.
fn component_cuts(
    g: &Graph,
    comp: &[usize],
    d: usize,
    limit: usize,
) -> Result<BTreeSet<EdgeCut>, OracleError> {
    let nc = comp.len();
    if nc > limit || nc > 63 {
        return Err(OracleError::TooLarge { size: nc, limit: limit.min(63) });
    }
    let mut out = BTreeSet::new();
    if nc < 2 {
        return Ok(out);
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj_mask = vec![0u64; nc];
    for (mask, &v) in adj_mask.iter_mut().zip(comp) {
        for &w in g.neighbors(v) {
            let j = pos[w];
            if j != usize::MAX {
                *mask |= 1 << j;
            }
        }
    }
    // comp[0] stays on side A; mask bit i says comp[i] is on side B.
    'mask: for half in 1u64..(1u64 << (nc - 1)) {
        let side_b = half << 1;
        #[allow(clippy::needless_range_loop)]
        for i in 0..nc {
            let opposite = if (side_b >> i) & 1 == 1 { !side_b } else { side_b };
            if (adj_mask[i] & opposite).count_ones() as usize > d {
                continue 'mask;
            }
        }
        let mut cut = Vec::new();
        for i in 0..nc {
            let mut crossing = adj_mask[i] & side_b & !(u64::MAX << i.min(63));
            if (side_b >> i) & 1 == 1 {
                crossing = adj_mask[i] & !side_b & !(u64::MAX << i.min(63));
            }
            while crossing != 0 {
                let j = crossing.trailing_zeros() as usize;
                cut.push((comp[j], comp[i]));
                crossing &= crossing - 1;
            }
        }
        out.insert(EdgeCut::from_pairs(cut));
    }
    Ok(out)
}

/// Cuts as bitsets over the universe of edges they mention, so the
/// inclusion filters run on word operations.
struct CutBits {
    bits: Vec<Vec<u64>>,
    order: Vec<usize>,
}

fn cut_bits(cuts: &BTreeSet<EdgeCut>) -> CutBits {
    let mut universe: BTreeSet<(usize, usize)> = BTreeSet::new();
    for f in cuts {
        universe.extend(f.edges().iter().copied());
    }
    let index: std::collections::HashMap<(usize, usize), usize> = universe
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let words = index.len().div_ceil(64).max(1);
    let bits: Vec<Vec<u64>> = cuts
        .iter()
        .map(|f| {
            let mut b = vec![0u64; words];
            for e in f.edges() {
                let i = index[e];
                b[i / 64] |= 1 << (i % 64);
            }
            b
        })
        .collect();
    let sizes: Vec<usize> = cuts.iter().map(|f| f.len()).collect();
    let mut order: Vec<usize> = (0..bits.len()).collect();
    order.sort_by_key(|&i| sizes[i]);
    CutBits { bits, order }
}

fn is_subset_bits(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Members of `cuts` with no proper subset inside `cuts`.
pub fn filter_minimal(cuts: &BTreeSet<EdgeCut>) -> BTreeSet<EdgeCut> {
    let all: Vec<&EdgeCut> = cuts.iter().collect();
    let cb = cut_bits(cuts);
    let mut accepted: Vec<usize> = Vec::new();
    // Ascending size: only strictly smaller accepted cuts can be proper
    // subsets, and minimal cuts dominate everything above them.
    for &i in &cb.order {
        let fine = accepted.iter().all(|&j| {
            all[j].len() == all[i].len() || !is_subset_bits(&cb.bits[j], &cb.bits[i])
        });
        if fine {
            accepted.push(i);
        }
    }
    accepted.into_iter().map(|i| all[i].clone()).collect()
}

/// Members of `cuts` with no proper superset inside `cuts`.
pub fn filter_maximal(cuts: &BTreeSet<EdgeCut>) -> BTreeSet<EdgeCut> {
    let all: Vec<&EdgeCut> = cuts.iter().collect();
    let cb = cut_bits(cuts);
    let mut accepted: Vec<usize> = Vec::new();
    for &i in cb.order.iter().rev() {
        let fine = accepted.iter().all(|&j| {
            all[j].len() == all[i].len() || !is_subset_bits(&cb.bits[i], &cb.bits[j])
        });
        if fine {
            accepted.push(i);
        }
    }
    accepted.into_iter().map(|i| all[i].clone()).collect()
}

/// A partition of the vertex set into blocks that each lie on one side of
/// every d-cut. Sound but not necessarily coarsest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoPartition {
    blocks: Vec<Vec<usize>>,
}

impl MonoPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&v).is_ok())
            .map(|b| b.as_slice())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }
}

/// Least fixpoint of the monochromatic merging rules, seeded with
/// singletons:
///
/// * cliques of at least `2d+1` vertices are merged — both the
///   caller-supplied ones and those detected as closed common
///   neighborhoods of edges;
/// * a pair of vertices with more than `2d` common neighbors is merged;
/// * a vertex with more than `d` neighbors in one block joins that block,
///   iterated to fixpoint (overlapping blocks merge by union-find).
pub fn monochromatic_partition(g: &Graph, d: usize, extra_cliques: &[Vec<usize>]) -> MonoPartition {
    let n = g.n();
    let mut uf = UnionFind::new(n);

    let merge_clique = |uf: &mut UnionFind, c: &[usize]| {
        if c.len() > 2 * d {
            for w in c.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    };

    for c in extra_cliques {
        debug_assert!(is_clique(g, c), "caller-supplied set is not a clique");
        merge_clique(&mut uf, c);
    }

    // Closed common neighborhood of each edge, when it happens to be a
    // clique, witnesses rule (i); this is what catches pendant cliques and
    // clique modules without global maximal-clique enumeration.
    for (u, v) in g.edges() {
        let mut common = sorted_intersection(g.neighbors(u), g.neighbors(v));
        common.push(u);
        common.push(v);
        common.sort_unstable();
        if common.len() > 2 * d && is_clique(g, &common) {
            merge_clique(&mut uf, &common);
        }
    }

    // Pairs with more than 2d common full neighbors are monochromatic.
    for x in 0..n {
        for y in x + 1..n {
            let common = sorted_intersection(g.neighbors(x), g.neighbors(y));
            if common.iter().filter(|&&w| w != x && w != y).count() > 2 * d {
                uf.union(x, y);
            }
        }
    }

    // A vertex with more than d neighbors in one block joins it.
    loop {
        let mut changed = false;
        for v in 0..n {
            let mut count: Vec<(usize, usize)> = Vec::new();
            for &w in g.neighbors(v) {
                let r = uf.find(w);
                match count.iter_mut().find(|(root, _)| *root == r) {
                    Some((_, c)) => *c += 1,
                    None => count.push((r, 1)),
                }
            }
            for (root, c) in count {
                if c > d && uf.union(v, root) {
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_index = vec![usize::MAX; n];
    for v in 0..n {
        let r = uf.find(v);
        if root_index[r] == usize::MAX {
            root_index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[root_index[r]].push(v);
    }
    MonoPartition { blocks }
}

fn is_clique(g: &Graph, c: &[usize]) -> bool {
    c.iter()
        .enumerate()
        .all(|(i, &u)| c[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Exact count of maximal d-cuts of the star-forest family: a monochromatic
/// `k`-clique with `m` pendant leaves per clique vertex has `C(m,d)^k`
/// maximal d-cuts. Requires `k > 2d` (otherwise the clique is not forced
/// monochromatic) and `m >= d`.
pub fn count_maximal_family(k: usize, m: usize, d: usize) -> Result<u128, OracleError> {
    if k <= 2 * d {
        return Err(OracleError::Precondition(format!(
            "k = {k} must exceed 2d = {}",
            2 * d
        )));
    }
    if m < d {
        return Err(OracleError::Precondition(format!("m = {m} must be at least d = {d}")));
    }
    let c = binomial(m, d);
    let mut out: u128 = 1;
    for _ in 0..k {
        out = out.checked_mul(c).ok_or_else(|| {
            OracleError::Precondition("count overflows u128".into())
        })?;
    }
    Ok(out)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for i in 0..k {
        num = num * (n - i) as u128 / (i + 1) as u128;
    }
    num
}

/// Enumerates the d-valid bipartitions of a small graph (used by tests that
/// need sides, not just edge cuts). Yields `(side_a, edge_cut)` pairs.
pub fn all_d_cut_bipartitions(
    g: &Graph,
    d: usize,
    limit: usize,
) -> Result<Vec<(BTreeSet<usize>, EdgeCut)>, OracleError> {
    let n = g.n();
    if n > limit {
        return Err(OracleError::TooLarge { size: n, limit });
    }
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    let edges = g.edges();
    'mask: for mask in 0u64..(1u64 << (n - 1)) {
        // vertex 0 on side A; bit v-1 set puts v on side B
        let on_b = |v: usize| v > 0 && (mask >> (v - 1)) & 1 == 1;
        if (1..n).all(|v| !on_b(v)) {
            continue; // side B empty
        }
        let mut inc = vec![0usize; n];
        let mut cut = Vec::new();
        for &(u, v) in &edges {
            if on_b(u) != on_b(v) {
                inc[u] += 1;
                inc[v] += 1;
                if inc[u] > d || inc[v] > d {
                    continue 'mask;
                }
                cut.push((u, v));
            }
        }
        let side_a: BTreeSet<usize> = (0..n).filter(|&v| !on_b(v)).collect();
        out.push((side_a, EdgeCut::from_pairs(cut)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_graph;

    fn p4() -> Graph {
        load_graph("4 3\n0 1\n1 2\n2 3\n").unwrap()
    }

    fn k(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn p4_matching_cut_accepted() {
        let g = p4();
        let f = EdgeCut::from_pairs([(0, 1), (2, 3)]);
        assert_eq!(is_d_cut(&g, 1, &f), Ok(true));
    }

    #[test]
    fn k3_degree_violation() {
        let f = EdgeCut::from_pairs([(0, 1), (0, 2)]);
        assert_eq!(is_d_cut(&k(3), 1, &f), Ok(false));
    }

    #[test]
    fn empty_cut_needs_disconnection() {
        assert_eq!(is_d_cut(&Graph::empty(2), 1, &EdgeCut::empty()), Ok(true));
        assert_eq!(is_d_cut(&p4(), 1, &EdgeCut::empty()), Ok(false));
    }

    #[test]
    fn non_edge_rejected() {
        let f = EdgeCut::from_pairs([(0, 3)]);
        assert_eq!(
            is_d_cut(&p4(), 1, &f),
            Err(OracleError::NonEdge { u: 0, v: 3 })
        );
    }

    #[test]
    fn unrealizable_edge_set_rejected() {
        // Take C4 and cut one edge: its endpoints stay connected around the
        // cycle, so g - f has one component and the set is not the edge cut
        // of any bipartition.
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let f = EdgeCut::from_pairs([(0, 1)]);
        assert_eq!(is_d_cut(&c4, 2, &f), Ok(false));
    }

    #[test]
    fn enumerate_p4_d1() {
        let cuts = enumerate_all_bruteforce(&p4(), 1, DEFAULT_ORACLE_LIMIT).unwrap();
        let expect: BTreeSet<EdgeCut> = [
            EdgeCut::from_pairs([(0, 1)]),
            EdgeCut::from_pairs([(1, 2)]),
            EdgeCut::from_pairs([(2, 3)]),
            EdgeCut::from_pairs([(0, 1), (2, 3)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(cuts, expect);
    }

    #[test]
    fn enumerate_k4() {
        assert!(enumerate_all_bruteforce(&k(4), 1, 20).unwrap().is_empty());
        let cuts = enumerate_all_bruteforce(&k(4), 2, 20).unwrap();
        assert_eq!(cuts.len(), 3);
        assert!(cuts.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn refusal_over_limit() {
        assert_eq!(
            enumerate_all_bruteforce(&k(5), 1, 4),
            Err(OracleError::TooLarge { size: 5, limit: 4 })
        );
    }

    #[test]
    fn minimal_maximal_p4() {
        let cuts = enumerate_all_bruteforce(&p4(), 1, 20).unwrap();
        let min = filter_minimal(&cuts);
        let max = filter_maximal(&cuts);
        assert_eq!(
            min,
            [
                EdgeCut::from_pairs([(0, 1)]),
                EdgeCut::from_pairs([(1, 2)]),
                EdgeCut::from_pairs([(2, 3)]),
            ]
            .into_iter()
            .collect()
        );
        assert_eq!(
            max,
            [
                EdgeCut::from_pairs([(1, 2)]),
                EdgeCut::from_pairs([(0, 1), (2, 3)]),
            ]
            .into_iter()
            .collect()
        );
    }

    #[test]
    fn minimal_maximal_singleton_empty() {
        let only: BTreeSet<EdgeCut> = [EdgeCut::empty()].into_iter().collect();
        assert_eq!(filter_minimal(&only), only);
        assert_eq!(filter_maximal(&only), only);
    }

    #[test]
    fn is_d_cut_matches_enumeration() {
        // Every subset of E(G) on small graphs: predicate == membership.
        let graphs = [
            p4(),
            k(4),
            load_graph("5 4\n0 1\n0 2\n0 3\n0 4\n").unwrap(),
            load_graph("6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n").unwrap(),
        ];
        for g in &graphs {
            for d in 1..=2 {
                let sols = enumerate_all_bruteforce(g, d, 20).unwrap();
                let edges = g.edges();
                for mask in 0u32..(1 << edges.len()) {
                    let f = EdgeCut::from_pairs(
                        edges
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| (mask >> i) & 1 == 1)
                            .map(|(_, e)| *e),
                    );
                    assert_eq!(
                        is_d_cut(g, d, &f).unwrap(),
                        sols.contains(&f),
                        "graph {:?} d={} f={:?}",
                        g,
                        d,
                        f
                    );
                }
            }
        }
    }

    #[test]
    fn mono_k3_single_block() {
        let part = monochromatic_partition(&k(3), 1, &[]);
        assert_eq!(part.blocks(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn mono_p4_singletons() {
        let part = monochromatic_partition(&p4(), 1, &[]);
        assert_eq!(part.blocks().len(), 4);
    }

    #[test]
    fn mono_common_neighborhood_rule() {
        // x=0, y=1 with three common degree-2 neighbors 2,3,4: {0,1} merge.
        let g = load_graph("5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n").unwrap();
        let part = monochromatic_partition(&g, 1, &[]);
        let b = part.block_of(0).unwrap();
        assert!(b.contains(&1));
    }

    #[test]
    fn count_family_values() {
        assert_eq!(count_maximal_family(3, 2, 1), Ok(8));
        assert_eq!(count_maximal_family(3, 3, 1), Ok(27));
        assert_eq!(count_maximal_family(5, 2, 2), Ok(1));
        assert!(count_maximal_family(4, 2, 2).is_err()); // k = 2d
        assert!(count_maximal_family(3, 1, 2).is_err()); // m < d
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(50, 1), 50);
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(4, 5), 0);
    }
}
