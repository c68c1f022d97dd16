//! Clique-partition kernelization: two reduction rules, a marking
//! procedure, and a bijective lifting shared by all three solution
//! variants.
//!
//! After splitting sub-(2d+1) blocks into singletons and merging block
//! pairs joined too densely, every block is a singleton or a clique of at
//! least 2d+1 vertices, so every d-cut splits the graph along whole
//! blocks. Trimming large blocks down to their marked vertices plus a
//! 2d+1 floor preserves, for every block bipartition, whether it is a
//! d-cut; the lifting maps a kernel cut to the full edge set between its
//! crossing block pairs.
//!
//! Beyond the low/high marking, one edge per adjacent block pair is always
//! retained. Without it two block bipartitions can collapse to the same
//! kernel edge cut while their input edge cuts differ, and the map below
//! stops being a bijection; one witness edge per pair restores it.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{induced_subgraph, EdgeCut, Graph, IdMap};
use crate::kernel::{require_d, KernelError};
use crate::oracle::is_d_cut;
use crate::params::{validate_clique_partition, CliquePartitionWitness};
use crate::stream::for_each_combination;

#[derive(Debug, Clone)]
pub struct PcKernel {
    /// Graph after the merge rule, on the input's vertex ids.
    pub g1: Graph,
    /// Its clique partition.
    pub c1: Vec<Vec<usize>>,
    /// The kernel graph, on compact ids.
    pub gprime: Graph,
    gp_map: IdMap,
    /// Kernel blocks, index-aligned with `c1`.
    pub cprime: Vec<Vec<usize>>,
    /// Edges the merge rule added; no kernel cut may lift to one.
    pub added_edges: Vec<(usize, usize)>,
    pub d: usize,
    block_of_gp: Vec<usize>,
}

impl PcKernel {
    pub fn to_g1(&self, gp_id: usize) -> usize {
        self.gp_map.to_old(gp_id)
    }
}

/// Splits every block of at most 2d vertices into singletons; the graph is
/// unchanged and afterwards every block is a singleton or large.
pub fn split_small_cliques(
    _g: &Graph,
    partition: &CliquePartitionWitness,
    d: usize,
) -> CliquePartitionWitness {
    require_d(d);
    let mut cliques = Vec::new();
    for block in &partition.cliques {
        if block.len() <= 2 * d {
            cliques.extend(block.iter().map(|&v| vec![v]));
        } else {
            cliques.push(block.clone());
        }
    }
    CliquePartitionWitness { cliques }
}

/// Merged graph, merged block list, and the edges the join added.
pub type MergeOutcome = (Graph, Vec<Vec<usize>>, Vec<(usize, usize)>);

/// While some vertex has more than d neighbors in another block, completes
/// the join between the two blocks and merges them (the edge sets of
/// d-cuts are unaffected: such pairs are monochromatic either way).
/// Returns the new graph, the merged partition, and the added edges.
pub fn merge_cliques(
    g: &Graph,
    partition: &CliquePartitionWitness,
    d: usize,
) -> Result<MergeOutcome, KernelError> {
    require_d(d);
    let mut blocks: Vec<Vec<usize>> = partition.cliques.clone();
    let mut current = g.clone();
    let mut added: Vec<(usize, usize)> = Vec::new();
    'restart: loop {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let dense = blocks[i]
                    .iter()
                    .any(|&u| current.neighbors_in_sorted(u, &blocks[j]) > d)
                    || blocks[j]
                        .iter()
                        .any(|&u| current.neighbors_in_sorted(u, &blocks[i]) > d);
                if !dense {
                    continue;
                }
                let mut edges = current.edges();
                for &u in &blocks[i] {
                    for &v in &blocks[j] {
                        if !current.has_edge(u, v) {
                            added.push((u.min(v), u.max(v)));
                            edges.push((u, v));
                        }
                    }
                }
                current = Graph::from_edges(current.n(), edges)?;
                let merged_j = blocks.remove(j);
                blocks[i].extend(merged_j);
                blocks[i].sort_unstable();
                continue 'restart;
            }
        }
        break;
    }
    added.sort_unstable();
    added.dedup();
    Ok((current, blocks, added))
}

/// Marks the vertices whose removal could change which block bipartitions
/// are d-cuts, then trims every large block to its marked vertices plus a
/// 2d+1 floor (lowest-id unmarked vertices are removed first).
pub fn mark_cp_and_trim(
    g1: &Graph,
    c1: &[Vec<usize>],
    d: usize,
    added_edges: Vec<(usize, usize)>,
) -> Result<PcKernel, KernelError> {
    require_d(d);
    let nblocks = c1.len();
    let mut block_of = vec![usize::MAX; g1.n()];
    for (i, block) in c1.iter().enumerate() {
        for &v in block {
            block_of[v] = i;
        }
    }
    let large: Vec<bool> = c1.iter().map(|b| b.len() > 2 * d).collect();

    let mut marked: BTreeSet<usize> = BTreeSet::new();
    // Lowest representative per signature; iterating vertices in order
    // makes the first qualifying vertex the representative.
    let mut low_sigs: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    let mut high_sigs: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    for u in g1.vertices() {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &w in g1.neighbors(u) {
            if block_of[w] != block_of[u] {
                *counts.entry(block_of[w]).or_insert(0) += 1;
            }
        }
        if counts.is_empty() {
            continue;
        }
        let out_deg: usize = counts.values().sum();
        let support: Vec<usize> = counts.keys().copied().collect();
        if out_deg <= d {
            if support.iter().all(|&b| large[b]) {
                low_sigs.entry((block_of[u], support)).or_insert(u);
            }
        } else {
            // Every inclusion-minimal over-budget block set containing each
            // neighbor block; sizes beyond d+1 cannot qualify.
            let svals: Vec<(usize, usize)> = counts.into_iter().collect();
            for size in 1..=(d + 1).min(svals.len()) {
                for_each_combination(svals.len(), size, |combo| {
                    let sum: usize = combo.iter().map(|&i| svals[i].1).sum();
                    let max: usize = combo.iter().map(|&i| svals[i].1).max().unwrap();
                    if sum > d && sum - max <= d {
                        let set: Vec<usize> = combo.iter().map(|&i| svals[i].0).collect();
                        high_sigs.entry((block_of[u], set)).or_insert(u);
                    }
                });
            }
        }
    }
    for ((_, support), u) in &low_sigs {
        marked.insert(*u);
        for &w in g1.neighbors(*u) {
            if support.binary_search(&block_of[w]).is_ok() {
                marked.insert(w);
            }
        }
    }
    for ((_, set), u) in &high_sigs {
        marked.insert(*u);
        for &w in g1.neighbors(*u) {
            if set.binary_search(&block_of[w]).is_ok() {
                marked.insert(w);
            }
        }
    }
    // One witness edge per adjacent block pair.
    let mut pair_seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in g1.edges() {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu != bv && pair_seen.insert((bu.min(bv), bu.max(bv))) {
            marked.insert(u);
            marked.insert(v);
        }
    }

    let mut keep: BTreeSet<usize> = BTreeSet::new();
    for (i, block) in c1.iter().enumerate() {
        if !large[i] {
            keep.extend(block);
            continue;
        }
        let unmarked: Vec<usize> = block
            .iter()
            .copied()
            .filter(|v| !marked.contains(v))
            .collect();
        let remove_count = unmarked.len().min(block.len() - (2 * d + 1));
        let removed: BTreeSet<usize> = unmarked[..remove_count].iter().copied().collect();
        keep.extend(block.iter().filter(|v| !removed.contains(v)));
    }
    let (gprime, gp_map) = induced_subgraph(g1, &keep)?;
    let mut cprime: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
    let mut block_of_gp = vec![usize::MAX; gprime.n()];
    for gp in gprime.vertices() {
        let b = block_of[gp_map.to_old(gp)];
        cprime[b].push(gp);
        block_of_gp[gp] = b;
    }
    Ok(PcKernel {
        g1: g1.clone(),
        c1: c1.to_vec(),
        gprime,
        gp_map,
        cprime,
        added_edges,
        d,
        block_of_gp,
    })
}

/// Runs the whole reduction pipeline on a validated clique partition.
pub fn kernelize_pc(
    g: &Graph,
    partition: &CliquePartitionWitness,
    d: usize,
) -> Result<PcKernel, KernelError> {
    validate_clique_partition(g, &partition.cliques)?;
    let split = split_small_cliques(g, partition, d);
    let (g1, c1, added) = merge_cliques(g, &split, d)?;
    mark_cp_and_trim(&g1, &c1, d, added)
}

/// Maps one kernel d-cut to its unique corresponding d-cut of the input:
/// the union, over the crossing block pairs, of all original edges between
/// the two blocks. The same map serves the all, minimal, and maximal
/// variants; it is a bijection and preserves inclusion in both directions.
pub fn lift_pc(k: &PcKernel, f: &EdgeCut) -> Result<EdgeCut, KernelError> {
    if !is_d_cut(&k.gprime, k.d, f)? {
        return Err(KernelError::NotAKernelCut);
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(u, v) in f.edges() {
        let (bu, bv) = (k.block_of_gp[u], k.block_of_gp[v]);
        if bu == bv {
            return Err(KernelError::InternalInvariant(format!(
                "kernel cut contains an intra-block edge ({u}, {v})"
            )));
        }
        pairs.insert((bu.min(bv), bu.max(bv)));
    }
    // The cut must be a block bipartition's edge cut: all kernel edges
    // between each crossing pair are present.
    let mut expected = Vec::new();
    for &(bi, bj) in &pairs {
        for &u in &k.cprime[bi] {
            for &v in &k.cprime[bj] {
                if k.gprime.has_edge(u, v) {
                    expected.push((u, v));
                }
            }
        }
    }
    if EdgeCut::from_pairs(expected) != *f {
        return Err(KernelError::InternalInvariant(
            "kernel cut is not realizable as a block-index bipartition".into(),
        ));
    }
    let mut lifted = Vec::new();
    for &(bi, bj) in &pairs {
        for &u in &k.c1[bi] {
            for &v in &k.c1[bj] {
                if k.g1.has_edge(u, v) {
                    lifted.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    for e in &lifted {
        if k.added_edges.binary_search(e).is_ok() {
            return Err(KernelError::InternalInvariant(format!(
                "lifted cut contains a merge-rule edge ({}, {})",
                e.0, e.1
            )));
        }
    }
    Ok(EdgeCut::from_pairs(lifted))
}
