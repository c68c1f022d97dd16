//! Vertex-cover kernelization for enumerating maximal d-cuts, with a
//! polynomial-delay equivalence-class lifting.
//!
//! For every nonempty `T ⊆ S` with `|T| ≤ d`, the outside vertices whose
//! neighborhood is exactly `T` are interchangeable. The marking keeps
//! `2d+2` of them; when more exist, pendant cliques of pairwise distinct
//! sizes `2d+1..=3d` are attached to `d` kept ones so that a kernel cut
//! encodes, through the clique sizes it isolates, how many interchangeable
//! vertices the original cut separated. Lifting re-expands exactly the
//! suitable subsets, which keeps the classes disjoint.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::graph::{attach_pendant_clique, induced_subgraph, EdgeCut, Graph};
use crate::kernel::{require_d, KernelError};
use crate::oracle::is_d_cut;
use crate::params::VertexCoverWitness;
use crate::stream::{for_each_combination, ClassOdometer};

/// A neighborhood class `T ⊆ S` with at least `2d+2` members: the locus
/// where the kernel discards vertices and lifting must re-expand.
#[derive(Debug, Clone)]
pub struct BadSubset {
    /// The common neighborhood, sorted cover vertices.
    pub t: Vec<usize>,
    /// All outside vertices with neighborhood exactly `t` (input ids).
    pub i_hat: Vec<usize>,
    /// The marked ones, kept in the kernel.
    pub i_marked: Vec<usize>,
    /// The discarded ones.
    pub unmarked: Vec<usize>,
    /// Attached pendant clique size per anchor (input id).
    pub clique_size: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone)]
pub struct VcMaxKernel {
    g: Graph,
    /// Kernel graph including pendant cliques.
    pub h: Graph,
    /// Kernel minus the pendant cliques; its vertex ids are a prefix of
    /// the kernel's, so edge cuts live in either graph unchanged.
    pub htilde: Graph,
    h_to_g: Vec<Option<usize>>,
    pub cover: Vec<usize>,
    pub marked: BTreeSet<usize>,
    pub d: usize,
    /// Pendant-clique vertex sets, in kernel ids.
    pub pendant_cliques: Vec<Vec<usize>>,
    pub bad: Vec<BadSubset>,
    /// Outside vertex (input id) to its bad-subset index.
    vertex_bad: HashMap<usize, usize>,
}

impl VcMaxKernel {
    pub fn to_g(&self, h_id: usize) -> Option<usize> {
        self.h_to_g[h_id]
    }

    /// Translates a kernel cut to input ids, rejecting cuts that touch a
    /// pendant clique (no d-cut of the kernel may, which is a structural
    /// guarantee this converts into a runtime check).
    pub fn kernel_cut_to_g(&self, f: &EdgeCut) -> Result<EdgeCut, KernelError> {
        f.translate(|v| self.h_to_g[v]).ok_or_else(|| {
            let (u, v) = *f
                .edges()
                .iter()
                .find(|&&(u, v)| self.h_to_g[u].is_none() || self.h_to_g[v].is_none())
                .expect("translation failed on some edge");
            KernelError::PendantCliqueTouched { u, v }
        })
    }

    fn validate_kernel_cut(&self, f: &EdgeCut) -> Result<EdgeCut, KernelError> {
        if !is_d_cut(&self.h, self.d, f)? {
            return Err(KernelError::NotAKernelCut);
        }
        self.kernel_cut_to_g(f)
    }

    fn part_in_class(&self, f_g: &EdgeCut, idx: usize) -> EdgeCut {
        let bad = &self.bad[idx];
        EdgeCut::from_pairs(f_g.edges().iter().copied().filter(|&(u, v)| {
            bad.i_hat.binary_search(&u).is_ok() || bad.i_hat.binary_search(&v).is_ok()
        }))
    }
}

pub fn mark_vc(
    g: &Graph,
    cover: &VertexCoverWitness,
    d: usize,
) -> Result<VcMaxKernel, KernelError> {
    require_d(d);
    cover.validate(g)?;
    let s_set: BTreeSet<usize> = cover.cover.iter().copied().collect();
    let cover_sorted: Vec<usize> = s_set.iter().copied().collect();

    if g.n() <= 1 {
        // No bipartition exists; the empty kernel represents the empty
        // solution set.
        let (h, _) = induced_subgraph(g, &BTreeSet::new())?;
        return Ok(VcMaxKernel {
            g: g.clone(),
            htilde: h.clone(),
            h,
            h_to_g: Vec::new(),
            cover: cover_sorted,
            marked: BTreeSet::new(),
            d,
            pendant_cliques: Vec::new(),
            bad: Vec::new(),
            vertex_bad: HashMap::new(),
        });
    }

    let mut marked: BTreeSet<usize> = BTreeSet::new();
    let isolated: Vec<usize> = g
        .vertices()
        .filter(|&v| !s_set.contains(&v) && g.degree(v) == 0)
        .collect();
    if let Some(&v) = isolated.first() {
        marked.insert(v);
    }
    // Edgeless inputs keep a second isolated vertex so the empty cut
    // survives in the kernel.
    if s_set.is_empty() && isolated.len() >= 2 {
        marked.insert(isolated[1]);
    }

    // Group low-degree outside vertices by their exact neighborhood.
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for u in g.vertices() {
        if s_set.contains(&u) {
            continue;
        }
        let deg = g.degree(u);
        if deg >= 1 && deg <= d {
            groups.entry(g.neighbors(u).to_vec()).or_default().push(u);
        }
    }
    let mut bad: Vec<BadSubset> = Vec::new();
    let mut clique_plan: Vec<(usize, usize)> = Vec::new(); // (anchor input id, size)
    for (t, members) in &groups {
        let keep = members.len().min(2 * d + 2);
        for &u in &members[..keep] {
            marked.insert(u);
        }
        if members.len() < 2 * d + 2 {
            continue;
        }
        let mut clique_size = BTreeMap::new();
        if members.len() > 2 * d + 2 {
            for (i, &u) in members[..d].iter().enumerate() {
                clique_plan.push((u, 2 * d + 1 + i));
                clique_size.insert(u, 2 * d + 1 + i);
            }
        }
        bad.push(BadSubset {
            t: t.clone(),
            i_hat: members.clone(),
            i_marked: members[..keep].to_vec(),
            unmarked: members[keep..].to_vec(),
            clique_size,
        });
    }

    // High-degree outside vertices: keep up to 2d+1 common neighbors per
    // (d+1)-subset of the cover.
    if cover_sorted.len() > d {
        for_each_combination(cover_sorted.len(), d + 1, |combo| {
            let t: Vec<usize> = combo.iter().map(|&i| cover_sorted[i]).collect();
            let mut common: Vec<usize> = g
                .neighbors(t[0])
                .iter()
                .copied()
                .filter(|&u| {
                    !s_set.contains(&u)
                        && g.degree(u) > d
                        && t[1..].iter().all(|&x| g.has_edge(x, u))
                })
                .collect();
            common.truncate(2 * d + 1);
            marked.extend(common);
        });
    }

    let keep: BTreeSet<usize> = s_set.union(&marked).copied().collect();
    let (htilde, ht_map) = induced_subgraph(g, &keep)?;
    let mut h = htilde.clone();
    let mut h_to_g: Vec<Option<usize>> = ht_map.kept().iter().map(|&v| Some(v)).collect();
    let mut pendant_cliques = Vec::new();
    for &(anchor_g, size) in &clique_plan {
        let anchor_h = ht_map.to_new(anchor_g).expect("anchor was marked");
        let (next, fresh) = attach_pendant_clique(&h, anchor_h, size)?;
        h = next;
        h_to_g.extend(std::iter::repeat_n(None, fresh.len()));
        pendant_cliques.push(fresh);
    }

    let mut vertex_bad = HashMap::new();
    for (idx, b) in bad.iter().enumerate() {
        for &u in &b.i_hat {
            vertex_bad.insert(u, idx);
        }
    }

    Ok(VcMaxKernel {
        g: g.clone(),
        h,
        htilde,
        h_to_g,
        cover: cover_sorted,
        marked,
        d,
        pendant_cliques,
        bad,
        vertex_bad,
    })
}

/// The equivalence on edge sets that the lifting enumerates one class of:
/// agreement outside the bad loci, equal counts inside each locus, and
/// agreement on which loci are occupied (every member's star either fully
/// in or fully out).
pub fn equivalent_edge_sets(k: &VcMaxKernel, f1: &EdgeCut, f2: &EdgeCut) -> bool {
    let in_l = |&(u, v): &(usize, usize)| -> Option<usize> {
        k.vertex_bad.get(&u).or_else(|| k.vertex_bad.get(&v)).copied()
    };
    let outside1 = EdgeCut::from_pairs(f1.edges().iter().filter(|e| in_l(e).is_none()).copied());
    let outside2 = EdgeCut::from_pairs(f2.edges().iter().filter(|e| in_l(e).is_none()).copied());
    if outside1 != outside2 {
        return false;
    }
    for (idx, b) in k.bad.iter().enumerate() {
        let c1 = f1.edges().iter().filter(|e| in_l(e) == Some(idx)).count();
        let c2 = f2.edges().iter().filter(|e| in_l(e) == Some(idx)).count();
        if c1 != c2 {
            return false;
        }
        if occupied(&k.g, b, f1) != occupied(&k.g, b, f2) {
            return false;
        }
    }
    true
}

fn occupied(g: &Graph, b: &BadSubset, f: &EdgeCut) -> bool {
    b.i_hat.iter().all(|&u| {
        let incident = g.neighbors(u).iter().filter(|&&x| f.contains(u, x)).count();
        incident == 0 || incident == g.degree(u)
    })
}

/// If the kernel cut isolates, inside one bad locus, exactly the anchors
/// carrying cliques of sizes `2d+1..=2d+r`, the locus is `r`-suitable and
/// the class re-expands there; any other pattern keeps the locus verbatim.
pub fn r_suitability(
    k: &VcMaxKernel,
    f: &EdgeCut,
    bad_idx: usize,
) -> Result<Option<usize>, KernelError> {
    let f_g = k.validate_kernel_cut(f)?;
    Ok(r_suitability_g(k, &f_g, bad_idx))
}

fn r_suitability_g(k: &VcMaxKernel, f_g: &EdgeCut, bad_idx: usize) -> Option<usize> {
    let b = &k.bad[bad_idx];
    if k.part_in_class(f_g, bad_idx).is_empty() {
        return None;
    }
    let mut cut_members = Vec::new();
    for &u in &b.i_marked {
        let incident = k
            .g
            .neighbors(u)
            .iter()
            .filter(|&&x| f_g.contains(u, x))
            .count();
        if incident == k.g.degree(u) {
            cut_members.push(u);
        } else if incident != 0 {
            return None;
        }
    }
    let r = cut_members.len();
    if r == 0 {
        return None;
    }
    let mut sizes: Vec<usize> = cut_members
        .iter()
        .map(|u| b.clique_size.get(u).copied().unwrap_or(0))
        .collect();
    sizes.sort_unstable();
    let expected: Vec<usize> = (1..=r).map(|i| 2 * k.d + i).collect();
    (sizes == expected).then_some(r)
}

/// Enumerates the equivalence class of one maximal kernel cut as maximal
/// d-cuts of the input graph; over all kernel solutions the classes
/// partition the input's maximal d-cuts.
pub fn enum_equivalent_max(k: &VcMaxKernel, f: &EdgeCut) -> Result<ClassOdometer, KernelError> {
    let f_g = k.validate_kernel_cut(f)?;
    let mut base = f_g.clone();
    let mut slots = Vec::new();
    for idx in 0..k.bad.len() {
        let part = k.part_in_class(&f_g, idx);
        if part.is_empty() {
            continue;
        }
        base = base.difference(&part);
        let b = &k.bad[idx];
        match r_suitability_g(k, &f_g, idx) {
            None => slots.push(vec![part]),
            Some(r) => {
                let mut options = Vec::new();
                let members: Vec<usize> = b
                    .i_marked
                    .iter()
                    .copied()
                    .filter(|&u| {
                        let incident = k
                            .g
                            .neighbors(u)
                            .iter()
                            .filter(|&&x| f_g.contains(u, x))
                            .count();
                        incident == k.g.degree(u)
                    })
                    .collect();
                options.push(stars_of(&k.g, &members));
                for_each_combination(b.i_hat.len(), r, |combo| {
                    let chosen: Vec<usize> = combo.iter().map(|&i| b.i_hat[i]).collect();
                    if chosen.iter().any(|u| b.unmarked.binary_search(u).is_ok()) {
                        options.push(stars_of(&k.g, &chosen));
                    }
                });
                slots.push(options);
            }
        }
    }
    Ok(ClassOdometer::new(base, slots))
}

fn stars_of(g: &Graph, vertices: &[usize]) -> EdgeCut {
    EdgeCut::from_pairs(
        vertices
            .iter()
            .flat_map(|&u| g.neighbors(u).iter().map(move |&w| (u, w))),
    )
}
