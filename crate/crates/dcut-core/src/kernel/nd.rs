//! Neighborhood-diversity kernelization with three liftings: minimal
//! d-cuts in polynomial time, all or maximal d-cuts with polynomial delay.
//!
//! The interchangeable vertices here are the members of a nice module: an
//! independent module whose outside neighborhood `T_X` has at most d
//! vertices. The kernel keeps `3d+2` members of each and attaches pendant
//! cliques of sizes `2d+1..=3d` to d of them; every other module keeps
//! `2d+1` members (one for the module of isolated vertices). Lifting
//! re-expands suitable loci exactly as in the vertex-cover case for
//! maximal cuts.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{attach_pendant_clique, induced_subgraph, EdgeCut, Graph};
use crate::kernel::{require_d, KernelError};
use crate::oracle::is_d_cut;
use crate::params::{ModuleKind, NeighborhoodDecomposition};
use crate::stream::{for_each_combination, ClassOdometer};

/// Which solution stream a class expansion serves; the expansion itself is
/// variant-independent, the caller feeds the matching kernel cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdEnumVariant {
    All,
    Max,
}

/// A nice module with at least `3d+2` members.
#[derive(Debug, Clone)]
pub struct NiceBadModule {
    pub module_idx: usize,
    /// Outside neighborhood of the module, sorted input ids.
    pub t: Vec<usize>,
    /// All module members.
    pub full: Vec<usize>,
    /// Members kept in the kernel.
    pub kept: Vec<usize>,
    pub unmarked: Vec<usize>,
    /// Pendant-clique size per singleton anchor.
    pub s1: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone)]
pub struct NdKernel {
    g: Graph,
    pub h: Graph,
    /// Kernel minus pendant cliques; vertex ids are a prefix of `h`'s.
    pub htilde: Graph,
    h_to_g: Vec<Option<usize>>,
    pub d: usize,
    /// Number of modules of the input graph.
    pub module_count: usize,
    pub nice_bad: Vec<NiceBadModule>,
    pub pendant_cliques: Vec<Vec<usize>>,
}

impl NdKernel {
    pub fn to_g(&self, h_id: usize) -> Option<usize> {
        self.h_to_g[h_id]
    }

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
        let b = &self.nice_bad[idx];
        EdgeCut::from_pairs(f_g.edges().iter().copied().filter(|&(u, v)| {
            b.full.binary_search(&u).is_ok() || b.full.binary_search(&v).is_ok()
        }))
    }
}

pub fn mark_nd(
    g: &Graph,
    decomposition: &NeighborhoodDecomposition,
    d: usize,
) -> Result<NdKernel, KernelError> {
    require_d(d);
    decomposition.validate(g)?;

    let mut kept_all: BTreeSet<usize> = BTreeSet::new();
    let mut nice_bad: Vec<NiceBadModule> = Vec::new();
    let mut clique_plan: Vec<(usize, usize)> = Vec::new();

    for (idx, module) in decomposition.modules.iter().enumerate() {
        let outside = decomposition.outside_neighborhood(g, idx);
        let members = &module.vertices; // sorted by construction
        let is_independent = module.kind == ModuleKind::Independent;
        if is_independent && outside.is_empty() {
            // The module of isolated vertices. Keeping one vertex suffices
            // unless the whole graph is edgeless, where a second vertex
            // preserves the empty cut.
            let keep = if decomposition.len() == 1 { 2 } else { 1 };
            kept_all.extend(members.iter().take(keep.min(members.len())));
        } else if is_independent && outside.len() <= d {
            // Nice module.
            let keep_count = members.len().min(3 * d + 2);
            let kept: Vec<usize> = members[..keep_count].to_vec();
            kept_all.extend(&kept);
            if members.len() >= 3 * d + 2 {
                let mut s1 = BTreeMap::new();
                if members.len() > 3 * d + 2 {
                    for (i, &u) in kept[..d].iter().enumerate() {
                        clique_plan.push((u, 2 * d + 1 + i));
                        s1.insert(u, 2 * d + 1 + i);
                    }
                }
                nice_bad.push(NiceBadModule {
                    module_idx: idx,
                    t: outside.clone(),
                    full: members.clone(),
                    kept,
                    unmarked: members[keep_count..].to_vec(),
                    s1,
                });
            }
        } else {
            kept_all.extend(members.iter().take((2 * d + 1).min(members.len())));
        }
    }

    let (htilde, ht_map) = induced_subgraph(g, &kept_all)?;
    let mut h = htilde.clone();
    let mut h_to_g: Vec<Option<usize>> = ht_map.kept().iter().map(|&v| Some(v)).collect();
    let mut pendant_cliques = Vec::new();
    for &(anchor_g, size) in &clique_plan {
        let anchor_h = ht_map.to_new(anchor_g).expect("anchor kept");
        let (next, fresh) = attach_pendant_clique(&h, anchor_h, size)?;
        h = next;
        h_to_g.extend(std::iter::repeat_n(None, fresh.len()));
        pendant_cliques.push(fresh);
    }

    Ok(NdKernel {
        g: g.clone(),
        h,
        htilde,
        h_to_g,
        d,
        module_count: decomposition.len(),
        nice_bad,
        pendant_cliques,
    })
}

/// Lifts a minimal kernel cut to its class of minimal d-cuts of the input.
///
/// A nonempty minimal cut that touches a bad locus is one member's whole
/// star; if that member carries the `2d+1`-clique the class re-emits the
/// stars of all discarded members, otherwise the class is a singleton.
pub fn lift_nd_min(k: &NdKernel, f: &EdgeCut) -> Result<Vec<EdgeCut>, KernelError> {
    let f_g = k.validate_kernel_cut(f)?;
    if f_g.is_empty() {
        return Ok(vec![f_g]);
    }
    let touched: Vec<usize> = (0..k.nice_bad.len())
        .filter(|&i| !k.part_in_class(&f_g, i).is_empty())
        .collect();
    if touched.is_empty() {
        return Ok(vec![f_g]);
    }
    if touched.len() > 1 {
        return Err(KernelError::InternalInvariant(
            "minimal cut touches two bad modules".into(),
        ));
    }
    let b = &k.nice_bad[touched[0]];
    // Minimality forces f to be exactly one member's star.
    let u = {
        let members: Vec<usize> = b
            .kept
            .iter()
            .copied()
            .filter(|&u| k.g.neighbors(u).iter().any(|&x| f_g.contains(u, x)))
            .collect();
        if members.len() != 1 {
            return Err(KernelError::InternalInvariant(
                "minimal cut cuts more than one module member".into(),
            ));
        }
        members[0]
    };
    if f_g != EdgeCut::star(&k.g, u) {
        return Err(KernelError::InternalInvariant(
            "minimal cut is not a full member star".into(),
        ));
    }
    let mut out = vec![f_g];
    if b.s1.get(&u).copied() == Some(2 * k.d + 1) {
        for &w in &b.unmarked {
            out.push(EdgeCut::star(&k.g, w));
        }
    }
    Ok(out)
}

/// Enumerates the equivalence class of one kernel cut (all-cuts or
/// maximal-cuts stream) with polynomial delay.
pub fn enum_nd(
    k: &NdKernel,
    f: &EdgeCut,
    variant: NdEnumVariant,
) -> Result<ClassOdometer, KernelError> {
    let f_g = k.validate_kernel_cut(f)?;
    if variant == NdEnumVariant::Max && f_g.is_empty() {
        // The empty cut is maximal only in a graph with no other cut; a
        // positive-degree low vertex in the kernel witnesses one.
        let has_star =
            k.htilde.vertices().any(|v| k.htilde.degree(v) >= 1 && k.htilde.degree(v) <= k.d);
        if has_star {
            return Err(KernelError::NotAKernelCut);
        }
    }
    let mut base = f_g.clone();
    let mut slots = Vec::new();
    for idx in 0..k.nice_bad.len() {
        let part = k.part_in_class(&f_g, idx);
        if part.is_empty() {
            continue;
        }
        base = base.difference(&part);
        let b = &k.nice_bad[idx];
        // Members of the locus fully cut by f.
        let mut p = Vec::new();
        let mut ok = true;
        for &u in &b.kept {
            let incident = k
                .g
                .neighbors(u)
                .iter()
                .filter(|&&x| f_g.contains(u, x))
                .count();
            if incident == k.g.degree(u) && incident > 0 {
                p.push(u);
            } else if incident != 0 {
                ok = false;
            }
        }
        if !ok {
            return Err(KernelError::InternalInvariant(
                "kernel cut breaks a bad module".into(),
            ));
        }
        let h_count = p.len();
        let mut sizes: Vec<usize> = p
            .iter()
            .map(|u| b.s1.get(u).copied().unwrap_or(0))
            .collect();
        sizes.sort_unstable();
        let expected: Vec<usize> = (1..=h_count).map(|i| 2 * k.d + i).collect();
        if sizes == expected && h_count > 0 {
            let mut options = vec![stars_of(&k.g, &p)];
            for_each_combination(b.full.len(), h_count, |combo| {
                let chosen: Vec<usize> = combo.iter().map(|&i| b.full[i]).collect();
                if chosen.iter().any(|u| b.unmarked.binary_search(u).is_ok()) {
                    options.push(stars_of(&k.g, &chosen));
                }
            });
            slots.push(options);
        } else {
            slots.push(vec![part]);
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
