//! Vertex-cover kernelization for enumerating minimal d-cuts, with a
//! polynomial-time solution lifting.
//!
//! The kernel keeps the cover `S`, one pendant neighbor per cover vertex,
//! and up to `2d+1` common degree-≥2 neighbors per cover pair. Every
//! removed vertex then has a monochromatic neighborhood, so the only
//! minimal cuts lost are the single-vertex stars of removed low-degree
//! vertices; a pendant clique of `2d+2` vertices attached to one marked
//! low-degree vertex designates the kernel solution that re-emits them.

use std::collections::BTreeSet;

use crate::graph::{attach_pendant_clique, induced_subgraph, EdgeCut, Graph};
use crate::kernel::{require_d, KernelError};
use crate::oracle::is_d_cut;
use crate::params::VertexCoverWitness;

#[derive(Debug, Clone)]
pub struct AttachedClique {
    /// Anchor in the kernel's id space.
    pub anchor_h: usize,
    /// Anchor in the input graph, absent when the anchor itself is an
    /// artificial pendant.
    pub anchor_g: Option<usize>,
    pub clique_h: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct VcMinKernel {
    g: Graph,
    pub h: Graph,
    /// Kernel id to input id; artificial vertices map to `None`.
    to_g: Vec<Option<usize>>,
    pub cover: Vec<usize>,
    pub marked: BTreeSet<usize>,
    pub attached: Option<AttachedClique>,
    /// Input was disconnected and the kernel is the two-vertex surrogate.
    pub disconnected: bool,
    pub d: usize,
    /// Unmarked vertices outside the cover with degree at most d, ascending.
    unmarked_low: Vec<usize>,
}

impl VcMinKernel {
    pub fn to_g(&self, h_id: usize) -> Option<usize> {
        self.to_g[h_id]
    }

    pub fn unmarked_low(&self) -> &[usize] {
        &self.unmarked_low
    }
}

pub fn kernelize_vc_min(
    g: &Graph,
    cover: &VertexCoverWitness,
    d: usize,
) -> Result<VcMinKernel, KernelError> {
    require_d(d);
    cover.validate(g)?;

    if !g.is_connected() {
        return Ok(VcMinKernel {
            g: g.clone(),
            h: Graph::empty(2),
            to_g: vec![None, None],
            cover: cover.cover.clone(),
            marked: BTreeSet::new(),
            attached: None,
            disconnected: true,
            d,
            unmarked_low: Vec::new(),
        });
    }
    if g.n() <= 1 {
        // A single vertex has no cuts; the kernel is the graph itself.
        return Ok(VcMinKernel {
            g: g.clone(),
            h: g.clone(),
            to_g: (0..g.n()).map(Some).collect(),
            cover: cover.cover.clone(),
            marked: BTreeSet::new(),
            attached: None,
            disconnected: false,
            d,
            unmarked_low: Vec::new(),
        });
    }

    let s_set: BTreeSet<usize> = cover.cover.iter().copied().collect();
    let cover_sorted: Vec<usize> = s_set.iter().copied().collect();
    let outside: Vec<usize> = g.vertices().filter(|v| !s_set.contains(v)).collect();

    let mut marked: BTreeSet<usize> = BTreeSet::new();
    // One pendant neighbor per cover vertex.
    for &x in &cover_sorted {
        if let Some(&y) = g
            .neighbors(x)
            .iter()
            .find(|&&y| !s_set.contains(&y) && g.degree(y) == 1)
        {
            marked.insert(y);
        }
    }
    // Up to 2d+1 common degree-≥2 neighbors per cover pair.
    for (i, &x) in cover_sorted.iter().enumerate() {
        for &y in &cover_sorted[i + 1..] {
            let mut taken = 0;
            for &w in g.neighbors(x) {
                if taken == 2 * d + 1 {
                    break;
                }
                if !s_set.contains(&w) && g.degree(w) >= 2 && g.has_edge(y, w) {
                    marked.insert(w);
                    taken += 1;
                }
            }
        }
    }

    let unmarked_low: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&u| !marked.contains(&u) && g.degree(u) <= d)
        .collect();

    // If low-degree vertices were dropped, attach a pendant clique to a
    // designated vertex of the kernel; its star cut becomes the kernel
    // solution whose class re-emits the dropped stars. The carrier must be
    // a *pendant* (degree exactly one): for a higher-degree carrier the
    // designated cut can fail to be minimal in the kernel (a neighbor's
    // star may be a strict subset), and then no minimal kernel solution
    // would be distinguished and the dropped stars would be lost. A fresh
    // pendant's single-edge cut is minimal in any connected kernel.
    let mut clique_plan: Option<(Option<usize>, Option<usize>)> = None; // (anchor_g, via x)
    if let Some(&z) = unmarked_low.first() {
        let marked_pendant = marked.iter().copied().find(|&u| g.degree(u) == 1);
        match marked_pendant {
            Some(u) => clique_plan = Some((Some(u), None)),
            None => {
                let x = *g
                    .neighbors(z)
                    .iter()
                    .find(|w| s_set.contains(w))
                    .expect("covered vertex has a cover neighbor");
                clique_plan = Some((None, Some(x)));
            }
        }
    }

    let keep: BTreeSet<usize> = s_set.union(&marked).copied().collect();
    let (mut h, map) = induced_subgraph(g, &keep)?;
    let mut to_g: Vec<Option<usize>> = map.kept().iter().map(|&v| Some(v)).collect();
    let mut attached = None;
    if let Some((anchor_g, via_x)) = clique_plan {
        let anchor_h = match (anchor_g, via_x) {
            (Some(u), _) => map.to_new(u).expect("marked vertex kept"),
            (None, Some(x)) => {
                // Fresh pendant on x carries the clique.
                let x_h = map.to_new(x).expect("cover vertex kept");
                let y_h = h.n();
                h = Graph::from_edges(h.n() + 1, {
                    let mut e = h.edges();
                    e.push((x_h, y_h));
                    e
                })?;
                to_g.push(None);
                y_h
            }
            _ => unreachable!(),
        };
        let (with_clique, fresh) = attach_pendant_clique(&h, anchor_h, 2 * d + 2)?;
        h = with_clique;
        to_g.extend(std::iter::repeat_n(None, fresh.len()));
        attached = Some(AttachedClique {
            anchor_h,
            anchor_g,
            clique_h: fresh,
        });
    }

    Ok(VcMinKernel {
        g: g.clone(),
        h,
        to_g,
        cover: cover_sorted,
        marked,
        attached,
        disconnected: false,
        d,
        unmarked_low,
    })
}

/// True iff `f` is the cut whose realizing bipartition has the attached
/// clique plus its anchor as one entire side, i.e. `f` is exactly the set
/// of edges joining the anchor to its kernel neighbors outside the clique.
pub fn is_distinguished(k: &VcMinKernel, f: &EdgeCut) -> Result<bool, KernelError> {
    if !is_d_cut(&k.h, k.d, f)? {
        return Err(KernelError::NotAKernelCut);
    }
    let Some(att) = &k.attached else {
        return Ok(false);
    };
    let clique: BTreeSet<usize> = att.clique_h.iter().copied().collect();
    let expected = EdgeCut::from_pairs(
        k.h.neighbors(att.anchor_h)
            .iter()
            .filter(|w| !clique.contains(w))
            .map(|&w| (att.anchor_h, w)),
    );
    Ok(*f == expected)
}

/// Lifts one minimal d-cut of the kernel to its class of minimal d-cuts of
/// the input graph. The classes over all kernel solutions partition the
/// minimal d-cuts of the input.
pub fn lift_vc_min(k: &VcMinKernel, f: &EdgeCut) -> Result<Vec<EdgeCut>, KernelError> {
    if k.disconnected {
        if !f.is_empty() {
            return Err(KernelError::NotAKernelCut);
        }
        return Ok(vec![EdgeCut::empty()]);
    }
    if is_distinguished(k, f)? {
        let mut out = Vec::new();
        // The anchor's own star, unless the anchor is artificial.
        if let Some(fg) = f.translate(|v| k.to_g[v]) {
            out.push(fg);
        }
        for &u in &k.unmarked_low {
            out.push(EdgeCut::star(&k.g, u));
        }
        if out.is_empty() {
            return Err(KernelError::InternalInvariant(
                "distinguished cut lifted to an empty class".into(),
            ));
        }
        Ok(out)
    } else {
        let fg = f.translate(|v| k.to_g[v]).ok_or_else(|| {
            KernelError::InternalInvariant(
                "non-distinguished minimal cut touches artificial vertices".into(),
            )
        })?;
        Ok(vec![fg])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_graph;
    use crate::oracle::{enumerate_all_bruteforce, filter_minimal};
    use crate::params::approx_vertex_cover;

    fn check_partitions_minimal(g: &Graph, d: usize) {
        let cover = approx_vertex_cover(g);
        let k = kernelize_vc_min(g, &cover, d).unwrap();
        let truth = filter_minimal(&enumerate_all_bruteforce(g, d, 20).unwrap());
        let kernel_cuts = filter_minimal(&enumerate_all_bruteforce(&k.h, d, 20).unwrap());
        let mut seen: Vec<EdgeCut> = Vec::new();
        for f in &kernel_cuts {
            for lifted in lift_vc_min(&k, f).unwrap() {
                assert!(
                    !seen.contains(&lifted),
                    "duplicate {lifted:?} for graph {g:?} d={d}"
                );
                seen.push(lifted);
            }
        }
        let got: BTreeSet<EdgeCut> = seen.into_iter().collect();
        assert_eq!(got, truth, "graph {g:?} d={d}");
    }

    #[test]
    fn star_k15_distinguished_class() {
        // K_{1,5}: center 0. Minimal 1-cuts of G are the five pendant edges.
        let g = load_graph("6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n").unwrap();
        let cover = approx_vertex_cover(&g);
        let k = kernelize_vc_min(&g, &cover, 1).unwrap();
        assert!(k.attached.is_some());
        // Kernel: cover {0,1}, one marked pendant, plus a 4-vertex clique.
        let att = k.attached.as_ref().unwrap();
        assert_eq!(att.clique_h.len(), 4);
        check_partitions_minimal(&g, 1);
    }

    #[test]
    fn disconnected_two_vertices() {
        let g = Graph::empty(2);
        let k = kernelize_vc_min(&g, &approx_vertex_cover(&g), 1).unwrap();
        assert!(k.disconnected);
        assert_eq!(k.h.n(), 2);
        assert_eq!(
            lift_vc_min(&k, &EdgeCut::empty()).unwrap(),
            vec![EdgeCut::empty()]
        );
    }

    #[test]
    fn k4_identity_kernel() {
        let g = load_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        let cover = approx_vertex_cover(&g);
        let k = kernelize_vc_min(&g, &cover, 1).unwrap();
        // All of I is marked via the pair rule; no low-degree vertex exists.
        assert_eq!(k.h.n(), 4);
        assert!(k.attached.is_none());
        check_partitions_minimal(&g, 1);
        check_partitions_minimal(&g, 2);
    }

    #[test]
    fn distinguished_detection() {
        let g = load_graph("6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n").unwrap();
        let k = kernelize_vc_min(&g, &approx_vertex_cover(&g), 1).unwrap();
        let att = k.attached.as_ref().unwrap();
        let clique: BTreeSet<usize> = att.clique_h.iter().copied().collect();
        let f = EdgeCut::from_pairs(
            k.h.neighbors(att.anchor_h)
                .iter()
                .filter(|w| !clique.contains(w))
                .map(|&w| (att.anchor_h, w)),
        );
        assert!(is_distinguished(&k, &f).unwrap());
        // Any other minimal kernel cut is not distinguished.
        let kernel_cuts = filter_minimal(&enumerate_all_bruteforce(&k.h, 1, 20).unwrap());
        for other in kernel_cuts.iter().filter(|c| **c != f) {
            assert!(!is_distinguished(&k, other).unwrap());
        }
        // Kernel without a clique: never distinguished.
        let k4 = load_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
        let k = kernelize_vc_min(&k4, &approx_vertex_cover(&k4), 1).unwrap();
        for f in filter_minimal(&enumerate_all_bruteforce(&k.h, 1, 20).unwrap()).iter() {
            assert!(!is_distinguished(&k, f).unwrap());
        }
    }

    #[test]
    fn lift_rejects_non_cuts() {
        let g = load_graph("6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n").unwrap();
        let k = kernelize_vc_min(&g, &approx_vertex_cover(&g), 1).unwrap();
        // Two star edges at the kernel's center exceed d at the center.
        let bogus = EdgeCut::from_pairs([(0, 1), (0, 2)]);
        assert!(matches!(
            lift_vc_min(&k, &bogus),
            Err(KernelError::NotAKernelCut) | Err(KernelError::Oracle(_))
        ));
    }

    #[test]
    fn small_connected_sweep() {
        let samples = [
            "4 3\n0 1\n1 2\n2 3\n",
            "5 4\n0 1\n0 2\n0 3\n0 4\n",
            "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n",
            "6 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n",
            "7 6\n0 1\n0 2\n0 3\n1 4\n1 5\n2 6\n",
        ];
        for text in samples {
            let g = load_graph(text).unwrap();
            for d in 1..=2 {
                check_partitions_minimal(&g, d);
            }
        }
    }

    #[test]
    fn degree_two_anchor_keeps_partition() {
        // d = 2. Vertex 4 is the only common neighbor of the cover pair
        // {0,1} and has degree 2, so it is marked and low; the cut that
        // isolates it together with a clique is NOT minimal in the kernel
        // (isolating the degree-1 cover vertex 1 cuts a strict subset).
        // The designated solution must therefore ride on something that
        // stays minimal, or the star of the unmarked twin 10 is lost.
        let mut edges = vec![(0usize, 4usize), (1, 4), (0, 2)];
        for w in 5..=9 {
            edges.push((2, w));
            edges.push((3, w));
        }
        edges.push((2, 10));
        edges.push((3, 10));
        let g = Graph::from_edges(11, edges).unwrap();
        assert!(g.is_connected());
        let cover = crate::params::VertexCoverWitness {
            cover: vec![0, 1, 2, 3],
            kind: crate::params::CoverKind::Exact,
        };
        let d = 2;
        let k = kernelize_vc_min(&g, &cover, d).unwrap();
        assert_eq!(k.unmarked_low(), &[10]);
        let truth = filter_minimal(&enumerate_all_bruteforce(&g, d, 20).unwrap());
        let hsols = filter_minimal(&enumerate_all_bruteforce(&k.h, d, 22).unwrap());
        let mut distinguished = 0;
        let mut got = BTreeSet::new();
        for f in &hsols {
            if is_distinguished(&k, f).unwrap() {
                distinguished += 1;
            }
            for c in lift_vc_min(&k, f).unwrap() {
                assert!(got.insert(c), "duplicate");
            }
        }
        assert_eq!(distinguished, 1);
        assert_eq!(got, truth);
    }

    #[test]
    fn kernel_size_bound() {
        let samples = [
            "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n",
            "7 6\n0 1\n0 2\n0 3\n1 4\n1 5\n2 6\n",
            "8 9\n0 1\n1 2\n2 3\n3 0\n0 4\n1 5\n2 6\n3 7\n4 5\n",
        ];
        for text in samples {
            let g = load_graph(text).unwrap();
            for d in 1..=2 {
                let cover = approx_vertex_cover(&g);
                let k = kernelize_vc_min(&g, &cover, d).unwrap();
                let s = cover.cover.len();
                let bound = s + (2 * d + 1) * s * (s - 1) / 2 + s + 1 + (2 * d + 2);
                assert!(k.h.n() <= bound, "{} > {}", k.h.n(), bound);
            }
        }
    }
}
