//! End-to-end enumeration: kernelize per parameterization, enumerate the
//! kernel's solutions by brute force (kernels are parameter-bounded),
//! lift each solution, and stream the results. Also the verification
//! engine that checks lifted classes against the oracle.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeCut, Graph};
use crate::kernel::{nd, pc, vc_all, vc_max, vc_min, KernelError};
use crate::oracle::{
    enumerate_all_bruteforce, filter_maximal, filter_minimal, is_d_cut, OracleError,
    DEFAULT_ORACLE_LIMIT,
};
use crate::params::{approx_vertex_cover, neighborhood_decomposition, ParamError};
use crate::params::{validate_clique_partition, CliquePartitionWitness};
use crate::stream::DelayMeter;

/// Default cap on kernel components fed to the brute-force enumerator.
/// Kernels are parameter-bounded, so this guards against pathological
/// parameter values rather than input size.
pub const DEFAULT_KERNEL_LIMIT: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Vc,
    Nd,
    Pc,
    /// Direct oracle enumeration, no kernel.
    None,
}

impl Param {
    pub fn label(&self) -> &'static str {
        match self {
            Param::Vc => "vc",
            Param::Nd => "nd",
            Param::Pc => "pc",
            Param::None => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    All,
    Min,
    Max,
}

impl Variant {
    pub fn label(&self) -> &'static str {
        match self {
            Variant::All => "all",
            Variant::Min => "min",
            Variant::Max => "max",
        }
    }

    fn filter(&self, cuts: BTreeSet<EdgeCut>) -> BTreeSet<EdgeCut> {
        match self {
            Variant::All => cuts,
            Variant::Min => filter_minimal(&cuts),
            Variant::Max => filter_maximal(&cuts),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub oracle_limit: usize,
    pub kernel_limit: usize,
    /// Clique partition for `Param::Pc`; when absent an exact partition is
    /// computed for small graphs.
    pub partition: Option<Vec<Vec<usize>>>,
    /// Fall back to a greedy (non-minimum) clique partition when none is
    /// given and the graph is too large for the exact solver.
    pub greedy_partition: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            kernel_limit: DEFAULT_KERNEL_LIMIT,
            partition: None,
            greedy_partition: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("parameterization pc requires a clique partition for graphs this large")]
    MissingPartition,
}

/// Provenance and size record of one pipeline construction.
#[derive(Debug, Clone, Serialize)]
pub struct KernelInfo {
    pub param: String,
    pub variant: String,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    /// |S|, module count, or block count, depending on the parameter.
    pub param_size: Option<usize>,
    pub kernel_vertices: Option<usize>,
    pub kernel_solutions: usize,
    pub warnings: Vec<String>,
}

/// One kernel solution's lifted class, not yet consumed.
pub enum ClassStream {
    Fixed(std::vec::IntoIter<EdgeCut>),
    VcAll(vc_all::VcAllLift),
    Odometer(crate::stream::ClassOdometer),
}

impl Iterator for ClassStream {
    type Item = EdgeCut;

    fn next(&mut self) -> Option<EdgeCut> {
        match self {
            ClassStream::Fixed(it) => it.next(),
            ClassStream::VcAll(s) => s.next(),
            ClassStream::Odometer(s) => s.next(),
        }
    }
}

impl ClassStream {
    pub fn meter(&self) -> Option<DelayMeter> {
        match self {
            ClassStream::Fixed(_) => None,
            ClassStream::VcAll(s) => Some(s.meter()),
            ClassStream::Odometer(s) => Some(s.meter().clone()),
        }
    }
}

/// Builds the lifted class streams for every kernel solution, in
/// lexicographic kernel-solution order.
pub fn build_classes(
    g: &Graph,
    d: usize,
    param: Param,
    variant: Variant,
    opts: &Options,
) -> Result<(KernelInfo, Vec<ClassStream>), PipelineError> {
    let mut info = KernelInfo {
        param: param.label().into(),
        variant: variant.label().into(),
        n: g.n(),
        m: g.m(),
        d,
        param_size: None,
        kernel_vertices: None,
        kernel_solutions: 0,
        warnings: Vec::new(),
    };
    let mut classes: Vec<ClassStream> = Vec::new();
    match param {
        Param::None => {
            let sols = variant.filter(enumerate_all_bruteforce(g, d, opts.oracle_limit)?);
            info.kernel_solutions = sols.len();
            for f in sols {
                classes.push(ClassStream::Fixed(vec![f].into_iter()));
            }
        }
        Param::Vc => {
            let cover = approx_vertex_cover(g);
            info.param_size = Some(cover.cover.len());
            match variant {
                Variant::Min => {
                    let k = vc_min::kernelize_vc_min(g, &cover, d)?;
                    info.kernel_vertices = Some(k.h.n());
                    let sols =
                        filter_minimal(&enumerate_all_bruteforce(&k.h, d, opts.kernel_limit)?);
                    info.kernel_solutions = sols.len();
                    for f in &sols {
                        classes.push(ClassStream::Fixed(vc_min::lift_vc_min(&k, f)?.into_iter()));
                    }
                }
                Variant::All => {
                    let k = vc_all::kernelize_vc_all(g, &cover, d)?;
                    if k.identity_fallback {
                        info.warnings.push(
                            "kernel had no d-cut while one-sided cuts exist; \
                             fell back to the identity kernel"
                                .into(),
                        );
                    }
                    info.kernel_vertices = Some(k.h.n());
                    let sols = enumerate_all_bruteforce(&k.h, d, opts.kernel_limit)?;
                    info.kernel_solutions = sols.len();
                    for (i, f) in sols.iter().enumerate() {
                        classes.push(ClassStream::VcAll(vc_all::lift_vc_all(&k, f, i == 0)?));
                    }
                }
                Variant::Max => {
                    let k = vc_max::mark_vc(g, &cover, d)?;
                    info.kernel_vertices = Some(k.h.n());
                    let sols =
                        filter_maximal(&enumerate_all_bruteforce(&k.htilde, d, opts.kernel_limit)?);
                    info.kernel_solutions = sols.len();
                    for f in &sols {
                        // Cuts of the clique-free part must be cuts of the
                        // full kernel; a failure here means a pendant
                        // clique was split, which no d-cut may do.
                        if !is_d_cut(&k.h, d, f)? {
                            return Err(KernelError::InternalInvariant(
                                "kernel cut is not a d-cut of the clique-extended kernel".into(),
                            )
                            .into());
                        }
                        classes.push(ClassStream::Odometer(vc_max::enum_equivalent_max(&k, f)?));
                    }
                }
            }
        }
        Param::Nd => {
            let decomposition = neighborhood_decomposition(g);
            info.param_size = Some(decomposition.len());
            let k = nd::mark_nd(g, &decomposition, d)?;
            info.kernel_vertices = Some(k.h.n());
            let all = enumerate_all_bruteforce(&k.htilde, d, opts.kernel_limit)?;
            for f in &all {
                if !is_d_cut(&k.h, d, f)? {
                    return Err(KernelError::InternalInvariant(
                        "kernel cut is not a d-cut of the clique-extended kernel".into(),
                    )
                    .into());
                }
            }
            let sols = variant.filter(all);
            info.kernel_solutions = sols.len();
            for f in &sols {
                match variant {
                    Variant::Min => {
                        classes.push(ClassStream::Fixed(nd::lift_nd_min(&k, f)?.into_iter()))
                    }
                    Variant::All => classes.push(ClassStream::Odometer(nd::enum_nd(
                        &k,
                        f,
                        nd::NdEnumVariant::All,
                    )?)),
                    Variant::Max => classes.push(ClassStream::Odometer(nd::enum_nd(
                        &k,
                        f,
                        nd::NdEnumVariant::Max,
                    )?)),
                }
            }
        }
        Param::Pc => {
            let witness: CliquePartitionWitness = match &opts.partition {
                Some(blocks) => validate_clique_partition(g, blocks)?,
                None => match crate::params::exact_clique_partition(g, opts.oracle_limit.min(16)) {
                    Ok(w) => w,
                    Err(_) if opts.greedy_partition => {
                        info.warnings.push(
                            "using a greedy clique partition; block count is not minimum".into(),
                        );
                        crate::params::greedy_clique_partition(g)
                    }
                    Err(_) => return Err(PipelineError::MissingPartition),
                },
            };
            info.param_size = Some(witness.len());
            let k = pc::kernelize_pc(g, &witness, d)?;
            info.kernel_vertices = Some(k.gprime.n());
            let sols = variant.filter(enumerate_all_bruteforce(&k.gprime, d, opts.kernel_limit)?);
            info.kernel_solutions = sols.len();
            let lifted: Result<Vec<EdgeCut>, KernelError> =
                sols.iter().map(|f| pc::lift_pc(&k, f)).collect();
            for cut in lifted? {
                classes.push(ClassStream::Fixed(vec![cut].into_iter()));
            }
        }
    }
    Ok((info, classes))
}

/// Single-consumer stream over all lifted solutions, class by class.
pub struct PipelineStream {
    classes: std::vec::IntoIter<ClassStream>,
    current: Option<ClassStream>,
    meter: DelayMeter,
    pub info: KernelInfo,
}

impl Iterator for PipelineStream {
    type Item = EdgeCut;

    fn next(&mut self) -> Option<EdgeCut> {
        loop {
            match &mut self.current {
                None => {
                    let c = self.classes.next()?;
                    self.current = Some(c)
                },
                Some(c) => match c.next() {
                    Some(cut) => return Some(cut),
                    None => {
                        if let Some(m) = c.meter() {
                            self.meter.merge(&m);
                        }
                        self.current = None;
                    }
                },
            }
        }
    }
}

impl PipelineStream {
    /// Node-visit delay statistics of the instrumented classes consumed so
    /// far.
    pub fn meter(&self) -> DelayMeter {
        let mut m = self.meter.clone();
        if let Some(c) = &self.current {
            if let Some(cm) = c.meter() {
                m.merge(&cm);
            }
        }
        m
    }
}

/// Streaming enumeration of all solutions of `g` for the given variant.
pub fn enumerate_stream(
    g: &Graph,
    d: usize,
    param: Param,
    variant: Variant,
    opts: &Options,
) -> Result<PipelineStream, PipelineError> {
    let (info, classes) = build_classes(g, d, param, variant, opts)?;
    Ok(PipelineStream {
        classes: classes.into_iter(),
        current: None,
        meter: DelayMeter::default(),
        info,
    })
}

/// Collects every class separately (verification-scale inputs only).
pub fn collect_classes(
    g: &Graph,
    d: usize,
    param: Param,
    variant: Variant,
    opts: &Options,
) -> Result<(KernelInfo, Vec<Vec<EdgeCut>>), PipelineError> {
    let (info, classes) = build_classes(g, d, param, variant, opts)?;
    Ok((info, classes.into_iter().map(|c| c.collect()).collect()))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Mismatch { detail: String },
}

/// Outcome of checking the partition contract on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub instance: String,
    #[serde(flatten)]
    pub info: KernelInfo,
    pub solutions: usize,
    pub verdict: Verdict,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Checks that the lifted classes are pairwise disjoint and their union
/// equals the oracle's solution set.
pub fn verify_instance(
    instance: &str,
    g: &Graph,
    d: usize,
    param: Param,
    variant: Variant,
    opts: &Options,
    truth: Option<&BTreeSet<EdgeCut>>,
) -> Result<RunReport, PipelineError> {
    let owned;
    let truth = match truth {
        Some(t) => t,
        None => {
            owned = variant.filter(enumerate_all_bruteforce(g, d, opts.oracle_limit)?);
            &owned
        }
    };
    let (info, classes) = collect_classes(g, d, param, variant, opts)?;
    let (solutions, verdict) = check_partition(truth, &classes);
    Ok(RunReport {
        instance: instance.to_string(),
        solutions,
        info,
        verdict,
    })
}

/// The partition contract itself: classes nonempty and pairwise disjoint,
/// union exactly the solution set. Returns the number of distinct lifted
/// solutions and the verdict (with a witness cut on mismatch).
pub fn check_partition(
    truth: &BTreeSet<EdgeCut>,
    classes: &[Vec<EdgeCut>],
) -> (usize, Verdict) {
    let mut seen: BTreeSet<EdgeCut> = BTreeSet::new();
    for (ci, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return (
                seen.len(),
                Verdict::Mismatch {
                    detail: format!("kernel solution {ci} lifted to an empty class"),
                },
            );
        }
        for cut in class {
            if !seen.insert(cut.clone()) {
                return (
                    seen.len(),
                    Verdict::Mismatch {
                        detail: format!("duplicate across classes: {}", cut.to_json_line()),
                    },
                );
            }
        }
    }
    if &seen != truth {
        let missing = truth.difference(&seen).next();
        let extra = seen.difference(truth).next();
        let verdict = Verdict::Mismatch {
            detail: match (missing, extra) {
                (Some(w), _) => format!("missing solution {}", w.to_json_line()),
                (None, Some(w)) => format!("spurious solution {}", w.to_json_line()),
                _ => "set mismatch".into(),
            },
        };
        return (seen.len(), verdict);
    }
    (seen.len(), Verdict::Pass)
}

/// All labeled connected graphs on 1..=n_max vertices.
pub fn connected_graphs_up_to(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, e)| *e);
            let g = Graph::from_edges(n, edges).expect("valid mask graph");
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Seeded random graphs on 7 and 8 vertices with mixed densities.
/// Edgeless draws are redrawn: with no edges at all the exact kernel size
/// formulas (which vanish with the cover) and the partition contract
/// (which needs a two-vertex kernel to carry the empty cut) cannot both
/// hold, so such graphs are outside the verification corpus by
/// construction, like the connected exhaustive part.
pub fn random_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let densities = [0.15, 0.3, 0.5, 0.7, 0.85];
    (0..count)
        .map(|i| {
            let n = 7 + (i % 2);
            let p = densities[i % densities.len()];
            let mut salt = 0u64;
            loop {
                let g = crate::gen::random_gnp(n, p, seed.wrapping_add(i as u64 + salt * 7919));
                if g.m() > 0 {
                    return g;
                }
                salt += 1;
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::load_graph;

    fn all_params() -> [Param; 4] {
        [Param::Vc, Param::Nd, Param::Pc, Param::None]
    }

    fn all_variants() -> [Variant; 3] {
        [Variant::All, Variant::Min, Variant::Max]
    }

    #[test]
    fn p4_all_combos_pass() {
        let g = gen::path(4);
        let opts = Options::default();
        for d in 1..=2 {
            for param in all_params() {
                for variant in all_variants() {
                    let r =
                        verify_instance("p4", &g, d, param, variant, &opts, None).unwrap();
                    assert!(r.passed(), "{param:?} {variant:?} d={d}: {:?}", r.verdict);
                }
            }
        }
    }

    #[test]
    fn enumerate_matches_oracle_order_free() {
        let g = load_graph("7 6\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n").unwrap();
        let opts = Options::default();
        let truth = enumerate_all_bruteforce(&g, 1, 20).unwrap();
        for param in all_params() {
            let got: BTreeSet<EdgeCut> =
                enumerate_stream(&g, 1, param, Variant::All, &opts)
                    .unwrap()
                    .collect();
            assert_eq!(got, truth, "{param:?}");
        }
    }

    #[test]
    fn deterministic_output() {
        let g = gen::star_forest(3, 3);
        let opts = Options::default();
        let a: Vec<EdgeCut> = enumerate_stream(&g, 1, Param::Vc, Variant::Max, &opts)
            .unwrap()
            .collect();
        let b: Vec<EdgeCut> = enumerate_stream(&g, 1, Param::Vc, Variant::Max, &opts)
            .unwrap()
            .collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 27); // C(3,1)^3
    }

    #[test]
    fn star_counts_via_vc() {
        // K_{1,n} has exactly n matching cuts; the kernel keeps two
        // vertices and the canonical solution re-emits the rest.
        let g = gen::star(12);
        let opts = Options::default();
        let got: Vec<EdgeCut> = enumerate_stream(&g, 1, Param::Vc, Variant::All, &opts)
            .unwrap()
            .collect();
        assert_eq!(got.len(), 12);
    }

    #[test]
    fn oracle_limit_refusal_surfaces() {
        let g = gen::clique(10);
        let opts = Options {
            oracle_limit: 5,
            ..Options::default()
        };
        assert!(matches!(
            enumerate_stream(&g, 1, Param::None, Variant::All, &opts),
            Err(PipelineError::Oracle(OracleError::TooLarge { .. }))
        ));
    }

    #[test]
    fn corpus_generators() {
        let graphs = connected_graphs_up_to(4);
        // 1 + 1 + 4 + 38 labeled connected graphs.
        assert_eq!(graphs.len(), 44);
        assert_eq!(random_corpus(10, 1).len(), 10);
    }

    #[test]
    fn fault_injection_is_detected() {
        // A deliberately wrong "lifting": drop one solution and duplicate
        // another, then run the same set/disjointness checks verify uses.
        let g = gen::path(4);
        let truth = enumerate_all_bruteforce(&g, 1, 20).unwrap();
        let mut classes: Vec<Vec<EdgeCut>> = truth.iter().map(|f| vec![f.clone()]).collect();
        let dup_cut = classes[1][0].clone();
        classes[0].push(dup_cut); // duplicate
        let mut seen = BTreeSet::new();
        let mut dup = None;
        for class in &classes {
            for cut in class {
                if !seen.insert(cut.clone()) {
                    dup = Some(cut.clone());
                }
            }
        }
        assert!(dup.is_some());
    }
}
