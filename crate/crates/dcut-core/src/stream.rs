//! Single-consumer solution streams with per-item delay instrumentation.
//!
//! Two enumeration shapes cover every lifting in this crate: a budgeted
//! backtracking over vertex subsets (legal extensions and one-sided cuts)
//! and an odometer over per-slot edge-set options (equivalence-class
//! expansion at bad subsets). Both yield each cut exactly once and track
//! how many search-tree nodes they visit between consecutive outputs.

use crate::graph::{EdgeCut, Graph};

/// Counts backtracking work between consecutive yields.
#[derive(Debug, Clone, Default)]
pub struct DelayMeter {
    yields: u64,
    nodes_since_yield: u64,
    max_nodes_between: u64,
    total_nodes: u64,
}

impl DelayMeter {
    pub(crate) fn node(&mut self) {
        self.nodes_since_yield += 1;
        self.total_nodes += 1;
    }

    pub(crate) fn emitted(&mut self) {
        self.yields += 1;
        self.max_nodes_between = self.max_nodes_between.max(self.nodes_since_yield);
        self.nodes_since_yield = 0;
    }

    pub fn yields(&self) -> u64 {
        self.yields
    }

    /// Largest number of nodes visited between two consecutive outputs
    /// (including before the first output).
    pub fn max_nodes_between(&self) -> u64 {
        self.max_nodes_between
    }

    pub fn total_nodes(&self) -> u64 {
        self.total_nodes
    }

    pub fn merge(&mut self, other: &DelayMeter) {
        self.yields += other.yields;
        self.max_nodes_between = self.max_nodes_between.max(other.max_nodes_between);
        self.total_nodes += other.total_nodes;
    }
}

/// Enumerates the subsets `R` of a candidate vertex set that respect
/// per-vertex capacities, yielding `base ∪ ⋃_{u ∈ R} star(u)` for each.
///
/// Moving a candidate across the cut turns all of its edges into crossing
/// edges, charging one unit to each neighbor. A subset is feasible when no
/// neighbor's remaining capacity goes negative; feasibility is hereditary,
/// so depth-first search with in-place charge/refund enumerates every
/// feasible subset exactly once, in ascending-vertex preorder.
pub struct BudgetedSubsetStream {
    g: Graph,
    base: EdgeCut,
    cands: Vec<usize>,
    capacity: Vec<isize>,
    chosen: Vec<usize>,
    meter: DelayMeter,
    state: SubsetState,
}

enum SubsetState {
    EmitRoot,
    Descend,
    Done,
}

impl BudgetedSubsetStream {
    /// `capacity[v]` is how many additional crossing edges vertex `v` may
    /// receive; candidates must already satisfy their own degree bound.
    pub fn new(
        g: Graph,
        base: EdgeCut,
        cands: Vec<usize>,
        capacity: Vec<isize>,
        skip_empty: bool,
    ) -> Self {
        debug_assert!(cands.windows(2).all(|w| w[0] < w[1]));
        BudgetedSubsetStream {
            g,
            base,
            cands,
            capacity,
            chosen: Vec::new(),
            meter: DelayMeter::default(),
            state: if skip_empty {
                SubsetState::Descend
            } else {
                SubsetState::EmitRoot
            },
        }
    }

    pub fn meter(&self) -> &DelayMeter {
        &self.meter
    }

    fn fits(&self, u: usize) -> bool {
        self.g.neighbors(u).iter().all(|&x| self.capacity[x] >= 1)
    }

    fn charge(&mut self, u: usize) {
        for &x in self.g.neighbors(u) {
            self.capacity[x] -= 1;
        }
    }

    fn refund(&mut self, u: usize) {
        for &x in self.g.neighbors(u) {
            self.capacity[x] += 1;
        }
    }

    fn current_cut(&self) -> EdgeCut {
        let mut edges: Vec<(usize, usize)> = self.base.edges().to_vec();
        for &i in &self.chosen {
            let u = self.cands[i];
            edges.extend(self.g.neighbors(u).iter().map(|&w| (u, w)));
        }
        EdgeCut::from_pairs(edges)
    }

    /// Advances to the next feasible subset in preorder; false when exhausted.
    fn advance(&mut self) -> bool {
        let mut start = self.chosen.last().map_or(0, |&i| i + 1);
        loop {
            let mut i = start;
            while i < self.cands.len() {
                if self.fits(self.cands[i]) {
                    self.charge(self.cands[i]);
                    self.chosen.push(i);
                    self.meter.node();
                    return true;
                }
                i += 1;
            }
            match self.chosen.pop() {
                None => return false,
                Some(j) => {
                    self.refund(self.cands[j]);
                    self.meter.node();
                    start = j + 1;
                }
            }
        }
    }
}

impl Iterator for BudgetedSubsetStream {
    type Item = EdgeCut;

    fn next(&mut self) -> Option<EdgeCut> {
        match self.state {
            SubsetState::Done => None,
            SubsetState::EmitRoot => {
                self.state = SubsetState::Descend;
                self.meter.node();
                let cut = self.current_cut();
                self.meter.emitted();
                Some(cut)
            }
            SubsetState::Descend => {
                if self.advance() {
                    let cut = self.current_cut();
                    self.meter.emitted();
                    Some(cut)
                } else {
                    self.state = SubsetState::Done;
                    None
                }
            }
        }
    }
}

/// Cartesian product of per-slot edge-set options, unioned with a base
/// edge set. Every combination is feasible by construction, so the delay
/// per item is the cost of assembling one cut.
pub struct ClassOdometer {
    base: EdgeCut,
    slots: Vec<Vec<EdgeCut>>,
    idx: Vec<usize>,
    done: bool,
    meter: DelayMeter,
}

impl ClassOdometer {
    /// Every slot must offer at least one option.
    pub fn new(base: EdgeCut, slots: Vec<Vec<EdgeCut>>) -> Self {
        assert!(slots.iter().all(|s| !s.is_empty()));
        let idx = vec![0; slots.len()];
        ClassOdometer {
            base,
            slots,
            idx,
            done: false,
            meter: DelayMeter::default(),
        }
    }

    pub fn meter(&self) -> &DelayMeter {
        &self.meter
    }
}

impl Iterator for ClassOdometer {
    type Item = EdgeCut;

    fn next(&mut self) -> Option<EdgeCut> {
        if self.done {
            return None;
        }
        self.meter.node();
        let mut cut = self.base.clone();
        for (slot, &i) in self.slots.iter().zip(&self.idx) {
            cut = cut.union(&slot[i]);
        }
        // advance
        let mut k = 0;
        loop {
            if k == self.idx.len() {
                self.done = true;
                break;
            }
            self.idx[k] += 1;
            if self.idx[k] < self.slots[k].len() {
                break;
            }
            self.idx[k] = 0;
            k += 1;
        }
        self.meter.emitted();
        Some(cut)
    }
}

/// Visits all `k`-element index combinations of `0..n` in lexicographic
/// order.
pub fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        visit(&combo);
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] < n - (k - i) {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn odometer_products() {
        let a = EdgeCut::from_pairs([(0, 1)]);
        let b = EdgeCut::from_pairs([(0, 2)]);
        let c = EdgeCut::from_pairs([(3, 4)]);
        let d = EdgeCut::from_pairs([(3, 5)]);
        let got: Vec<EdgeCut> =
            ClassOdometer::new(EdgeCut::empty(), vec![vec![a, b], vec![c, d]]).collect();
        assert_eq!(got.len(), 4);
        let set: std::collections::BTreeSet<_> = got.into_iter().collect();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn odometer_empty_slots() {
        let got: Vec<EdgeCut> = ClassOdometer::new(EdgeCut::from_pairs([(0, 1)]), vec![]).collect();
        assert_eq!(got, vec![EdgeCut::from_pairs([(0, 1)])]);
    }

    #[test]
    fn budgeted_star() {
        // Star center 0 with leaves 1..=3, each leaf movable, capacity d=1
        // at the center: subsets of size <= 1.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut cap = vec![0isize; 4];
        cap[0] = 1;
        let got: Vec<EdgeCut> =
            BudgetedSubsetStream::new(g, EdgeCut::empty(), vec![1, 2, 3], cap, false).collect();
        assert_eq!(got.len(), 4); // {}, {1}, {2}, {3}
        assert_eq!(got[0], EdgeCut::empty());
        assert_eq!(got[1], EdgeCut::from_pairs([(0, 1)]));
    }

    #[test]
    fn budgeted_counts_and_delay() {
        let n = 40;
        let g = Graph::from_edges(n + 1, (1..=n).map(|v| (0, v))).unwrap();
        let mut cap = vec![0isize; n + 1];
        cap[0] = 1;
        let mut s =
            BudgetedSubsetStream::new(g, EdgeCut::empty(), (1..=n).collect(), cap, true);
        let mut count = 0;
        while s.next().is_some() {
            count += 1;
        }
        assert_eq!(count, n);
        assert!(s.meter().max_nodes_between() <= (n + 1) as u64);
    }

    #[test]
    fn combinations_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
