//! Instance generators for tests, verification corpora, and benchmarks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// Complete graph on `n` vertices.
pub fn clique(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("valid clique")
}

/// Star with `leaves` leaves: vertex 0 is the center.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
}

/// A `k`-clique with `m` pendant leaves per clique vertex. Clique vertex
/// `i` owns leaves `k + i*m .. k + (i+1)*m`. For `k > 2d` the clique is
/// monochromatic and the maximal d-cut count is `C(m, d)^k`.
pub fn star_forest(k: usize, m: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    for i in 0..k {
        for j in 0..m {
            edges.push((i, k + i * m + j));
        }
    }
    Graph::from_edges(k + k * m, edges).expect("valid star forest")
}

/// The natural clique partition of [`star_forest`]: the clique plus one
/// singleton per leaf.
pub fn star_forest_partition(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut blocks = vec![(0..k).collect::<Vec<_>>()];
    blocks.extend((k..k + k * m).map(|v| vec![v]));
    blocks
}

/// Erdős–Rényi G(n, p) with a fixed seed.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Disjoint union of the inputs plus a fresh `2d`-clique joined to the
/// lowest vertex of each input. The result has a d-cut iff some input
/// does. Returns the graph and the id offset of each input part.
pub fn compose(parts: &[Graph], d: usize) -> (Graph, Vec<usize>) {
    assert!(d >= 1);
    let mut edges = Vec::new();
    let mut offsets = Vec::new();
    let mut base = 0usize;
    for g in parts {
        offsets.push(base);
        for (u, v) in g.edges() {
            edges.push((base + u, base + v));
        }
        base += g.n();
    }
    let clique: Vec<usize> = (base..base + 2 * d).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
    }
    for (g, &off) in parts.iter().zip(&offsets) {
        if g.n() > 0 {
            for &c in &clique {
                edges.push((off, c));
            }
        }
    }
    (
        Graph::from_edges(base + 2 * d, edges).expect("valid composition"),
        offsets,
    )
}
