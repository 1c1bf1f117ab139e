//! Seeded random instances and graphs for tests, benchmarks and examples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::core::Instance;
use crate::graphs::Graph;

/// Shape of a random instance.
#[derive(Debug, Clone, Copy)]
pub struct InstanceShape {
    pub min_labels: usize,
    pub max_labels: usize,
    /// Elements are drawn uniformly from `lo..=hi`.
    pub lo: i64,
    pub hi: i64,
    pub max_set_len: usize,
}

impl Default for InstanceShape {
    fn default() -> Self {
        Self {
            min_labels: 2,
            max_labels: 4,
            lo: 0,
            hi: 10,
            max_set_len: 4,
        }
    }
}

/// Labels are `x0, x1, ...`; each set has between 1 and `max_set_len`
/// distinct elements.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, shape: InstanceShape) -> Instance {
    let labels = rng.gen_range(shape.min_labels..=shape.max_labels);
    let width = (shape.hi - shape.lo + 1) as usize;
    let family = (0..labels).map(|i| {
        let len = rng.gen_range(1..=shape.max_set_len.min(width).max(1));
        let mut pool: Vec<i64> = (shape.lo..=shape.hi).collect();
        pool.shuffle(rng);
        pool.truncate(len);
        (format!("x{i}"), pool)
    });
    Instance::new(family.collect::<Vec<_>>()).expect("generated sets are non-empty")
}

/// Erdős–Rényi graph on vertices `1..=n` with edge probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices((1..=n).map(|v| v.to_string())).expect("distinct");
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge_indices(i, j).expect("each pair once");
            }
        }
    }
    g
}

/// Random graph on `1..=n` with exactly `m` edges.
pub fn random_graph_with_edges<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    let mut g = Graph::with_vertices((1..=n).map(|v| v.to_string())).expect("distinct");
    for (i, j) in pairs.into_iter().take(m) {
        g.add_edge_indices(i, j).expect("each pair once");
    }
    g
}

/// Random cubic graph on `1..=n` by the pairing model, rejecting pairings
/// with loops or parallel edges. `n` must be even and at least 4.
pub fn random_cubic_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Option<Graph> {
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| [v; 3]).collect();
    loop {
        points.shuffle(rng);
        let mut g = Graph::with_vertices((1..=n).map(|v| v.to_string())).expect("distinct");
        if points
            .chunks(2)
            .all(|pair| g.add_edge_indices(pair[0], pair[1]).is_ok())
        {
            return Some(g);
        }
    }
}
