use std::collections::{BTreeMap, VecDeque};

use crate::core::ShiftVector;
use crate::error::{Error, Result};

use super::graph::canonical;
use super::{find_disconnection, Graph};

/// Antisymmetric edge weights `w(b, c) = -w(c, b)`.
///
/// One entry is stored per edge, oriented from the smaller label to the
/// larger; the sign is applied on lookup.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeWeights {
    weights: BTreeMap<(String, String), i64>,
}

impl EdgeWeights {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets `w(b, c) = weight` (and hence `w(c, b) = -weight`).
    pub fn set(&mut self, b: &str, c: &str, weight: i64) -> Result<()> {
        let stored = if b <= c {
            weight
        } else {
            weight
                .checked_neg()
                .ok_or(Error::Overflow("negating an edge weight"))?
        };
        self.weights.insert(canonical(b, c), stored);
        Ok(())
    }

    pub fn get(&self, b: &str, c: &str) -> Option<i64> {
        let w = *self.weights.get(&canonical(b, c))?;
        Some(if b <= c { w } else { -w })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Stored entries `((b, c), w(b, c))` with `b < c`.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, i64)> + '_ {
        self.weights
            .iter()
            .map(|((b, c), &w)| (b.as_str(), c.as_str(), w))
    }

    fn check_matches(&self, g: &Graph) -> Result<()> {
        let edges = g.edge_set();
        if let Some((b, c)) = edges.iter().find(|e| !self.weights.contains_key(*e)) {
            return Err(Error::WeightMismatch(format!("edge {{{b}, {c}}} has no weight")));
        }
        if let Some(((b, c), _)) = self.weights.iter().find(|(e, _)| !edges.contains(*e)) {
            return Err(Error::WeightMismatch(format!("{{{b}, {c}}} is not an edge")));
        }
        Ok(())
    }
}

/// A tree on a label set together with antisymmetric edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    tree: Graph,
    weights: EdgeWeights,
}

impl WeightedTree {
    pub fn new(tree: Graph, weights: EdgeWeights) -> Result<Self> {
        if !tree.is_tree() {
            return Err(Error::NotATree(format!(
                "{} vertices, {} edges, connected: {}",
                tree.vertex_count(),
                tree.edge_count(),
                tree.is_connected()
            )));
        }
        weights.check_matches(&tree)?;
        Ok(Self { tree, weights })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn weights(&self) -> &EdgeWeights {
        &self.weights
    }

    /// The unique solution with `t_label = value`.
    pub fn solve(&self, anchor: (&str, i64)) -> Result<ShiftVector> {
        solve_weight_system(&self.tree, &self.weights, anchor)
    }
}

struct Propagation {
    values: Vec<Option<i64>>,
    parent: Vec<Option<usize>>,
    conflict: Option<(usize, usize)>,
}

// Breadth-first propagation of `t_c = t_b - w(b, c)` from each root; records
// the first non-tree edge whose equation fails.
fn propagate(g: &Graph, weights: &EdgeWeights, roots: &[(usize, i64)]) -> Result<Propagation> {
    let n = g.vertex_count();
    let mut values = vec![None; n];
    let mut parent = vec![None; n];
    let mut conflict = None;
    for &(root, value) in roots {
        if values[root].is_some() {
            continue;
        }
        values[root] = Some(value);
        let mut queue = VecDeque::from([root]);
        while let Some(b) = queue.pop_front() {
            let tb = values[b].expect("queued vertices have values");
            for c in g.neighbors(b) {
                let w = weights
                    .get(g.label(b), g.label(c))
                    .expect("weights checked against edges");
                let expected = tb
                    .checked_sub(w)
                    .ok_or(Error::Overflow("propagating edge weights"))?;
                match values[c] {
                    None => {
                        values[c] = Some(expected);
                        parent[c] = Some(b);
                        queue.push_back(c);
                    }
                    Some(tc) if tc != expected && conflict.is_none() => conflict = Some((b, c)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Propagation {
        values,
        parent,
        conflict,
    })
}

/// Whether some `t` satisfies `t_b - t_c = w(b, c)` on every edge, i.e.
/// every cycle has total weight zero.
pub fn weight_system_feasible(g: &Graph, weights: &EdgeWeights) -> Result<bool> {
    weights.check_matches(g)?;
    let roots: Vec<(usize, i64)> = (0..g.vertex_count()).map(|v| (v, 0)).collect();
    Ok(propagate(g, weights, &roots)?.conflict.is_none())
}

/// Solves `t_b - t_c = w(b, c)` on a connected graph with `t_anchor = u`.
pub fn solve_weight_system(
    g: &Graph,
    weights: &EdgeWeights,
    anchor: (&str, i64),
) -> Result<ShiftVector> {
    weights.check_matches(g)?;
    let root = g
        .index_of(anchor.0)
        .ok_or_else(|| Error::UnknownVertex(anchor.0.to_owned()))?;
    if let Some(d) = find_disconnection(g) {
        return Err(Error::Disconnected {
            left: d.left,
            right: d.right,
        });
    }
    let p = propagate(g, weights, &[(root, anchor.1)])?;
    if let Some((b, c)) = p.conflict {
        return Err(violated_cycle(g, weights, &p.parent, b, c));
    }
    ShiftVector::new(
        p.values
            .iter()
            .enumerate()
            .map(|(v, t)| (g.label(v), t.expect("connected graph fully reached"))),
    )
}

// Closes the tree paths from `b` and `c` with the edge `(b, c)`.
fn violated_cycle(g: &Graph, weights: &EdgeWeights, parent: &[Option<usize>], b: usize, c: usize) -> Error {
    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    };
    let pb = ancestors(b);
    let pc = ancestors(c);
    let meet = *pb
        .iter()
        .find(|v| pc.contains(v))
        .expect("same component shares the root");
    // c -> ... -> meet -> ... -> b -> c
    let mut walk: Vec<usize> = pc.iter().copied().take_while(|&v| v != meet).collect();
    walk.push(meet);
    let down: Vec<usize> = pb.iter().copied().take_while(|&v| v != meet).collect();
    walk.extend(down.into_iter().rev());
    walk.push(c);
    let weight = walk
        .windows(2)
        .map(|e| weights.get(g.label(e[0]), g.label(e[1])).unwrap_or(0))
        .fold(0i64, i64::wrapping_add);
    Error::Infeasible {
        cycle: walk.iter().map(|&v| g.label(v).to_owned()).collect(),
        weight,
    }
}
