use std::collections::VecDeque;

use crate::core::counter::UnionCounter;
use crate::core::{difference_set, Instance};
use crate::error::{Error, Result};
use crate::graphs::prufer::{code_from_index, decode_indices, tree_count};
use crate::graphs::{EdgeWeights, Graph, WeightedTree};

use super::search::{minimize, Space};
use super::{Method, SolveOptions, SolveResult};

/// Number of (tree, weights) pairs the exact solver enumerates:
/// `|A|^(|A|-2) * |U-U|^(|A|-1)`, saturating at `u128::MAX`.
pub fn search_space_size(labels: usize, differences: usize) -> u128 {
    if labels <= 1 {
        return 1;
    }
    (differences as u128)
        .checked_pow((labels - 1) as u32)
        .and_then(|w| w.checked_mul(tree_count(labels)))
        .unwrap_or(u128::MAX)
}

/// Every labeled tree on `0..n` paired with every weight tuple drawn from
/// the difference set, anchored at vertex 0 with shift 0.
struct TreeSpace {
    n: usize,
    diffs: Vec<i64>,
    per_code: u64,
    codes: u64,
}

/// One propagation step: `t[child] = t[parent] ∓ w[edge]`.
#[derive(Clone, Copy)]
struct Step {
    child: usize,
    parent: usize,
    edge: usize,
    parent_is_low: bool,
}

impl TreeSpace {
    fn tree(&self, code_index: u64) -> (Vec<(usize, usize)>, Vec<Step>) {
        let edges = decode_indices(self.n, &code_from_index(self.n, code_index));
        let mut adjacent = vec![Vec::new(); self.n];
        for (e, &(lo, hi)) in edges.iter().enumerate() {
            adjacent[lo].push((hi, e));
            adjacent[hi].push((lo, e));
        }
        let mut steps = Vec::with_capacity(self.n - 1);
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adjacent[v] {
                if !seen[w] {
                    seen[w] = true;
                    steps.push(Step {
                        child: w,
                        parent: v,
                        edge: e,
                        parent_is_low: v < w,
                    });
                    queue.push_back(w);
                }
            }
        }
        (edges, steps)
    }

    fn digits(&self, mut tuple_index: u64) -> Vec<usize> {
        let base = self.diffs.len() as u64;
        let mut digits = vec![0; self.n - 1];
        for d in digits.iter_mut().rev() {
            *d = (tuple_index % base) as usize;
            tuple_index /= base;
        }
        digits
    }

    fn fill(&self, steps: &[Step], digits: &[usize], shifts: &mut [i64]) {
        shifts[0] = 0;
        for s in steps {
            // w(low, high) = t_low - t_high
            let w = self.diffs[digits[s.edge]];
            shifts[s.child] = if s.parent_is_low {
                shifts[s.parent] - w
            } else {
                shifts[s.parent] + w
            };
        }
    }
}

impl Space for TreeSpace {
    fn len(&self) -> u64 {
        self.codes * self.per_code
    }

    fn visit(&self, start: u64, end: u64, f: &mut dyn FnMut(u64, &[i64])) {
        let base = self.diffs.len();
        let mut code = start / self.per_code;
        let (_, mut steps) = self.tree(code);
        let mut digits = self.digits(start % self.per_code);
        let mut shifts = vec![0i64; self.n];
        for index in start..end {
            self.fill(&steps, &digits, &mut shifts);
            f(index, &shifts);
            let mut pos = digits.len();
            loop {
                if pos == 0 {
                    code += 1;
                    if code < self.codes {
                        steps = self.tree(code).1;
                    }
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < base {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
}

/// Globally optimal shifts by enumerating every spanning tree on the labels
/// and every weight assignment drawn from `U - U`.
///
/// Ties are broken towards the lexicographically smallest normalized shift
/// vector. Refuses with [`Error::GuardLimit`] when the enumeration exceeds
/// `opts.guard_limit`.
pub fn solve_exact(instance: &Instance, opts: &SolveOptions) -> Result<SolveResult> {
    let n = instance.len();
    let diffs = difference_set(instance)?;
    let count = search_space_size(n, diffs.len());
    if count > opts.guard_limit {
        return Err(Error::GuardLimit {
            count,
            limit: opts.guard_limit,
        });
    }
    if n == 1 {
        let tree = Graph::with_vertices(instance.labels())?;
        return Ok(SolveResult {
            shifts: instance.zero_shifts(),
            value: instance.set_at(0).len(),
            method: Method::Exact,
            explored: 1,
            optimal: true,
            certificate: Some(WeightedTree::new(tree, EdgeWeights::new())?),
        });
    }

    let span = diffs.last().copied().unwrap_or(0);
    let max_shift = span
        .checked_mul((n - 1) as i64)
        .ok_or(Error::Overflow("bounding tree shifts"))?;
    let counter = UnionCounter::new(instance.set_vecs(), max_shift)?;
    let space = TreeSpace {
        n,
        per_code: (diffs.len() as u64).pow((n - 1) as u32),
        codes: tree_count(n) as u64,
        diffs,
    };
    let outcome = minimize(&space, &counter, opts);
    let best = outcome.best.ok_or(Error::Cancelled)?;

    let (edges, _) = space.tree(best.index / space.per_code);
    let digits = space.digits(best.index % space.per_code);
    let mut tree = Graph::with_vertices(instance.labels())?;
    let mut weights = EdgeWeights::new();
    for (e, &(lo, hi)) in edges.iter().enumerate() {
        tree.add_edge_indices(lo, hi)?;
        weights.set(instance.label(lo), instance.label(hi), space.diffs[digits[e]])?;
    }

    Ok(SolveResult {
        shifts: instance.shifts_from_values(&best.shifts),
        value: best.value,
        method: Method::Exact,
        explored: outcome.explored,
        optimal: !outcome.cancelled,
        certificate: Some(WeightedTree::new(tree, weights)?),
    })
}
