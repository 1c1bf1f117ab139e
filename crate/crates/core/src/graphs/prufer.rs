use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

use super::Graph;

/// Decodes a Prüfer code over `0..n` into the edges of the labeled tree it
/// encodes. Each edge is returned as `(i, j)` with `i < j`.
///
/// The caller guarantees `n >= 2`, `code.len() == n - 2` and every entry `< n`.
pub fn decode_indices(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert!(n >= 2 && code.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u.min(v), u.max(v)));
    edges
}

/// The `index`-th code of length `n - 2` over `0..n` in lexicographic order.
pub fn code_from_index(n: usize, mut index: u64) -> Vec<usize> {
    let len = n.saturating_sub(2);
    let mut code = vec![0; len];
    for slot in code.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    code
}

/// Number of labeled trees on `n` vertices, `n^(n-2)` (and 1 for `n = 1`).
pub fn tree_count(n: usize) -> u128 {
    if n <= 2 {
        return 1;
    }
    (n as u128).pow((n - 2) as u32)
}

/// Decodes a Prüfer code written over `alphabet` into a tree on those labels.
pub fn prufer_decode<A, C>(alphabet: &[A], code: &[C]) -> Result<Graph>
where
    A: AsRef<str>,
    C: AsRef<str>,
{
    let n = alphabet.len();
    if n < 2 {
        return Err(Error::InvalidPrufer(format!(
            "alphabet must have at least 2 labels, got {n}"
        )));
    }
    if code.len() != n - 2 {
        return Err(Error::InvalidPrufer(format!(
            "code length {} for {n} labels, expected {}",
            code.len(),
            n - 2
        )));
    }
    let mut g = Graph::with_vertices(alphabet.iter().map(|a| a.as_ref()))?;
    let indices = code
        .iter()
        .map(|c| {
            g.index_of(c.as_ref())
                .ok_or_else(|| Error::InvalidPrufer(format!("unknown label `{}`", c.as_ref())))
        })
        .collect::<Result<Vec<_>>>()?;
    for (i, j) in decode_indices(n, &indices) {
        g.add_edge_indices(i, j)?;
    }
    Ok(g)
}
