use std::collections::BTreeSet;

use crate::core::Instance;
use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::ruler::{ruler, Ruler};

/// Label of the distinguished set in every reduced instance.
pub const ROOT_LABEL: &str = "root";

/// One edge of the source graph with its chosen endpoint order
/// (`y` the smaller vertex number, `z` the larger).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGadget {
    pub label: String,
    pub y: i64,
    pub z: i64,
}

/// A soapy-union instance built from a graph and a budget `k`.
///
/// Vertices are renumbered `1..=n`; `vertex_names[i - 1]` is the original
/// name of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub instance: Instance,
    pub n: usize,
    pub k: usize,
    /// `(n + 4)³`
    pub s: i64,
    /// The ruler of order `n + 4`.
    pub ruler: Ruler,
    /// `|X_root| + k`
    pub threshold: usize,
    /// Set when `k ≥ n`: the source is then trivially a yes-instance.
    pub trivially_yes: bool,
    pub edges: Vec<EdgeGadget>,
    pub vertex_names: Vec<String>,
    pub source: Graph,
}

impl ReducedInstance {
    pub fn root_set(&self) -> &[i64] {
        self.instance.set(ROOT_LABEL).expect("reduced instances have a root")
    }

    pub fn vertex_name(&self, vertex: i64) -> Option<&str> {
        usize::try_from(vertex)
            .ok()
            .and_then(|v| v.checked_sub(1))
            .and_then(|i| self.vertex_names.get(i))
            .map(String::as_str)
    }

    pub fn vertex_number(&self, name: &str) -> Option<i64> {
        self.vertex_names
            .iter()
            .position(|v| v == name)
            .map(|i| i as i64 + 1)
    }
}

// Numeric order when every name is an integer, lexicographic otherwise.
fn ordered_names(g: &Graph) -> Vec<String> {
    let mut names: Vec<String> = g.vertices().map(str::to_owned).collect();
    if names.iter().all(|v| v.parse::<i64>().is_ok()) {
        names.sort_by_key(|v| v.parse::<i64>().expect("checked numeric"));
    } else {
        names.sort();
    }
    names
}

/// Builds the root set from `V = [1, n]`, `s` and the ruler.
pub(crate) fn root_set(n: i64, s: i64, ruler: &[i64]) -> Result<Vec<i64>> {
    let overflow = || Error::Overflow("building the root gadget");
    let sn = s.checked_add(n).ok_or_else(overflow)?;
    let mut root = BTreeSet::new();
    for v in 1..=n {
        root.insert(v.checked_sub(sn).ok_or_else(overflow)?);
        root.insert(v.checked_add(sn).ok_or_else(overflow)?);
    }
    for &r in ruler {
        root.insert(r.checked_sub(s).ok_or_else(overflow)?);
        root.insert(r.checked_add(n).ok_or_else(overflow)?);
    }
    Ok(root.into_iter().collect())
}

pub(crate) fn edge_set(y: i64, z: i64, n: i64, s: i64, ruler: &[i64]) -> Result<Vec<i64>> {
    let overflow = || Error::Overflow("building an edge gadget");
    let mut set: BTreeSet<i64> = ruler.iter().copied().collect();
    set.insert(z.checked_sub(n).ok_or_else(overflow)?);
    set.insert(y.checked_add(s).ok_or_else(overflow)?);
    Ok(set.into_iter().collect())
}

/// Encodes a vertex-cover instance `(g, k)`.
///
/// The resulting instance has a shift vector with union size at most
/// `threshold` iff `g` has a vertex cover of size at most `k` (for `k < n`).
pub fn encode_vc(g: &Graph, k: usize) -> Result<ReducedInstance> {
    let names = ordered_names(g);
    let n = names.len();
    let order = n + 4;
    let ruler = ruler(order)?;
    let n_i = i64::try_from(n).map_err(|_| Error::Overflow("counting vertices"))?;
    let s = (order as i64)
        .checked_pow(3)
        .ok_or(Error::Overflow("computing the gadget offset"))?;

    let number = |name: &str| names.iter().position(|v| v == name).expect("vertex of g") as i64 + 1;
    let mut oriented: Vec<(i64, i64, String, String)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (na, nb) = (number(&a), number(&b));
            if na < nb {
                (na, nb, a, b)
            } else {
                (nb, na, b, a)
            }
        })
        .collect();
    oriented.sort();

    let root = root_set(n_i, s, ruler.elements())?;
    let root_len = root.len();
    let mut family = vec![(ROOT_LABEL.to_owned(), root)];
    let mut edges = Vec::with_capacity(oriented.len());
    for (y, z, ya, zb) in oriented {
        let label = format!("e({ya}-{zb})");
        family.push((label.clone(), edge_set(y, z, n_i, s, ruler.elements())?));
        edges.push(EdgeGadget { label, y, z });
    }

    Ok(ReducedInstance {
        instance: Instance::new(family)?,
        n,
        k,
        s,
        ruler,
        threshold: root_len + k,
        trivially_yes: k >= n,
        edges,
        vertex_names: names,
        source: g.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::aux::{aux_bound, is_aux};
    use num_rational::Ratio;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges([("1", "2")]).unwrap();
        let ri = encode_vc(&g, 1).unwrap();
        assert_eq!(ri.s, 216);
        assert_eq!(ri.ruler, ruler(6).unwrap());
        assert_eq!(ri.root_set().len(), 16);
        assert_eq!(ri.threshold, 17);
        assert!(!ri.trivially_yes);
        let e = ri.instance.set("e(1-2)").unwrap();
        // {z - n} ∪ R ∪ {y + s} = {0} ∪ R_6 ∪ {217}
        assert_eq!(e.len(), 8);
        assert!(e.contains(&0) && e.contains(&217));
    }

    #[test]
    fn triangle() {
        let g = Graph::from_edges([("1", "2"), ("2", "3"), ("1", "3")]).unwrap();
        let ri = encode_vc(&g, 2).unwrap();
        assert_eq!(ri.instance.len(), 4);
        assert_eq!(ri.s, 343);
        assert_eq!(ri.threshold, 22);
    }

    #[test]
    fn extreme_element_matches_aux_bound() {
        for n in 1..=6usize {
            let g = Graph::with_vertices((1..=n).map(|v| v.to_string())).unwrap();
            let ri = encode_vc(&g, 0).unwrap();
            let root = ri.root_set();
            assert_eq!(root.len(), 4 * n + 8);
            let n_i = n as i64;
            assert_eq!(*root.last().unwrap(), ri.s + 2 * n_i);
            assert_eq!(*root.first().unwrap(), 1 - ri.s - n_i);
            assert_eq!(aux_bound(root.len() as u64), Ratio::from_integer((ri.s + 2 * n_i) as i128));
            assert!(is_aux(&ri.instance));
        }
    }

    #[test]
    fn large_budget_is_flagged() {
        let g = Graph::from_edges([("1", "2")]).unwrap();
        assert!(encode_vc(&g, 2).unwrap().trivially_yes);
    }

    #[test]
    fn vertex_numbering_is_numeric() {
        let g = Graph::from_edges([("10", "9"), ("2", "9")]).unwrap();
        let ri = encode_vc(&g, 1).unwrap();
        assert_eq!(ri.vertex_names, vec!["2", "9", "10"]);
        assert_eq!(ri.edges[0].label, "e(2-9)");
        assert_eq!(ri.edges[1].label, "e(9-10)");
        assert_eq!((ri.edges[1].y, ri.edges[1].z), (2, 3));
    }
}
