use std::collections::BTreeSet;

use crate::core::{evaluate, ShiftVector};
use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::encode::{ReducedInstance, ROOT_LABEL};

pub fn is_vertex_cover(g: &Graph, cover: &BTreeSet<String>) -> bool {
    g.edges()
        .iter()
        .all(|(a, b)| cover.contains(a) || cover.contains(b))
}

/// Minimum cover size and every cover of that size, by exhaustive search
/// over vertex subsets. Intended for graphs with at most ~20 vertices.
pub fn minimum_vertex_covers(g: &Graph) -> (usize, Vec<BTreeSet<String>>) {
    let n = g.vertex_count();
    assert!(n < 31, "brute-force cover search is limited to small graphs");
    let edges = g.edge_indices();
    let mut best = usize::MAX;
    let mut covers = Vec::new();
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > best || !edges.iter().all(|&(i, j)| mask >> i & 1 == 1 || mask >> j & 1 == 1) {
            continue;
        }
        if size < best {
            best = size;
            covers.clear();
        }
        covers.push(
            (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| g.label(v).to_owned())
                .collect(),
        );
    }
    (best, covers)
}

/// Shifts realizing a union of size at most `threshold - k + |cover|`:
/// the root stays put, an edge set moves by `-s` when its smaller endpoint
/// is in the cover and by `+n` otherwise.
pub fn construct_solution_from_cover(ri: &ReducedInstance, cover: &BTreeSet<String>) -> Result<ShiftVector> {
    if let Some(v) = cover.iter().find(|v| !ri.source.contains(v)) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    let mut shifts = vec![(ROOT_LABEL.to_owned(), 0)];
    let n = ri.n as i64;
    for e in &ri.edges {
        let y = ri.vertex_name(e.y).expect("edge endpoints are vertices");
        let z = ri.vertex_name(e.z).expect("edge endpoints are vertices");
        let t = if cover.contains(y) {
            -ri.s
        } else if cover.contains(z) {
            n
        } else {
            return Err(Error::NotACover(y.to_owned(), z.to_owned()));
        };
        shifts.push((e.label.clone(), t));
    }
    ShiftVector::new(shifts)
}

/// Recovers a vertex cover from any shift vector on a reduced instance.
///
/// With `k = value - |X_root|`: all vertices when `k ≥ n`, otherwise the
/// vertices in `[1, n]` covered by the edge sets once the root is moved
/// back to 0. In the latter case the cover has at most `k` vertices.
pub fn decode_cover(ri: &ReducedInstance, shifts: &ShiftVector) -> Result<BTreeSet<String>> {
    let value = evaluate(&ri.instance, shifts)?.value as i64;
    let root = ri.root_set();
    let k = value - root.len() as i64;
    let n = ri.n as i64;
    if k >= n {
        return Ok(ri.vertex_names.iter().cloned().collect());
    }
    let t_root = shifts.get(ROOT_LABEL).expect("domain checked by evaluate");
    let overflow = || Error::Overflow("decoding a cover");
    let mut cover = BTreeSet::new();
    for e in &ri.edges {
        let t = shifts
            .get(&e.label)
            .expect("domain checked by evaluate")
            .checked_sub(t_root)
            .ok_or_else(overflow)?;
        for &x in ri.instance.set(&e.label).expect("edge label") {
            let moved = x.checked_add(t).ok_or_else(overflow)?;
            if (1..=n).contains(&moved) && root.binary_search(&moved).is_err() {
                cover.insert(ri.vertex_name(moved).expect("in range").to_owned());
            }
        }
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::encode_vc;

    fn set(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_edge_cover() {
        let g = Graph::from_edges([("1", "2")]).unwrap();
        let ri = encode_vc(&g, 1).unwrap();
        let t = construct_solution_from_cover(&ri, &set(&["1"])).unwrap();
        assert_eq!(t.get("e(1-2)"), Some(-216));
        let value = evaluate(&ri.instance, &t).unwrap().value;
        assert!(value <= 17);
        assert_eq!(decode_cover(&ri, &t).unwrap(), set(&["1"]));
    }

    #[test]
    fn triangle_cover() {
        let g = Graph::from_edges([("1", "2"), ("2", "3"), ("1", "3")]).unwrap();
        let ri = encode_vc(&g, 2).unwrap();
        let t = construct_solution_from_cover(&ri, &set(&["1", "2"])).unwrap();
        assert!(evaluate(&ri.instance, &t).unwrap().value <= 22);
        let decoded = decode_cover(&ri, &t).unwrap();
        assert!(is_vertex_cover(&g, &decoded));
        assert!(decoded.is_subset(&set(&["1", "2"])));
    }

    #[test]
    fn uncovered_edge_is_named() {
        let g = Graph::from_edges([("1", "2"), ("3", "4")]).unwrap();
        let ri = encode_vc(&g, 1).unwrap();
        assert_eq!(
            construct_solution_from_cover(&ri, &set(&["1"])).unwrap_err(),
            Error::NotACover("3".into(), "4".into())
        );
    }

    #[test]
    fn terrible_shifts_still_decode_to_a_cover() {
        let g = Graph::from_edges([("1", "2")]).unwrap();
        let ri = encode_vc(&g, 1).unwrap();
        let c = decode_cover(&ri, &ri.instance.zero_shifts()).unwrap();
        assert_eq!(c, set(&["1", "2"]));
    }

    #[test]
    fn brute_force_covers() {
        let g = Graph::from_edges([("1", "2"), ("2", "3"), ("1", "3")]).unwrap();
        let (tau, covers) = minimum_vertex_covers(&g);
        assert_eq!(tau, 2);
        assert_eq!(covers.len(), 3);
        let empty = Graph::with_vertices(["1", "2"]).unwrap();
        assert_eq!(minimum_vertex_covers(&empty), (0, vec![BTreeSet::new()]));
    }
}
