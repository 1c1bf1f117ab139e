use std::collections::VecDeque;

use crate::core::Instance;
use crate::error::{Error, Result};

use super::Graph;

/// A bipartition of the vertices with no edge across it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disconnection {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// Graph on the labels with an edge `{b, c}` whenever `X_b ∩ X_c ≠ ∅`.
pub fn intersection_graph(instance: &Instance) -> Graph {
    let mut g = Graph::with_vertices(instance.labels()).expect("instance labels are distinct");
    for i in 0..instance.len() {
        for j in i + 1..instance.len() {
            if sorted_intersect(instance.set_at(i), instance.set_at(j)) {
                g.add_edge_indices(i, j).expect("each pair visited once");
            }
        }
    }
    g
}

fn sorted_intersect(a: &[i64], b: &[i64]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Splits a disconnected graph into the component holding the
/// lexicographically smallest vertex and everything else.
///
/// Returns `None` for connected (or empty) graphs.
pub fn find_disconnection(g: &Graph) -> Option<Disconnection> {
    let components = g.components();
    if components.len() <= 1 {
        return None;
    }
    let smallest = (0..g.vertex_count())
        .min_by(|&a, &b| g.label(a).cmp(g.label(b)))
        .expect("non-empty graph");
    let mut in_left = vec![false; g.vertex_count()];
    let left_component = components
        .iter()
        .find(|c| c.contains(&smallest))
        .expect("every vertex has a component");
    for &v in left_component {
        in_left[v] = true;
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, &l) in in_left.iter().enumerate() {
        let label = g.label(v).to_owned();
        if l {
            left.push(label);
        } else {
            right.push(label);
        }
    }
    Some(Disconnection { left, right })
}

/// Breadth-first spanning tree rooted at the first vertex.
pub fn spanning_tree(g: &Graph) -> Result<Graph> {
    if let Some(d) = find_disconnection(g) {
        return Err(Error::Disconnected {
            left: d.left,
            right: d.right,
        });
    }
    let mut tree = Graph::with_vertices(g.vertices()).expect("labels are distinct");
    if g.vertex_count() == 0 {
        return Ok(tree);
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                tree.add_edge_indices(v, w)?;
                queue.push_back(w);
            }
        }
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(family: &[(&str, &[i64])]) -> Instance {
        Instance::new(family.iter().map(|(l, s)| (*l, s.iter().copied()))).unwrap()
    }

    #[test]
    fn intersection_graph_examples() {
        let g = intersection_graph(&inst(&[("a", &[0]), ("b", &[5])]));
        assert_eq!(g.edge_count(), 0);
        let g = intersection_graph(&inst(&[("a", &[0, 1]), ("b", &[1, 2])]));
        assert!(g.has_edge("a", "b"));
    }

    #[test]
    fn intersection_graph_matches_pairwise_hash_check() {
        let family: [(&str, &[i64]); 4] = [
            ("a", &[0, 4, 9]),
            ("b", &[1, 4]),
            ("c", &[2, 3, 9]),
            ("d", &[7]),
        ];
        let g = intersection_graph(&inst(&family));
        for (la, sa) in family {
            for (lb, sb) in family {
                if la == lb {
                    continue;
                }
                let hs: std::collections::HashSet<_> = sa.iter().collect();
                let meets = sb.iter().any(|x| hs.contains(x));
                assert_eq!(g.has_edge(la, lb), meets, "{la}-{lb}");
            }
        }
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn disconnection_examples() {
        let g = Graph::with_vertices(["b", "a"]).unwrap();
        assert_eq!(
            find_disconnection(&g),
            Some(Disconnection {
                left: vec!["a".into()],
                right: vec!["b".into()]
            })
        );
        let g = Graph::from_edges([("a", "b")]).unwrap();
        assert_eq!(find_disconnection(&g), None);
    }

    #[test]
    fn spanning_tree_of_a_tree_is_itself() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("b", "d")]).unwrap();
        assert_eq!(spanning_tree(&g).unwrap(), g);
    }

    #[test]
    fn spanning_tree_of_triangle() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let t = spanning_tree(&g).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.edge_count(), 2);
        assert!(t.edge_set().is_subset(&g.edge_set()));
    }

    #[test]
    fn spanning_tree_rejects_disconnected() {
        let g = Graph::with_vertices(["a", "b"]).unwrap();
        assert!(matches!(spanning_tree(&g), Err(Error::Disconnected { .. })));
    }
}
