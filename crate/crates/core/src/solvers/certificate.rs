use crate::core::{difference_set, evaluate, Instance, ShiftVector};
use crate::error::{Error, Result};
use crate::graphs::{intersection_graph, spanning_tree, EdgeWeights, WeightedTree};

/// Witness for "some shift vector achieves a union of size at most `budget`":
/// a weighted tree on the labels whose weights are differences of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub tree: WeightedTree,
    pub budget: u64,
}

impl Certificate {
    pub fn new(tree: WeightedTree, budget: u64) -> Self {
        Self { tree, budget }
    }

    /// Builds a certificate from a solution whose shifted sets have a
    /// connected intersection graph, using a spanning tree of that graph
    /// weighted by `t_b - t_c`.
    pub fn from_solution(instance: &Instance, shifts: &ShiftVector, budget: u64) -> Result<Self> {
        let shifted = instance.shifted(shifts)?;
        let tree = spanning_tree(&intersection_graph(&shifted))?;
        let mut weights = EdgeWeights::new();
        for (b, c) in tree.edges() {
            let tb = shifts.get(&b).expect("domain checked by shifted");
            let tc = shifts.get(&c).expect("domain checked by shifted");
            let w = tb
                .checked_sub(tc)
                .ok_or(Error::Overflow("computing certificate weights"))?;
            weights.set(&b, &c, w)?;
        }
        Ok(Self {
            tree: WeightedTree::new(tree, weights)?,
            budget,
        })
    }
}

/// Accepts iff every weight lies in `U - U` and the tree's solution achieves
/// a union of size at most the budget.
pub fn verify_certificate(instance: &Instance, cert: &Certificate) -> Result<bool> {
    let tree = cert.tree.tree();
    let mismatch = tree.vertex_count() != instance.len()
        || instance.labels().any(|l| !tree.contains(l));
    if mismatch {
        return Err(Error::CertificateMismatch(format!(
            "tree has {} vertices, instance has {} labels",
            tree.vertex_count(),
            instance.len()
        )));
    }
    let diffs = difference_set(instance)?;
    if cert
        .tree
        .weights()
        .iter()
        .any(|(_, _, w)| diffs.binary_search(&w).is_err())
    {
        return Ok(false);
    }
    let shifts = cert.tree.solve((instance.label(0), 0))?;
    let shifts = ShiftVector::new(instance.labels().map(|l| (l, shifts.get(l).expect("tree spans labels"))))?;
    Ok(evaluate(instance, &shifts)?.value as u64 <= cert.budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::solvers::{solve_exact, SolveOptions};

    fn inst(family: &[(&str, &[i64])]) -> Instance {
        Instance::new(family.iter().map(|(l, s)| (*l, s.iter().copied()))).unwrap()
    }

    #[test]
    fn optimum_certificate_is_tight() {
        let x = inst(&[("a", &[0, 1, 3]), ("b", &[0, 2]), ("c", &[0, 3])]);
        let r = solve_exact(&x, &SolveOptions::default()).unwrap();
        let tree = r.certificate.unwrap();
        let k = r.value as u64;
        assert!(verify_certificate(&x, &Certificate::new(tree.clone(), k)).unwrap());
        assert!(!verify_certificate(&x, &Certificate::new(tree, k - 1)).unwrap());
    }

    #[test]
    fn weight_outside_difference_set_fails() {
        let x = inst(&[("a", &[0, 1]), ("b", &[0, 1])]);
        let mut w = EdgeWeights::new();
        w.set("a", "b", 50).unwrap();
        let tree = WeightedTree::new(Graph::from_edges([("a", "b")]).unwrap(), w).unwrap();
        assert!(!verify_certificate(&x, &Certificate::new(tree, 100)).unwrap());
    }

    #[test]
    fn label_mismatch_is_an_error() {
        let x = inst(&[("a", &[0]), ("c", &[0])]);
        let mut w = EdgeWeights::new();
        w.set("a", "b", 0).unwrap();
        let tree = WeightedTree::new(Graph::from_edges([("a", "b")]).unwrap(), w).unwrap();
        assert!(matches!(
            verify_certificate(&x, &Certificate::new(tree, 1)),
            Err(Error::CertificateMismatch(_))
        ));
    }

    #[test]
    fn from_solution_round_trips() {
        let x = inst(&[("a", &[0, 1]), ("b", &[10, 11]), ("c", &[4])]);
        let t = ShiftVector::new([("a", 0), ("b", -10), ("c", -4)]).unwrap();
        let cert = Certificate::from_solution(&x, &t, 2).unwrap();
        assert!(verify_certificate(&x, &cert).unwrap());
    }
}
