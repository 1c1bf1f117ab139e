// Prüfer-decoded trees and the difference systems they carry.
//
// ```bash
// cargo run -p soapy-union --example weight_systems
// ```

use soapy_union::graphs::prufer::tree_count;
use soapy_union::graphs::{prufer_decode, solve_weight_system, weight_system_feasible, EdgeWeights, Graph, WeightedTree};
use soapy_union::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let labels = ["a", "b", "c", "d"];
    println!("{} labeled trees on {} vertices", tree_count(labels.len()), labels.len());

    let tree = prufer_decode(&labels, &["b", "b"])?;
    let mut weights = EdgeWeights::new();
    for (b, c) in tree.edges() {
        weights.set(&b, &c, 3)?;
    }
    let solved = WeightedTree::new(tree, weights)?.solve(("a", 0))?;
    println!("star around b: {solved}");

    // feasible only when the weights cancel around the cycle
    let triangle = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c")])?;
    let mut w = EdgeWeights::new();
    w.set("a", "b", 2)?;
    w.set("b", "c", 5)?;
    w.set("a", "c", 7)?;
    assert!(weight_system_feasible(&triangle, &w)?);
    println!("consistent triangle: {}", solve_weight_system(&triangle, &w, ("c", 0))?);

    w.set("a", "c", 6)?;
    match solve_weight_system(&triangle, &w, ("a", 0)) {
        Err(Error::Infeasible { cycle, weight }) => println!("inconsistent cycle {cycle:?} has weight {weight}"),
        other => panic!("expected an infeasible system, got {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
