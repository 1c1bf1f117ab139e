// Encoding vertex cover as soapy union, solving, and reading a cover back.
//
// ```bash
// cargo run -p soapy-union --example vertex_cover_reduction
// ```

use soapy_union::graphs::Graph;
use soapy_union::reductions::{
    construct_solution_from_cover, decode_cover, encode_vc, is_vertex_cover, minimum_vertex_covers,
};
use soapy_union::solvers::{solve_exact, SolveOptions};
use soapy_union::evaluate;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let path = Graph::from_edges([("1", "2"), ("2", "3")])?;
    let (tau, covers) = minimum_vertex_covers(&path);
    println!("tau = {tau}, minimum covers {covers:?}");

    let ri = encode_vc(&path, tau)?;
    println!(
        "{} sets, s = {}, |root| = {}, threshold {}",
        ri.instance.len(),
        ri.s,
        ri.root_set().len(),
        ri.threshold
    );

    // completeness: a cover gives shifts meeting the threshold
    let shifts = construct_solution_from_cover(&ri, &covers[0])?;
    assert_eq!(evaluate(&ri.instance, &shifts)?.value, ri.threshold);

    let best = solve_exact(&ri.instance, &SolveOptions::default())?;
    let cover = decode_cover(&ri, &best.shifts)?;
    println!("optimum {} decodes to {cover:?}", best.value);
    assert!(is_vertex_cover(&path, &cover) && cover.len() == tau);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
