// Exact minimum soapy union of a small family, with the winning tree.
//
// ```bash
// cargo run -p soapy-union --example solve_exact
// ```

use soapy_union::solvers::{solve_exact, SolveOptions};
use soapy_union::{difference_set, Instance};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let instance = Instance::new([("a", vec![0, 1, 2]), ("b", vec![0, 2]), ("c", vec![0, 3])])?;
    let diffs = difference_set(&instance)?;
    println!("U - U has {} elements: {diffs:?}", diffs.len());

    let result = solve_exact(&instance, &SolveOptions::default())?;
    println!("optimum {} at {} ({} candidates)", result.value, result.shifts, result.explored);
    assert_eq!(result.value, 4);

    if let Some(tree) = &result.certificate {
        for (b, c, w) in tree.weights().iter() {
            println!("  t[{b}] - t[{c}] = {w}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
