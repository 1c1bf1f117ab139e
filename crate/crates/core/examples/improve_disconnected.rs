// Pulling apart components of the intersection graph back together.
//
// ```bash
// cargo run -p soapy-union --example improve_disconnected
// ```

use soapy_union::graphs::{find_disconnection, intersection_graph};
use soapy_union::solvers::{improve_disconnected, improve_to_fixed_point};
use soapy_union::{evaluate, Instance};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = Instance::new([("a", vec![0, 1]), ("b", vec![1, 5]), ("c", vec![3, 4, 9])])?;
    let spread = x.shifts_from_values(&[0, 100, -100]);
    let shifted = x.shifted(&spread)?;
    let split = find_disconnection(&intersection_graph(&shifted)).expect("sets are far apart");
    println!("{:?} | {:?}, value {}", split.left, split.right, evaluate(&x, &spread)?.value);

    let better = improve_disconnected(&x, &spread)?.expect("a disconnected vector improves");
    println!("one step: {better} -> {}", evaluate(&x, &better)?.value);

    let settled = improve_to_fixed_point(&x, &spread)?;
    let value = evaluate(&x, &settled)?.value;
    println!("fixed point: {settled} -> {value}");
    assert!(value < evaluate(&x, &spread)?.value);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
