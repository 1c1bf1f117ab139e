// Checking a yes-certificate: a weighted spanning tree and a budget.
//
// ```bash
// cargo run -p soapy-union --example verify_certificate
// ```

use soapy_union::cli::{parse_certificate, render_certificate};
use soapy_union::solvers::{solve_exact, verify_certificate, Certificate, SolveOptions};
use soapy_union::Instance;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = Instance::new([("a", vec![0, 4, 9]), ("b", vec![1, 5]), ("c", vec![20, 24])])?;
    let best = solve_exact(&x, &SolveOptions::default())?;
    let cert = Certificate::from_solution(&x, &best.shifts, best.value as u64)?;
    print!("{}", render_certificate(&cert));
    assert!(verify_certificate(&x, &cert)?);

    let text = "tree a b -1\ntree a c -20\nbudget 4\n";
    let tight = parse_certificate(text)?.into_certificate(&x, None)?;
    println!("budget {}: {}", tight.budget, verify_certificate(&x, &tight)?);

    let too_tight = Certificate::new(cert.tree.clone(), best.value as u64 - 1);
    assert!(!verify_certificate(&x, &too_tight)?);
    println!("budget {} rejected", too_tight.budget);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
