// Seeded benchmark corpus as CSV, plus a cancelled search.
//
// ```bash
// cargo run --release -p soapy-union --example bench
// ```

use soapy_union::cli::bench;
use soapy_union::solvers::{solve_exact, CancelToken, SolveOptions};
use soapy_union::{Error, Instance};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let csv = bench(3, 6, &SolveOptions::default(), &mut std::io::stderr())?;
    print!("{csv}");
    assert_eq!(csv.lines().count(), 1 + 3 * 6);

    let token = CancelToken::new();
    token.cancel();
    let x = Instance::new([("a", vec![0, 1]), ("b", vec![2, 3]), ("c", vec![5])])?;
    match solve_exact(&x, &SolveOptions::default().with_cancel(token)) {
        Err(Error::Cancelled) => println!("cancelled before any candidate"),
        other => println!("finished anyway: {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
