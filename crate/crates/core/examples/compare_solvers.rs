// Exact search, the brute-force box oracle and the greedy heuristic side by side.
//
// ```bash
// cargo run -p soapy-union --example compare_solvers
// ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use soapy_union::generators::{random_instance, InstanceShape};
use soapy_union::solvers::{solve_exact, solve_greedy, solve_oracle, SolveOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let opts = SolveOptions::default();
    println!("{:>4} {:>6} {:>6} {:>6}", "#", "exact", "oracle", "greedy");
    for i in 0..8 {
        let x = random_instance(&mut rng, InstanceShape::default());
        let exact = solve_exact(&x, &opts)?;
        let oracle = solve_oracle(&x, None, &opts)?;
        let greedy = solve_greedy(&x)?;
        assert_eq!(exact.value, oracle.value);
        assert!(greedy.value >= exact.value);
        println!("{i:>4} {:>6} {:>6} {:>6}", exact.value, oracle.value, greedy.value);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
