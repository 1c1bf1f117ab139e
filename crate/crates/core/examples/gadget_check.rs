// Scanning every translation of the ruler gadgets, and watching broken ones fail.
//
// ```bash
// cargo run -p soapy-union --example gadget_check
// ```

use soapy_union::graphs::Graph;
use soapy_union::reductions::{check_gadget_lemmas, encode_vc, is_aux, mutate, GadgetMutation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let triangle = Graph::from_edges([("1", "2"), ("2", "3"), ("1", "3")])?;
    let ri = encode_vc(&triangle, 2)?;
    assert!(is_aux(&ri.instance));

    let report = check_gadget_lemmas(&ri);
    println!("window {:?}: {} violations", report.window, report.violations.len());
    assert!(report.passed());

    for m in GadgetMutation::ALL {
        let broken = check_gadget_lemmas(&mutate(&ri, m)?);
        println!("{m:?}: {} violations, first {:?}", broken.violations.len(), broken.violations.first());
        assert!(!broken.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
