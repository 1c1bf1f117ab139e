// Rulers with distinct pairwise differences.
//
// ```bash
// cargo run -p soapy-union --example golomb_ruler
// ```

use soapy_union::reductions::{is_golomb, ruler};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=8 {
        let r = ruler(n)?;
        let props = r.properties();
        println!("R_{n} = {:?} (min gap {:?})", r.elements(), r.min_gap());
        assert!(props.all(), "{props:?}");
    }
    assert!(!is_golomb(&[0, 1, 2]));
    assert!(ruler(0).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
