// Truncated q-exponentials of plane elements.

use qplane::{q_exp, PlaneElement, TruncationOrder};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let n = TruncationOrder::new(4);
    println!("expq(x) = {}", q_exp(&PlaneElement::x(), n)?);
    let sum = &PlaneElement::x() + &PlaneElement::y();
    println!("expq(x + y) = {}", q_exp(&sum, n)?);

    // an argument with a constant term is rejected
    let shifted = &PlaneElement::one() + &PlaneElement::x();
    assert!(q_exp(&shifted, n).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
