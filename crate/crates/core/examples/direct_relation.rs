// expq(x) expq(y) = expq(x + y), checked exactly up to a total degree.

use qplane::identities::check_direct;
use qplane::{pe_mul, q_exp, PlaneElement, TruncationOrder};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let n = TruncationOrder::new(3);
    let lhs = pe_mul(
        &q_exp(&PlaneElement::x(), n)?,
        &q_exp(&PlaneElement::y(), n)?,
        Some(n),
    );
    let rhs = q_exp(&(&PlaneElement::x() + &PlaneElement::y()), n)?;
    println!("lhs = {lhs}");
    println!("rhs = {rhs}");
    assert_eq!(lhs, rhs);

    for order in 0..=8 {
        let report = check_direct(TruncationOrder::new(order));
        println!("{report}");
        assert!(report.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
