// The reversed product expq(y) expq(x) needs a correction term (q - 1)xy,
// and splits as expq(x) expq((q - 1)xy) expq(y).

use qplane::identities::{
    check_intermediate, check_reversed, check_reversed_with, reversed_correction, yx_term,
};
use qplane::{RatFun, LaurentPoly, TruncationOrder};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!("correction = {}", reversed_correction());
    for order in 0..=6 {
        let n = TruncationOrder::new(order);
        let reversed = check_reversed(n);
        let split = check_intermediate(n);
        println!("{reversed}");
        println!("{split}");
        assert!(reversed.holds && split.holds);
    }

    // a wrong correction, (1 - q)yx, is caught
    let wrong = yx_term(RatFun::from_poly(LaurentPoly::from_int_coeffs(&[1, -1])));
    let report = check_reversed_with(TruncationOrder::new(2), &wrong);
    println!("wrong correction: {report}");
    assert!(!report.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
