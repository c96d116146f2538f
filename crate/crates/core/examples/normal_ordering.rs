// Words in x and y rewritten to normal order x^a y^b, using xy = q^-1 yx.

use qplane::plane::Letter;
use qplane::{normal_order_word, pe_mul, PlaneElement};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for word in ["xy", "yx", "yyx", "yxyx", "yyyxxx"] {
        let letters = Letter::parse_word(word)?;
        println!("{word:>8} = {}", normal_order_word(&letters));
    }

    // the same thing through the product of elements
    let yx = pe_mul(&PlaneElement::y(), &PlaneElement::x(), None);
    assert_eq!(yx, normal_order_word(&Letter::parse_word("yx")?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
