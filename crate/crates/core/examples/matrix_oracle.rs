// Substituting a concrete matrix pair with XY = q0^-1 YX. Identities that
// hold in the algebra hold for the matrices too, up to the nilpotency degree.

use qplane::plane::{pe_eval, RationalMatrix};
use qplane::{pe_mul, q_exp, PlaneElement, RationalScalar, TruncationOrder};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let q0 = RationalScalar::new(2.into(), 3.into());
    let order = 5;
    let n = TruncationOrder::new(order);
    // X is nilpotent of index order + 1, so truncation above `order` is invisible
    let (x, y) = RationalMatrix::nilpotent_pair(&q0, order as usize + 1)?;

    let lhs = pe_mul(&q_exp(&PlaneElement::x(), n)?, &q_exp(&PlaneElement::y(), n)?, Some(n));
    let rhs = q_exp(&(&PlaneElement::x() + &PlaneElement::y()), n)?;
    let ml = pe_eval(&lhs, &q0, &x, &y)?;
    let mr = pe_eval(&rhs, &q0, &x, &y)?;
    assert_eq!(ml, mr);
    println!("expq(X) expq(Y) = expq(X + Y) at q0 = {q0}, dimension {}", x.dim());

    // swapping the matrices breaks the relation and is rejected
    assert!(pe_eval(&lhs, &q0, &y, &x).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
