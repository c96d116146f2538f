// Exact coefficient arithmetic: Laurent polynomials in q and their fractions.

use qplane::{LaurentPoly, RatFun, RationalScalar};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let q_minus_one = LaurentPoly::from_int_coeffs(&[-1, 1]);
    let q2_minus_one = LaurentPoly::from_int_coeffs(&[-1, 0, 1]);

    // (q^2 - 1)/(q - 1) cancels to 1 + q
    let f = RatFun::new(q2_minus_one, q_minus_one.clone())?;
    println!("(q^2 - 1)/(q - 1) = {f}");
    assert!(f.is_polynomial());

    // powers of q in a denominator move to the numerator
    let g = RatFun::new(LaurentPoly::one(), &LaurentPoly::q_pow(2) * &q_minus_one)?;
    println!("1/(q^3 - q^2)     = {g}");

    let h = &f * &g;
    println!("product           = {h}");
    let s = &f + &g;
    println!("sum               = {s}");

    let q0 = RationalScalar::new(3.into(), 2.into());
    println!("sum at q = 3/2    = {}", s.eval(&q0)?);

    // evaluating at a pole is an error, not a value
    let pole = RationalScalar::from_integer(1.into());
    assert!(g.eval(&pole).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
