// q-integers, q-factorials and Gaussian binomials.

use qplane::qcomb::{gauss_binomial, q_factorial, q_integer};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=4 {
        println!("[{n}]  = {}", q_integer(n));
    }
    println!("[4]! = {}", q_factorial(4));
    println!();
    for n in 0..=5u32 {
        let row: Vec<String> = (0..=n as i64).map(|r| gauss_binomial(n, r).to_string()).collect();
        println!("n = {n}: {}", row.join("  "));
    }
    // symmetric in r <-> n - r
    for r in 0..=6 {
        assert_eq!(gauss_binomial(6, r), gauss_binomial(6, 6 - r));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
