// Parsing expressions and expanding them to normal order.

use qplane::expr::{caret_diagnostic, elaborate, parse};
use qplane::TruncationOrder;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let n = TruncationOrder::new(3);
    for input in ["y*x", "(x + y)^2", "expq(y)*expq(x)", "expq(x + y + (q - 1)*x*y)", "x/(1 + q)"] {
        let value = elaborate(&parse(input)?, n)?;
        println!("{input}\n  = {value}");
        // the expression form parses back to the same element
        assert_eq!(elaborate(&parse(&value.to_expr())?, n)?, value);
    }

    let bad = "x * * y";
    let err = parse(bad).unwrap_err();
    println!("{}", caret_diagnostic(bad, err.pos, &err.to_string()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
