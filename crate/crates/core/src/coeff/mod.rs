//! Coefficient ring: Laurent polynomials in `q` over the rationals and the
//! field of rational functions `Q(q)` built on top of them.

mod dense;
mod laurent;
mod ratfun;

pub use laurent::LaurentPoly;
pub use ratfun::RatFun;

/// Arbitrary-precision rational scalar. Always stored reduced with a
/// positive denominator.
pub type RationalScalar = num_rational::BigRational;

/// Parses `a`, `-a` or `a/b` into a rational scalar.
pub fn parse_rational(text: &str) -> Option<RationalScalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num.parse().ok()?;
    let den: num_bigint::BigInt = den.parse().ok()?;
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(RationalScalar::new(num, den))
}

/// Writes a rational as `a` or `a/b`.
pub(crate) fn fmt_rational(r: &RationalScalar) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
