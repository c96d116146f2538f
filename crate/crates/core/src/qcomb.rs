//! q-integers, q-factorials, Gaussian binomials and the product/sum
//! building blocks of the x-power expansion and the coefficient identity.

use crate::coeff::{LaurentPoly, RatFun};
use crate::error::{Error, Result};

/// `[n] = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_integer(n: u32) -> LaurentPoly {
    LaurentPoly::from_int_coeffs(&vec![1; n as usize])
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_integer(k))
}

/// Gaussian binomial `[n]! / ([r]! [n-r]!)`, zero when `r` is out of range.
/// The result always reduces to a polynomial.
pub fn gauss_binomial(n: u32, r: i64) -> RatFun {
    if r < 0 || r > n as i64 {
        return RatFun::zero();
    }
    let r = r as u32;
    let den = &q_factorial(r) * &q_factorial(n - r);
    RatFun::new(q_factorial(n), den).expect("q-factorials are nonzero")
}

/// `(q^(n-r+1) - 1)(q^(n-r+2) - 1)...(q^n - 1)`; the empty product is 1.
pub fn qpow_shifted_product(n: i64, r: u32) -> Result<LaurentPoly> {
    if r as i64 > n {
        return Err(Error::InvalidArgument(format!(
            "shifted product needs r <= n, got r = {r}, n = {n}"
        )));
    }
    let lo = n - r as i64 + 1;
    Ok((lo..=n).fold(LaurentPoly::one(), |acc, i| {
        &acc * &(&LaurentPoly::q_pow(i as i32) - &LaurentPoly::one())
    }))
}

/// Left-hand side of the coefficient identity,
/// `sum_{r=0}^{min(m,n)} q^(r(r-1)/2 - mn) (q-1)^r / ([m-r]! [n-r]! [r]!)`.
pub fn eq5_lhs(m: u32, n: u32) -> RatFun {
    let q_minus_one = LaurentPoly::from_int_coeffs(&[-1, 1]);
    let mn = (m * n) as i64;
    // every term's denominator divides [m]! [n]!, so sum over that
    let common = &q_factorial(m) * &q_factorial(n);
    let mut num = LaurentPoly::zero();
    let mut rest = RatFun::zero();
    for r in 0..=m.min(n) {
        let ri = r as i64;
        let exp = ri * (ri - 1) / 2 - mn;
        let term = q_minus_one.pow(r).shift(exp as i32);
        let den = &(&q_factorial(m - r) * &q_factorial(n - r)) * &q_factorial(r);
        match common.checked_div(&den) {
            Some(cofactor) => num += &(&term * &cofactor),
            None => rest += &RatFun::new(term, den).expect("q-factorials are nonzero"),
        }
    }
    RatFun::new(num, common).expect("q-factorials are nonzero") + rest
}

/// `1 / ([m]! [n]!)`, the right-hand side of the coefficient identity.
pub fn eq5_rhs(m: u32, n: u32) -> RatFun {
    RatFun::new(LaurentPoly::one(), &q_factorial(m) * &q_factorial(n))
        .expect("q-factorials are nonzero")
}
