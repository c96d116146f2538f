//! Dense univariate polynomials over Q, coefficients stored low to high.
//! Only used internally for products, division and gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Dense = Vec<BigRational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for zero.
pub(crate) fn degree(p: &[BigRational]) -> Option<usize> {
    p.len().checked_sub(1)
}

fn as_integers(p: &[BigRational]) -> Option<Vec<BigInt>> {
    p.iter()
        .map(|c| c.is_integer().then(|| c.numer().clone()))
        .collect()
}

fn from_integers(p: Vec<BigInt>) -> Dense {
    let mut out: Dense = p.into_iter().map(BigRational::from_integer).collect();
    trim(&mut out);
    out
}

/// Division by a divisor with leading coefficient 1 or -1, in Z[q].
fn div_rem_unit_lead(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    let neg = b[db].is_negative();
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = if neg { -&rem[k + db] } else { rem[k + db].clone() };
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                rem[k + i] -= &c * bi;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (quot, rem)
}

/// Product of two dense polynomials.
pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if let (Some(ia), Some(ib)) = (as_integers(a), as_integers(b)) {
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ai) in ia.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in ib.iter().enumerate() {
                if !bj.is_zero() {
                    prod[i + j] += ai * bj;
                }
            }
        }
        return from_integers(prod);
    }
    let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                prod[i + j] += ai * bj;
            }
        }
    }
    trim(&mut prod);
    prod
}

pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Dense, Dense) {
    let db = degree(b).expect("division by zero polynomial");
    if b[db].abs().is_one() {
        if let (Some(ia), Some(ib)) = (as_integers(a), as_integers(b)) {
            let (q, r) = div_rem_unit_lead(&ia, &ib);
            return (from_integers(q), from_integers(r));
        }
    }
    let mut rem: Dense = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                rem[k + i] -= &c * bi;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Exact quotient; panics in debug builds if `b` does not divide `a`.
pub(crate) fn exact_div(a: &[BigRational], b: &[BigRational]) -> Dense {
    let (q, r) = div_rem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Primitive integer polynomial proportional to `p`, with positive leading
/// coefficient.
fn primitive(p: &[BigRational]) -> Vec<BigInt> {
    let lcm = p
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    primitive_int(ints)
}

fn primitive_int(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return p;
    }
    let neg = p.last().is_some_and(Signed::is_negative);
    for c in p.iter_mut() {
        *c = &*c / &content;
        if neg {
            *c = -&*c;
        }
    }
    p
}

/// Pseudo-remainder of `a` by `b` over Z, up to a nonzero constant factor.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &lr * bi;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Monic gcd over Q of two polynomials, computed through the primitive
/// remainder sequence over Z. Both inputs must be nonzero.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Dense {
    let (mut u, mut v) = (primitive(a), primitive(b));
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while v.len() > 1 {
        let r = primitive_int(pseudo_rem(&u, &v));
        if r.is_empty() {
            break;
        }
        u = std::mem::replace(&mut v, r);
    }
    if v.len() <= 1 {
        return vec![BigRational::one()];
    }
    let lead = BigRational::from_integer(v[v.len() - 1].clone());
    v.into_iter()
        .map(|c| BigRational::from_integer(c) / &lead)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> Dense {
        cs.iter().map(|&c| BigRational::from_integer(c.into())).collect()
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q^2 - 1) and (q^3 - 1) share exactly q - 1
        assert_eq!(gcd(&poly(&[-1, 0, 1]), &poly(&[-1, 0, 0, 1])), poly(&[-1, 1]));
        // (1 + q)(1 + q + q^2) and (1 + q)^2
        assert_eq!(gcd(&poly(&[1, 2, 2, 1]), &poly(&[1, 2, 1])), poly(&[1, 1]));
        assert_eq!(gcd(&poly(&[1, 1]), &poly(&[2])), poly(&[1]));
    }

    #[test]
    fn division_remainder() {
        let (q, r) = div_rem(&poly(&[1, 0, 1]), &poly(&[1, 1]));
        assert_eq!(q, poly(&[-1, 1]));
        assert_eq!(r, poly(&[2]));
    }
}
