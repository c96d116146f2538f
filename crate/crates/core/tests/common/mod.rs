//! Independent oracles shared by the integration tests. Nothing here goes
//! through the library's normal-ordering or rational-function code paths
//! except where a test compares against them.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use qplane::plane::Letter;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Rewrites a word to normal order one adjacent `yx -> q xy` swap at a
/// time. Returns `(swaps, xs, ys)`.
pub fn rewrite_word(word: &[Letter]) -> (u32, u32, u32) {
    let mut w = word.to_vec();
    let mut swaps = 0;
    loop {
        let hit = w
            .windows(2)
            .position(|p| p[0] == Letter::Y && p[1] == Letter::X);
        match hit {
            Some(i) => {
                w.swap(i, i + 1);
                swaps += 1;
            }
            None => break,
        }
    }
    let xs = w.iter().filter(|&&l| l == Letter::X).count() as u32;
    (swaps, xs, w.len() as u32 - xs)
}

/// Expands `(x + y)^n` as the sum of all `2^n` words, each rewritten by
/// swaps. Result maps `xdeg -> (q exponent -> integer count)`.
pub fn expand_binomial_by_words(n: u32) -> BTreeMap<u32, BTreeMap<u32, u64>> {
    let mut out: BTreeMap<u32, BTreeMap<u32, u64>> = BTreeMap::new();
    for mask in 0u64..(1 << n) {
        let word: Vec<Letter> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { Letter::X } else { Letter::Y })
            .collect();
        let (s, xs, _) = rewrite_word(&word);
        *out.entry(xs).or_default().entry(s).or_default() += 1;
    }
    out
}

/// `[k]` evaluated numerically at `q0`.
pub fn num_q_integer(k: u32, q0: &BigRational) -> BigRational {
    (0..k).fold(BigRational::zero(), |acc, i| acc + q0.pow(i as i32))
}

pub fn num_q_factorial(k: u32, q0: &BigRational) -> BigRational {
    (1..=k).fold(BigRational::one(), |acc, i| acc * num_q_integer(i, q0))
}

/// Both sides of the coefficient identity evaluated in plain rationals.
pub fn num_eq5(m: u32, n: u32, q0: &BigRational) -> (BigRational, BigRational) {
    let mut lhs = BigRational::zero();
    for r in 0..=m.min(n) {
        let ri = r as i32;
        let exp = ri * (ri - 1) / 2 - (m * n) as i32;
        let num = q0.pow(exp) * (q0 - BigRational::one()).pow(ri);
        let den = num_q_factorial(m - r, q0) * num_q_factorial(n - r, q0) * num_q_factorial(r, q0);
        lhs += num / den;
    }
    let rhs = (num_q_factorial(m, q0) * num_q_factorial(n, q0)).recip();
    (lhs, rhs)
}

/// Both sides of the x-power expansion evaluated at numbers `x0`, `q0`.
pub fn num_xpower(n: u32, x0: &BigRational, q0: &BigRational) -> (BigRational, BigRational) {
    let one = BigRational::one();
    let lhs = x0.pow(n as i32);
    let mut rhs = BigRational::zero();
    for r in 0..=n {
        let top = ((n - r + 1)..=n).fold(one.clone(), |a, i| a * (q0.pow(i as i32) - &one));
        let bottom = (1..=r).fold(one.clone(), |a, i| a * (q0.pow(i as i32) - &one));
        let falling = (0..r).fold(one.clone(), |a, i| a * (x0 - q0.pow(i as i32)));
        rhs += top / bottom * falling;
    }
    (lhs, rhs)
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> BigRational {
    BigRational::from_integer((1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i)))
}

/// Random nonzero rational `q0` away from `-1` and `1`, where q-factorials
/// or the test itself degenerate.
pub fn random_q0<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=7);
        let q = rat(num, den);
        if !q.is_zero() && q != rat(1, 1) && q != rat(-1, 1) {
            return q;
        }
    }
}

/// Random expression text in the input grammar. `depth` bounds nesting.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> String {
    if depth == 0 {
        return random_leaf(rng);
    }
    match rng.gen_range(0..10) {
        0 | 1 => random_leaf(rng),
        2 => format!("{} + {}", random_expr(rng, depth - 1), random_expr(rng, depth - 1)),
        3 => format!("{} - ({})", random_expr(rng, depth - 1), random_expr(rng, depth - 1)),
        4 | 5 => format!("({})*({})", random_expr(rng, depth - 1), random_expr(rng, depth - 1)),
        6 => format!("-({})", random_expr(rng, depth - 1)),
        7 => format!("({})^{}", random_expr(rng, depth - 1), rng.gen_range(0..4)),
        8 => {
            // argument forced to have no constant term
            let gen = if rng.gen_bool(0.5) { "x" } else { "y" };
            format!("expq(({})*{gen})", random_expr(rng, depth - 1))
        }
        _ => {
            let divisor = ["2", "3/4", "q", "qinv", "(1 + q)", "(1 - q^2)", "(2*q + qinv)"]
                [rng.gen_range(0..7)];
            format!("({})/{divisor}", random_expr(rng, depth - 1))
        }
    }
}

fn random_leaf<R: Rng>(rng: &mut R) -> String {
    match rng.gen_range(0..7) {
        0 | 1 => "x".into(),
        2 | 3 => "y".into(),
        4 => "q".into(),
        5 => "qinv".into(),
        _ => {
            let n: u32 = rng.gen_range(0..6);
            if rng.gen_bool(0.5) {
                n.to_string()
            } else {
                format!("{n}/{}", rng.gen_range(1..5))
            }
        }
    }
}
