//! Normal-ordered polynomials on the quantum plane `xy = q^-1 yx`.
//!
//! Every element is stored as a sum of `c * x^m * y^n` with `c` in `Q(q)`.
//! Products reorder with `y^a x^b = q^(ab) x^b y^a`.

mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{LaurentPoly, RatFun, RationalScalar};
use crate::error::{Error, Result};
use crate::qcomb::{q_factorial, q_integer};

pub use matrix::{pe_eval, RationalMatrix};

/// Total-degree cutoff: terms with `xdeg + ydeg > N` are dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruncationOrder(pub u32);

impl TruncationOrder {
    pub fn new(n: u32) -> Self {
        Self(n)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn admits(self, degree: u32) -> bool {
        degree <= self.0
    }
}

/// Generator letter of a word in the free algebra on `x`, `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// Reads a word such as `"yxyx"`.
    pub fn parse_word(word: &str) -> Result<Vec<Letter>> {
        word.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(Error::InvalidArgument(format!(
                    "word letters must be x or y, got {other:?}"
                ))),
            })
            .collect()
    }
}

/// Normal-ordered element of the quantum plane.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PlaneElement {
    terms: BTreeMap<(u32, u32), RatFun>,
}

impl PlaneElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFun::one())
    }

    pub fn x() -> Self {
        Self::monomial(RatFun::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(RatFun::one(), 0, 1)
    }

    pub fn scalar(c: RatFun) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^xdeg * y^ydeg`.
    pub fn monomial(c: RatFun, xdeg: u32, ydeg: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xdeg, ydeg), c);
        }
        Self { terms }
    }

    /// Builds an element from `((xdeg, ydeg), coefficient)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), RatFun)>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: &RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms keyed by `(xdeg, ydeg)`, in key order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &RatFun)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, xdeg: u32, ydeg: u32) -> RatFun {
        self.terms.get(&(xdeg, ydeg)).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> RatFun {
        self.coeff(0, 0)
    }

    /// Largest total degree present; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(m, n)| m + n).max()
    }

    /// Smallest total degree present; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(m, n)| m + n).min()
    }

    /// True when the element is a pure coefficient (no `x` or `y`).
    pub fn as_scalar(&self) -> Option<RatFun> {
        match self.terms.len() {
            0 => Some(RatFun::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn truncate(&self, cutoff: TruncationOrder) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((m, n), _)| cutoff.admits(m + n))
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn try_map_coeffs<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&RatFun) -> Result<RatFun>,
    {
        let mut out = Self::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, &f(c)?);
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `q = q0`.
    pub fn eval_coeffs(&self, q0: &RationalScalar) -> Result<BTreeMap<(u32, u32), RationalScalar>> {
        self.terms
            .iter()
            .map(|(&k, c)| Ok((k, c.eval(q0)?)))
            .filter(|r| !matches!(r, Ok((_, v)) if num_traits::Zero::is_zero(v)))
            .collect()
    }

    /// Same element with coefficients replaced by their values at `q0`.
    pub fn specialize(&self, q0: &RationalScalar) -> Result<Self> {
        self.try_map_coeffs(|c| Ok(RatFun::constant(c.eval(q0)?)))
    }

    /// Terms in rendering order: total degree ascending, then `xdeg`
    /// descending.
    pub fn render_order(&self) -> Vec<((u32, u32), &RatFun)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|&((m, n), _)| (m + n, std::cmp::Reverse(m)));
        v
    }

    /// Renders as parser input (negative powers of `q` written as `qinv`).
    pub fn to_expr(&self) -> String {
        self.render(RatFun::to_expr)
    }

    fn render(&self, coeff: impl Fn(&RatFun) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .render_order()
            .into_iter()
            .map(|((m, n), c)| {
                let mono = monomial_text(m, n);
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => coeff(c),
                    (false, true) => mono,
                    (false, false) => format!("{}*{}", coeff(c), mono),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn monomial_text(m: u32, n: u32) -> String {
    let power = |v: &str, k: u32| match k {
        0 => None,
        1 => Some(v.to_string()),
        k => Some(format!("{v}^{k}")),
    };
    [power("x", m), power("y", n)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|c| c.to_string()))
    }
}

impl fmt::Debug for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneElement({self})")
    }
}

impl From<RatFun> for PlaneElement {
    fn from(c: RatFun) -> Self {
        Self::scalar(c)
    }
}

impl From<LaurentPoly> for PlaneElement {
    fn from(c: LaurentPoly) -> Self {
        Self::scalar(RatFun::from_poly(c))
    }
}

/// Normal-ordered product, dropping terms above `cutoff` when given.
///
/// `(x^m1 y^n1)(x^m2 y^n2) = q^(n1 m2) x^(m1+m2) y^(n1+n2)`.
pub fn pe_mul(a: &PlaneElement, b: &PlaneElement, cutoff: Option<TruncationOrder>) -> PlaneElement {
    let mut out = PlaneElement::zero();
    for (&(m1, n1), c1) in &a.terms {
        for (&(m2, n2), c2) in &b.terms {
            let (m, n) = (m1 + m2, n1 + n2);
            if cutoff.is_some_and(|c| !c.admits(m + n)) {
                continue;
            }
            let c = (c1 * c2).mul_q_pow((n1 * m2) as i32);
            out.add_term((m, n), &c);
        }
    }
    out
}

/// Normal form `q^s x^m y^n` of a word, where `s` counts the pairs with a
/// `y` before an `x`.
pub fn normal_order_word(word: &[Letter]) -> PlaneElement {
    let (mut xs, mut ys, mut inversions) = (0u32, 0u32, 0u32);
    for letter in word {
        match letter {
            Letter::X => {
                xs += 1;
                inversions += ys;
            }
            Letter::Y => ys += 1,
        }
    }
    PlaneElement::monomial(RatFun::q_pow(inversions as i32), xs, ys)
}

/// `a^k` with every intermediate product truncated at `cutoff`.
pub fn pe_pow(a: &PlaneElement, k: u32, cutoff: TruncationOrder) -> PlaneElement {
    let mut acc = PlaneElement::one().truncate(cutoff);
    for _ in 0..k {
        if acc.is_zero() {
            break;
        }
        acc = pe_mul(&acc, a, Some(cutoff));
    }
    acc
}

/// Truncated q-exponential `sum_{k=0}^{N} arg^k / [k]!`.
///
/// The argument must have no constant term, so that `arg^k` has degree at
/// least `k` and the truncation is exact.
pub fn q_exp(arg: &PlaneElement, cutoff: TruncationOrder) -> Result<PlaneElement> {
    if !arg.constant_term().is_zero() {
        return Err(Error::ConstantTerm);
    }
    let arg = arg.truncate(cutoff);
    let mut sum = PlaneElement::one();
    let mut power = PlaneElement::one();
    for k in 1..=cutoff.get() {
        power = pe_mul(&power, &arg, Some(cutoff));
        if power.is_zero() {
            break;
        }
        let inv_fact = RatFun::new(LaurentPoly::one(), q_factorial(k))?;
        sum = &sum + &power.scale(&inv_fact);
    }
    Ok(sum)
}

/// q-derivative in `x`: `c * x^m y^n` maps to `[m] c * x^(m-1) y^n`.
pub fn q_derivative_x(a: &PlaneElement) -> PlaneElement {
    PlaneElement::from_terms(
        a.terms
            .iter()
            .filter(|((m, _), _)| *m > 0)
            .map(|(&(m, n), c)| ((m - 1, n), c * &RatFun::from_poly(q_integer(m)))),
    )
}

impl<'a> Add<&'a PlaneElement> for &PlaneElement {
    type Output = PlaneElement;
    fn add(self, rhs: &'a PlaneElement) -> PlaneElement {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a> Sub<&'a PlaneElement> for &PlaneElement {
    type Output = PlaneElement;
    fn sub(self, rhs: &'a PlaneElement) -> PlaneElement {
        self + &(-rhs)
    }
}

impl Neg for &PlaneElement {
    type Output = PlaneElement;
    fn neg(self) -> PlaneElement {
        PlaneElement {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

/// Untruncated product.
impl<'a> Mul<&'a PlaneElement> for &PlaneElement {
    type Output = PlaneElement;
    fn mul(self, rhs: &'a PlaneElement) -> PlaneElement {
        pe_mul(self, rhs, None)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<PlaneElement> for PlaneElement {
            type Output = PlaneElement;
            fn $m(self, rhs: PlaneElement) -> PlaneElement { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a PlaneElement> for PlaneElement {
            type Output = PlaneElement;
            fn $m(self, rhs: &'a PlaneElement) -> PlaneElement { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PlaneElement {
    type Output = PlaneElement;
    fn neg(self) -> PlaneElement {
        -&self
    }
}
