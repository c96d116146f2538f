use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense::{self, Dense};
use super::{fmt_rational, RationalScalar};
use crate::error::{Error, Result};

/// Laurent polynomial in one indeterminate `q` with rational coefficients.
///
/// Stored sparsely as exponent -> coefficient. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `q^-1`.
    pub fn q_inv() -> Self {
        Self::monomial(BigRational::one(), -1)
    }

    pub fn constant(c: RationalScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `c * q^exp`.
    pub fn monomial(c: RationalScalar, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, RationalScalar)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Ordinary polynomial `c0 + c1 q + c2 q^2 + ...` with integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as i32, BigRational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, exp: i32, c: RationalScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &RationalScalar)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> RationalScalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Zero::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// The constant polynomial's value, if this is a constant.
    pub fn as_constant(&self) -> Option<RationalScalar> {
        match self.terms.len() {
            0 => Some(Zero::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn leading_coeff(&self) -> Option<&RationalScalar> {
        self.terms.values().next_back()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &RationalScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &RationalScalar) -> Result<RationalScalar> {
        if q0.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::PoleAtOrigin);
            }
            return Ok(self.coeff(0));
        }
        let mut sum = BigRational::zero();
        for (&e, c) in &self.terms {
            sum += c * q0.pow(e);
        }
        Ok(sum)
    }

    /// Splits into `q^shift * P(q)` with `P` an ordinary polynomial whose
    /// constant term is nonzero. Zero maps to `(0, [])`.
    pub(crate) fn to_dense(&self) -> (i32, Dense) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut out = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (&e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    pub(crate) fn from_dense(shift: i32, p: &[BigRational]) -> Self {
        Self {
            terms: p
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32 + shift, c.clone()))
                .collect(),
        }
    }

    /// `self / d` when `d` divides `self` exactly, up to a power of `q`.
    pub fn checked_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        let (sa, da) = self.to_dense();
        let (sd, dd) = d.to_dense();
        let (quot, rem) = dense::div_rem(&da, &dd);
        rem.is_empty().then(|| LaurentPoly::from_dense(sa - sd, &quot))
    }

    /// Renders with `qinv^k` for negative powers so the text is accepted by
    /// the expression parser.
    pub fn to_expr(&self) -> String {
        self.render(true)
    }

    fn render(&self, qinv: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match e {
                0 => String::new(),
                1 => "q".to_string(),
                -1 if qinv => "qinv".to_string(),
                e if e < 0 && qinv => format!("qinv^{}", -e),
                e => format!("q^{e}"),
            };
            if power.is_empty() {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&fmt_rational(&mag));
                out.push('*');
                out.push_str(&power);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<RationalScalar> for LaurentPoly {
    fn from(c: RationalScalar) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = rhs.to_dense();
        let prod = dense::mul(&a, &b);
        LaurentPoly::from_dense(sa + sb, &prod)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Monic gcd of the ordinary-polynomial parts of two nonzero Laurent
/// polynomials (powers of `q` stripped).
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (_, da) = a.to_dense();
    let (_, db) = b.to_dense();
    if da.len() <= 1 || db.len() <= 1 {
        return LaurentPoly::one();
    }
    LaurentPoly::from_dense(0, &dense::gcd(&da, &db))
}

/// Exact quotient `a / b` where `b` divides `a` up to a power of `q`.
pub(crate) fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if b.is_one() {
        return a.clone();
    }
    let (sa, da) = a.to_dense();
    let (sb, db) = b.to_dense();
    LaurentPoly::from_dense(sa - sb, &dense::exact_div(&da, &db))
}
