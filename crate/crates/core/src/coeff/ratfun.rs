use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{exact_div, poly_gcd};
use super::{LaurentPoly, RationalScalar};
use crate::error::{Error, Result};

/// Element of the rational function field `Q(q)`, kept in canonical form.
///
/// Canonical means: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient 1, and it shares no factor with the
/// numerator (after stripping the numerator's power of `q`). Zero is `0/1`.
/// Two values are equal exactly when their representations are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn constant(c: RationalScalar) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (shift_n, _) = num.to_dense();
        let (shift_d, _) = den.to_dense();
        // move all powers of q into the numerator
        let num = num.shift(-shift_n);
        let den = den.shift(-shift_d);
        if let Some(quot) = num.checked_div(&den) {
            return Ok(Self::from_poly(quot.shift(shift_n - shift_d)));
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (exact_div(&num, &g), exact_div(&den, &g))
        };
        Ok(Self::normalize_lead(num.shift(shift_n - shift_d), den))
    }

    /// Makes an already coprime pair monic in the denominator.
    fn normalize_lead(num: LaurentPoly, den: LaurentPoly) -> Self {
        let lead = den.leading_coeff().cloned().expect("nonzero denominator");
        if lead.is_one() {
            return Self { num, den };
        }
        let inv = lead.recip();
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational constant, if it is one.
    pub fn as_constant(&self) -> Option<RationalScalar> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Multiplies by `q^k`; cheap because `q` never divides the denominator.
    pub fn mul_q_pow(&self, k: i32) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Exact value at `q = q0`; rejects poles.
    pub fn eval(&self, q0: &RationalScalar) -> Result<RationalScalar> {
        let den = self.den.eval(q0)?;
        if den.is_zero() {
            return Err(Error::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0)? / den)
    }

    /// Renders as parser input; see [`LaurentPoly::to_expr`].
    pub fn to_expr(&self) -> String {
        if self.den.is_one() {
            format!("({})", self.num.to_expr())
        } else {
            format!("({})/({})", self.num.to_expr(), self.den.to_expr())
        }
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun{self}")
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Mul<&'a RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &'a RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel so that the product is already reduced
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let num = &exact_div(&self.num, &g1) * &exact_div(&rhs.num, &g2);
        let den = &exact_div(&self.den, &g2) * &exact_div(&rhs.den, &g1);
        RatFun::normalize_lead(num, den)
    }
}

impl<'a> Add<&'a RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &'a RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFun::from_poly(&self.num + &rhs.num);
            }
            return RatFun::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let g = poly_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            if num.is_zero() {
                return RatFun::zero();
            }
            return RatFun::normalize_lead(num, den);
        }
        let b = exact_div(&self.den, &g);
        let d = exact_div(&rhs.den, &g);
        let t = &(&self.num * &d) + &(&rhs.num * &b);
        if t.is_zero() {
            return RatFun::zero();
        }
        let h = poly_gcd(&t, &g);
        let num = exact_div(&t, &h);
        let den = &b * &exact_div(&rhs.den, &h);
        RatFun::normalize_lead(num, den)
    }
}

impl AddAssign<&RatFun> for RatFun {
    fn add_assign(&mut self, rhs: &RatFun) {
        *self = &*self + rhs;
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl<'a> Sub<&'a RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &'a RatFun) -> RatFun {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &'a RatFun) -> RatFun { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
