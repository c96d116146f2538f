//! Exact rational matrices and a concrete representation of the quantum
//! plane, used as a numeric oracle for symbolic results.

use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PlaneElement;
use crate::coeff::RationalScalar;
use crate::error::{Error, Result};

/// Square matrix over Q, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(dim, row.len()));
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    pub fn diagonal(entries: Vec<BigRational>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// The `dim x dim` pair `X` (ones on the superdiagonal) and
    /// `Y = diag(1, q0^-1, q0^-2, ...)`, which satisfies
    /// `X*Y = q0^-1 * Y*X`. `X` is nilpotent, so every series in `X` is a
    /// finite sum.
    pub fn nilpotent_pair(q0: &RationalScalar, dim: usize) -> Result<(Self, Self)> {
        if q0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let mut x = Self::zeros(dim);
        for i in 0..dim.saturating_sub(1) {
            x[(i, i + 1)] = BigRational::one();
        }
        let y = Self::diagonal((0..dim).map(|i| q0.pow(-(i as i32))).collect());
        Ok((x, y))
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.dim + j]
    }
}

impl<'a> Mul<&'a RationalMatrix> for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = RationalMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a RationalMatrix> for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &'a RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        RationalMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Substitutes matrices for the generators: `sum c(q0) * X^m * Y^n`.
///
/// The pair must satisfy `X*Y = q0^-1 * Y*X` exactly.
pub fn pe_eval(
    a: &PlaneElement,
    q0: &RationalScalar,
    x: &RationalMatrix,
    y: &RationalMatrix,
) -> Result<RationalMatrix> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    if q0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    if x * y != (y * x).scale(&q0.recip()) {
        return Err(Error::RelationViolated(q0.clone()));
    }
    let dim = x.dim();
    let mut x_pows = vec![RationalMatrix::identity(dim)];
    let mut y_pows = vec![RationalMatrix::identity(dim)];
    let mut out = RationalMatrix::zeros(dim);
    for ((m, n), c) in a.terms() {
        let value = c.eval(q0)?;
        while x_pows.len() <= m as usize {
            let next = x_pows.last().map(|p| p * x).expect("non-empty");
            x_pows.push(next);
        }
        while y_pows.len() <= n as usize {
            let next = y_pows.last().map(|p| p * y).expect("non-empty");
            y_pows.push(next);
        }
        let term = &x_pows[m as usize] * &y_pows[n as usize];
        out = &out + &term.scale(&value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RatFun;
    use crate::plane::{q_exp, TruncationOrder};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn representation_consistency() {
        let q0 = r(3, 2);
        let (x, y) = RationalMatrix::nilpotent_pair(&q0, 2).unwrap();
        assert_eq!(x, RationalMatrix::from_rows(vec![vec![r(0, 1), r(1, 1)], vec![r(0, 1), r(0, 1)]]).unwrap());
        assert_eq!(y, RationalMatrix::diagonal(vec![r(1, 1), r(2, 3)]));
        let yx = &PlaneElement::y() * &PlaneElement::x();
        assert_eq!(pe_eval(&yx, &q0, &x, &y).unwrap(), &y * &x);
        assert_eq!(
            pe_eval(&PlaneElement::one(), &q0, &x, &y).unwrap(),
            RationalMatrix::identity(2)
        );
    }

    #[test]
    fn relation_violation_rejected() {
        let q0 = r(2, 1);
        let (x, _) = RationalMatrix::nilpotent_pair(&q0, 3).unwrap();
        let y = RationalMatrix::diagonal(vec![r(1, 1), r(1, 1), r(5, 1)]);
        assert_eq!(
            pe_eval(&PlaneElement::x(), &q0, &x, &y),
            Err(Error::RelationViolated(q0))
        );
    }

    #[test]
    fn pole_rejected() {
        let q0 = r(-1, 1);
        let (x, y) = RationalMatrix::nilpotent_pair(&q0, 3).unwrap();
        let e = q_exp(&PlaneElement::x(), TruncationOrder(2)).unwrap();
        assert_eq!(pe_eval(&e, &q0, &x, &y), Err(Error::Pole(q0.clone())));
        let half = PlaneElement::scalar(RatFun::constant(r(1, 2)));
        assert_eq!(
            pe_eval(&half, &q0, &x, &y).unwrap(),
            RationalMatrix::identity(3).scale(&r(1, 2))
        );
    }
}
