//! Exact finite-order checks of the q-exponential functional relations and
//! the identities they rest on.
//!
//! Every check builds both sides symbolically and reports `LHS - RHS`; a
//! check holds exactly when that difference is zero.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{LaurentPoly, RatFun};
use crate::error::{Error, Result};
use crate::plane::{pe_mul, pe_pow, q_exp, PlaneElement, TruncationOrder};
use crate::qcomb::{eq5_lhs, eq5_rhs, gauss_binomial, q_factorial, qpow_shifted_product};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    /// `exp_q(x) exp_q(y) = exp_q(x + y)`
    Direct,
    /// `exp_q(y) exp_q(x) = exp_q(x + y + (1 - q^-1) yx)`
    Reversed,
    /// `exp_q(y) exp_q(x) = exp_q(x) exp_q((1 - q^-1) yx) exp_q(y)`
    Intermediate,
    /// expansion of `x^n` in the shifted products `(x-1)(x-q)...`
    Xpower,
    /// the q-factorial coefficient identity and its symmetry in `m, n`
    Coeff5,
    /// q-binomial theorem for `(x + y)^n`
    Qbinom,
    /// commuting limit `q -> 1`
    ClassicalLimit,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::Direct,
        IdentityId::Reversed,
        IdentityId::Intermediate,
        IdentityId::Xpower,
        IdentityId::Coeff5,
        IdentityId::Qbinom,
        IdentityId::ClassicalLimit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Direct => "direct",
            IdentityId::Reversed => "reversed",
            IdentityId::Intermediate => "intermediate",
            IdentityId::Xpower => "xpower",
            IdentityId::Coeff5 => "coeff5",
            IdentityId::Qbinom => "qbinom",
            IdentityId::ClassicalLimit => "classical_limit",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(IdentityId::ClassicalLimit),
            _ => IdentityId::ALL
                .into_iter()
                .find(|id| id.as_str() == s)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown identity {s:?}"))),
        }
    }
}

/// A fully parameterized identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Direct(TruncationOrder),
    Reversed(TruncationOrder),
    Intermediate(TruncationOrder),
    Xpower(u32),
    Coeff5(u32, u32),
    Qbinom(u32),
    ClassicalLimit(TruncationOrder),
}

impl Check {
    /// Validates raw `(identity, params)` input.
    pub fn new(id: IdentityId, params: &[i64]) -> Result<Self> {
        let nonneg = |v: i64, what: &str| -> Result<u32> {
            u32::try_from(v).map_err(|_| {
                Error::InvalidArgument(format!("{id}: {what} must be a nonnegative integer, got {v}"))
            })
        };
        let arity = match id {
            IdentityId::Coeff5 => 2,
            _ => 1,
        };
        if params.len() != arity {
            return Err(Error::InvalidArgument(format!(
                "{id}: expected {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let p0 = params[0];
        Ok(match id {
            IdentityId::Direct => Check::Direct(TruncationOrder(nonneg(p0, "order")?)),
            IdentityId::Reversed => Check::Reversed(TruncationOrder(nonneg(p0, "order")?)),
            IdentityId::Intermediate => Check::Intermediate(TruncationOrder(nonneg(p0, "order")?)),
            IdentityId::ClassicalLimit => {
                Check::ClassicalLimit(TruncationOrder(nonneg(p0, "order")?))
            }
            IdentityId::Xpower => {
                let n = nonneg(p0, "n")?;
                if n == 0 {
                    return Err(Error::InvalidArgument("xpower: n must be at least 1".into()));
                }
                Check::Xpower(n)
            }
            IdentityId::Coeff5 => Check::Coeff5(nonneg(p0, "m")?, nonneg(params[1], "n")?),
            IdentityId::Qbinom => Check::Qbinom(nonneg(p0, "n")?),
        })
    }

    pub fn id(&self) -> IdentityId {
        match self {
            Check::Direct(_) => IdentityId::Direct,
            Check::Reversed(_) => IdentityId::Reversed,
            Check::Intermediate(_) => IdentityId::Intermediate,
            Check::Xpower(_) => IdentityId::Xpower,
            Check::Coeff5(..) => IdentityId::Coeff5,
            Check::Qbinom(_) => IdentityId::Qbinom,
            Check::ClassicalLimit(_) => IdentityId::ClassicalLimit,
        }
    }

    pub fn params(&self) -> Vec<i64> {
        match *self {
            Check::Direct(n) | Check::Reversed(n) | Check::Intermediate(n) | Check::ClassicalLimit(n) => {
                vec![n.0 as i64]
            }
            Check::Xpower(n) | Check::Qbinom(n) => vec![n as i64],
            Check::Coeff5(m, n) => vec![m as i64, n as i64],
        }
    }

    /// Truncation order, for the series-based checks.
    pub fn order(&self) -> Option<u32> {
        match *self {
            Check::Direct(n) | Check::Reversed(n) | Check::Intermediate(n) | Check::ClassicalLimit(n) => {
                Some(n.0)
            }
            Check::Qbinom(n) => Some(n),
            Check::Xpower(_) | Check::Coeff5(..) => None,
        }
    }

    /// Both sides of the identity, computed independently.
    pub fn sides(&self) -> Result<Sides> {
        match *self {
            Check::Direct(n) => direct_sides(n),
            Check::Reversed(n) => reversed_sides(n, &reversed_correction()),
            Check::Intermediate(n) => intermediate_sides(n),
            Check::Xpower(n) => xpower_sides(n),
            Check::Coeff5(m, n) => Ok(Sides::Scalar(eq5_lhs(m, n), eq5_rhs(m, n))),
            Check::Qbinom(n) => Ok(qbinom_sides(n)),
            Check::ClassicalLimit(n) => classical_sides(n),
        }
    }

    pub fn run(&self) -> IdentityReport {
        let start = Instant::now();
        let outcome = self.sides();
        let elapsed = start.elapsed();
        match outcome {
            Ok(sides) => IdentityReport::from_sides(self, sides, elapsed),
            Err(e) => IdentityReport::failed(self.id(), self.params(), self.order(), e.to_string(), elapsed),
        }
    }
}

/// Left- and right-hand sides of one identity instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Sides {
    Plane(PlaneElement, PlaneElement),
    Scalar(RatFun, RatFun),
}

impl Sides {
    pub fn discrepancy(&self) -> Discrepancy {
        match self {
            Sides::Plane(l, r) => Discrepancy::Plane(l - r),
            Sides::Scalar(l, r) => Discrepancy::Scalar(l - r),
        }
    }
}

/// `LHS - RHS` of a check.
#[derive(Debug, Clone, PartialEq)]
pub enum Discrepancy {
    Plane(PlaneElement),
    Scalar(RatFun),
    /// The check could not be evaluated.
    Unavailable,
}

impl Discrepancy {
    pub fn is_zero(&self) -> bool {
        match self {
            Discrepancy::Plane(p) => p.is_zero(),
            Discrepancy::Scalar(s) => s.is_zero(),
            Discrepancy::Unavailable => false,
        }
    }
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::Plane(p) => write!(f, "{p}"),
            Discrepancy::Scalar(s) if s.is_zero() => f.write_str("0"),
            Discrepancy::Scalar(s) => write!(f, "{s}"),
            Discrepancy::Unavailable => f.write_str("n/a"),
        }
    }
}

/// Outcome of one check. `holds` is true exactly when the discrepancy is
/// zero.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: Vec<i64>,
    pub order: Option<u32>,
    pub holds: bool,
    pub discrepancy: Discrepancy,
    pub elapsed: Duration,
    pub error: Option<String>,
}

impl IdentityReport {
    fn from_sides(check: &Check, sides: Sides, elapsed: Duration) -> Self {
        let discrepancy = sides.discrepancy();
        Self {
            identity: check.id(),
            params: check.params(),
            order: check.order(),
            holds: discrepancy.is_zero(),
            discrepancy,
            elapsed,
            error: None,
        }
    }

    fn failed(
        identity: IdentityId,
        params: Vec<i64>,
        order: Option<u32>,
        error: String,
        elapsed: Duration,
    ) -> Self {
        Self {
            identity,
            params,
            order,
            holds: false,
            discrepancy: Discrepancy::Unavailable,
            elapsed,
            error: Some(error),
        }
    }

    /// Serializable record with a stable field set.
    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            identity: self.identity,
            params: self.params.clone(),
            order: self.order,
            holds: self.holds,
            discrepancy: self.discrepancy.to_string(),
            elapsed_ms: self.elapsed.as_secs_f64() * 1e3,
            error: self.error.clone(),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(i64::to_string).collect();
        write!(
            f,
            "{}({}): {}",
            self.identity,
            params.join(", "),
            if self.holds { "holds" } else { "FAILS" }
        )?;
        match &self.error {
            Some(e) => write!(f, " [error: {e}]")?,
            None => write!(f, " [discrepancy: {}]", self.discrepancy)?,
        }
        write!(f, " ({:.1} ms)", self.elapsed.as_secs_f64() * 1e3)
    }
}

/// Wire form of a report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    pub identity: IdentityId,
    pub params: Vec<i64>,
    pub order: Option<u32>,
    pub holds: bool,
    pub discrepancy: String,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Coefficient of `xy` equal to `(1 - q^-1) yx`, i.e. `(q - 1) xy`.
pub fn reversed_correction() -> PlaneElement {
    PlaneElement::monomial(RatFun::from_poly(LaurentPoly::from_int_coeffs(&[-1, 1])), 1, 1)
}

/// `c * yx` written in normal order.
pub fn yx_term(c: RatFun) -> PlaneElement {
    pe_mul(&PlaneElement::scalar(c), &(&PlaneElement::y() * &PlaneElement::x()), None)
}

fn direct_sides(n: TruncationOrder) -> Result<Sides> {
    let (x, y) = (PlaneElement::x(), PlaneElement::y());
    let lhs = pe_mul(&q_exp(&x, n)?, &q_exp(&y, n)?, Some(n));
    let rhs = q_exp(&(&x + &y), n)?;
    Ok(Sides::Plane(lhs, rhs))
}

/// Sides of the reversed relation with the given correction term added to
/// the right-hand argument `x + y`.
pub fn reversed_sides(n: TruncationOrder, correction: &PlaneElement) -> Result<Sides> {
    let (x, y) = (PlaneElement::x(), PlaneElement::y());
    let lhs = pe_mul(&q_exp(&y, n)?, &q_exp(&x, n)?, Some(n));
    let rhs = q_exp(&(&(&x + &y) + correction), n)?;
    Ok(Sides::Plane(lhs, rhs))
}

/// Runs the reversed relation with a custom correction term; used to show
/// that a wrong correction is detected.
pub fn check_reversed_with(n: TruncationOrder, correction: &PlaneElement) -> IdentityReport {
    let check = Check::Reversed(n);
    let start = Instant::now();
    match reversed_sides(n, correction) {
        Ok(sides) => IdentityReport::from_sides(&check, sides, start.elapsed()),
        Err(e) => IdentityReport::failed(check.id(), check.params(), check.order(), e.to_string(), start.elapsed()),
    }
}

fn intermediate_sides(n: TruncationOrder) -> Result<Sides> {
    let (x, y) = (PlaneElement::x(), PlaneElement::y());
    let lhs = pe_mul(&q_exp(&y, n)?, &q_exp(&x, n)?, Some(n));
    let middle = q_exp(&reversed_correction(), n)?;
    let rhs = pe_mul(&pe_mul(&q_exp(&x, n)?, &middle, Some(n)), &q_exp(&y, n)?, Some(n));
    Ok(Sides::Plane(lhs, rhs))
}

fn xpower_sides(n: u32) -> Result<Sides> {
    let x = PlaneElement::x();
    let lhs = PlaneElement::monomial(RatFun::one(), n, 0);
    let mut rhs = PlaneElement::zero();
    // running product (x - 1)(x - q)...(x - q^(r-1))
    let mut falling = PlaneElement::one();
    for r in 0..=n {
        let coeff = RatFun::new(qpow_shifted_product(n as i64, r)?, qpow_shifted_product(r as i64, r)?)?;
        rhs = &rhs + &falling.scale(&coeff);
        let factor = &x - &PlaneElement::from(LaurentPoly::q_pow(r as i32));
        falling = pe_mul(&falling, &factor, None);
    }
    Ok(Sides::Plane(lhs, rhs))
}

fn qbinom_sides(n: u32) -> Sides {
    let lhs = pe_pow(&(&PlaneElement::x() + &PlaneElement::y()), n, TruncationOrder(n));
    let rhs = PlaneElement::from_terms((0..=n).map(|r| ((r, n - r), gauss_binomial(n, r as i64))));
    Sides::Plane(lhs, rhs)
}

fn classical_sides(n: TruncationOrder) -> Result<Sides> {
    let one = BigRational::one();
    let e = q_exp(&PlaneElement::x(), n)?;
    let correction = reversed_correction().specialize(&one)?;
    let lhs = &e.specialize(&one)? + &correction;
    let mut factorial = BigRational::one();
    let mut rhs = PlaneElement::zero();
    for m in 0..=n.get() {
        if m > 0 {
            factorial *= BigRational::from_integer(m.into());
        }
        rhs = &rhs + &PlaneElement::monomial(RatFun::constant(factorial.recip()), m, 0);
    }
    Ok(Sides::Plane(lhs, rhs))
}

pub fn check_direct(n: TruncationOrder) -> IdentityReport {
    Check::Direct(n).run()
}

pub fn check_reversed(n: TruncationOrder) -> IdentityReport {
    Check::Reversed(n).run()
}

pub fn check_intermediate(n: TruncationOrder) -> IdentityReport {
    Check::Intermediate(n).run()
}

/// Requires `n >= 1`.
pub fn check_xpower(n: u32) -> Result<IdentityReport> {
    Ok(Check::new(IdentityId::Xpower, &[n as i64])?.run())
}

pub fn check_coeff5(m: u32, n: u32) -> IdentityReport {
    Check::Coeff5(m, n).run()
}

pub fn check_qbinom(n: u32) -> IdentityReport {
    Check::Qbinom(n).run()
}

pub fn check_classical_limit(n: TruncationOrder) -> IdentityReport {
    Check::ClassicalLimit(n).run()
}

/// Runs every `(identity, params)` entry in parallel. Reports come back in
/// input order; invalid entries become failed reports.
pub fn run_suite(config: &[(IdentityId, Vec<i64>)]) -> Vec<IdentityReport> {
    config
        .par_iter()
        .map(|(id, params)| match Check::new(*id, params) {
            Ok(check) => check.run(),
            Err(e) => IdentityReport::failed(*id, params.clone(), None, e.to_string(), Duration::ZERO),
        })
        .collect()
}

/// The full battery: series checks for every order up to `max_order`,
/// index checks for every index up to `max_mn`.
pub fn battery(max_order: u32, max_mn: u32) -> Vec<(IdentityId, Vec<i64>)> {
    let mut config = Vec::new();
    for id in [
        IdentityId::Direct,
        IdentityId::Reversed,
        IdentityId::Intermediate,
        IdentityId::ClassicalLimit,
    ] {
        config.extend((0..=max_order as i64).map(|n| (id, vec![n])));
    }
    config.extend((1..=max_mn.max(1) as i64).map(|n| (IdentityId::Xpower, vec![n])));
    config.extend((0..=max_mn as i64).map(|n| (IdentityId::Qbinom, vec![n])));
    for m in 0..=max_mn as i64 {
        config.extend((0..=max_mn as i64).map(|n| (IdentityId::Coeff5, vec![m, n])));
    }
    config
}

/// `1 / [k]!` as a rational function.
pub fn inv_q_factorial(k: u32) -> RatFun {
    RatFun::new(LaurentPoly::one(), q_factorial(k)).expect("q-factorials are nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(n: u32) -> TruncationOrder {
        TruncationOrder(n)
    }

    #[test]
    fn direct_low_orders() {
        let r = check_direct(order(0));
        assert!(r.holds);
        let Sides::Plane(lhs, rhs) = Check::Direct(order(0)).sides().unwrap() else {
            unreachable!()
        };
        assert_eq!(lhs, PlaneElement::one());
        assert_eq!(rhs, PlaneElement::one());

        let Sides::Plane(lhs, _) = Check::Direct(order(2)).sides().unwrap() else {
            unreachable!()
        };
        assert_eq!(lhs.coeff(2, 0), inv_q_factorial(2));
        assert!(lhs.coeff(1, 1).is_one());
        assert_eq!(lhs.coeff(0, 2), inv_q_factorial(2));
        assert!(check_direct(order(2)).holds);
    }

    #[test]
    fn reversed_low_orders() {
        let Sides::Plane(lhs, rhs) = Check::Reversed(order(1)).sides().unwrap() else {
            unreachable!()
        };
        let linear = &(&PlaneElement::one() + &PlaneElement::x()) + &PlaneElement::y();
        assert_eq!(lhs, linear);
        assert_eq!(rhs, linear);

        let Sides::Plane(lhs, rhs) = Check::Reversed(order(2)).sides().unwrap() else {
            unreachable!()
        };
        assert_eq!(lhs.coeff(1, 1), RatFun::q_pow(1));
        assert_eq!(rhs.coeff(1, 1), RatFun::q_pow(1));
        assert!(check_reversed(order(2)).holds);
    }

    #[test]
    fn perturbed_correction_fails() {
        // (1 - q) yx instead of (1 - q^-1) yx
        let bad = yx_term(RatFun::from_poly(LaurentPoly::from_int_coeffs(&[1, -1])));
        let r = check_reversed_with(order(2), &bad);
        assert!(!r.holds);
        let Discrepancy::Plane(d) = &r.discrepancy else { unreachable!() };
        assert!(!d.coeff(1, 1).is_zero());
    }

    #[test]
    fn correction_matches_yx_form() {
        let c = &RatFun::one() - &RatFun::q_pow(-1);
        assert_eq!(yx_term(c), reversed_correction());
    }

    #[test]
    fn small_instances_hold() {
        assert!(check_intermediate(order(2)).holds);
        assert!(check_xpower(1).unwrap().holds);
        assert!(check_xpower(2).unwrap().holds);
        assert!(check_xpower(0).is_err());
        assert!(check_coeff5(0, 0).holds);
        assert!(check_coeff5(1, 1).holds);
        assert!(check_qbinom(1).holds);
        assert!(check_qbinom(2).holds);
        assert!(check_classical_limit(order(5)).holds);
    }

    #[test]
    fn classical_coefficients() {
        let Sides::Plane(lhs, _) = Check::ClassicalLimit(order(5)).sides().unwrap() else {
            unreachable!()
        };
        let expect = [1, 1, 2, 6, 24, 120];
        for (m, f) in expect.into_iter().enumerate() {
            assert_eq!(
                lhs.coeff(m as u32, 0),
                RatFun::constant(BigRational::new(1.into(), f.into()))
            );
        }
        assert!(lhs.coeff(1, 1).is_zero());
    }

    #[test]
    fn suite_ordering_and_errors() {
        assert!(run_suite(&[]).is_empty());
        let reports = run_suite(&[
            (IdentityId::Direct, vec![3]),
            (IdentityId::Reversed, vec![3]),
            (IdentityId::Xpower, vec![0]),
            (IdentityId::Coeff5, vec![1]),
        ]);
        assert_eq!(reports.len(), 4);
        assert_eq!(reports[0].identity, IdentityId::Direct);
        assert!(reports[0].holds && reports[1].holds);
        assert!(!reports[2].holds && reports[2].error.is_some());
        assert!(!reports[3].holds && reports[3].discrepancy == Discrepancy::Unavailable);
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!("classical".parse::<IdentityId>().unwrap(), IdentityId::ClassicalLimit);
        assert!("bogus".parse::<IdentityId>().is_err());
    }
}
