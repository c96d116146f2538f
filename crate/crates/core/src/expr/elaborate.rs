use thiserror::Error;

use super::{Expr, ExprKind};
use crate::coeff::{LaurentPoly, RatFun};
use crate::error::Error;
use crate::plane::{pe_mul, pe_pow, q_exp, PlaneElement, TruncationOrder};

/// Elaboration failure tied to the source position of the offending node.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {pos}")]
pub struct ElabError {
    pub pos: usize,
    pub message: String,
}

impl ElabError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        Self {
            pos,
            message: message.into(),
        }
    }
}

/// Evaluates an expression bottom-up in the quantum-plane algebra, with all
/// products, powers and q-exponentials truncated at `cutoff`.
pub fn elaborate(ast: &Expr, cutoff: TruncationOrder) -> Result<PlaneElement, ElabError> {
    let n = Some(cutoff);
    let out = match &ast.kind {
        ExprKind::X => PlaneElement::x(),
        ExprKind::Y => PlaneElement::y(),
        ExprKind::Q => PlaneElement::from(LaurentPoly::q()),
        ExprKind::QInv => PlaneElement::from(LaurentPoly::q_inv()),
        ExprKind::Rational(r) => PlaneElement::scalar(RatFun::constant(r.clone())),
        ExprKind::Neg(a) => -elaborate(a, cutoff)?,
        ExprKind::Add(a, b) => &elaborate(a, cutoff)? + &elaborate(b, cutoff)?,
        ExprKind::Sub(a, b) => &elaborate(a, cutoff)? - &elaborate(b, cutoff)?,
        ExprKind::Mul(a, b) => pe_mul(&elaborate(a, cutoff)?, &elaborate(b, cutoff)?, n),
        ExprKind::Div(a, b) => {
            let num = elaborate(a, cutoff)?;
            let den = elaborate(b, cutoff)?;
            let Some(den) = den.as_scalar() else {
                return Err(ElabError::new(
                    b.pos,
                    "divisor must be a coefficient (no x or y)",
                ));
            };
            let inv = den
                .recip()
                .map_err(|_| ElabError::new(b.pos, "division by zero"))?;
            num.scale(&inv)
        }
        ExprKind::Pow(a, k) => pe_pow(&elaborate(a, cutoff)?, *k, cutoff),
        ExprKind::QExp(a) => {
            let arg = elaborate(a, cutoff)?;
            q_exp(&arg, cutoff).map_err(|e| match e {
                Error::ConstantTerm => ElabError::new(
                    ast.pos,
                    "expq argument has a nonzero constant term",
                ),
                other => ElabError::new(ast.pos, other.to_string()),
            })?
        }
    };
    Ok(out.truncate(cutoff))
}
