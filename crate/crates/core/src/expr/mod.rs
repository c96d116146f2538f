//! Expression language for quantum-plane elements.
//!
//! ```text
//! expr    := term (("+"|"-") term)*
//! term    := unary (("*"|"/") unary)*
//! unary   := "-" unary | factor
//! factor  := base ("^" nat)?
//! base    := "x" | "y" | "q" | "qinv" | rational | "(" expr ")" | "expq" "(" expr ")"
//! rational:= nat ("/" nat)?
//! nat     := digit+
//! ```
//!
//! Multiplication is always explicit. A divisor must elaborate to a nonzero
//! pure coefficient. A rational literal `a/b` binds tighter than `/`, so
//! `x/2/3` reads as `x / (2/3)`.

mod elaborate;
mod parser;

use std::fmt;

use crate::coeff::RationalScalar;

pub use elaborate::{elaborate, ElabError};
pub use parser::{parse, ParseError, ParseErrorKind, MAX_EXPONENT};

/// Parsed expression with the byte offset where each node starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    X,
    Y,
    Q,
    QInv,
    Rational(RationalScalar),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    QExp(Box<Expr>),
}

impl Expr {
    pub fn new(kind: ExprKind, pos: usize) -> Self {
        Self { kind, pos }
    }
}

/// Fully parenthesized rendering; parses back to an equal tree up to
/// positions.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::X => f.write_str("x"),
            ExprKind::Y => f.write_str("y"),
            ExprKind::Q => f.write_str("q"),
            ExprKind::QInv => f.write_str("qinv"),
            ExprKind::Rational(r) => f.write_str(&crate::coeff::fmt_rational(r)),
            ExprKind::Neg(a) => write!(f, "-({a})"),
            ExprKind::Add(a, b) => write!(f, "({a} + {b})"),
            ExprKind::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprKind::Mul(a, b) => write!(f, "({a} * {b})"),
            ExprKind::Div(a, b) => write!(f, "({a}) / ({b})"),
            ExprKind::Pow(a, k) => write!(f, "({a})^{k}"),
            ExprKind::QExp(a) => write!(f, "expq({a})"),
        }
    }
}

/// Points at `pos` inside `input` with a caret line.
pub fn caret_diagnostic(input: &str, pos: usize, message: &str) -> String {
    let col = input
        .char_indices()
        .take_while(|(i, _)| *i < pos)
        .count();
    format!("error: {message}\n  {input}\n  {}^", " ".repeat(col))
}
