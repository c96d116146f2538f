use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Expr, ExprKind};
use crate::coeff::RationalScalar;

/// Largest accepted exponent after `^`.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnknownIdentifier(String),
    Syntax {
        expected: Vec<&'static str>,
        found: String,
    },
    BadExponent(String),
    ZeroDenominator,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "lexical error: unexpected character {c:?}"),
            ParseErrorKind::UnknownIdentifier(s) => write!(
                f,
                "lexical error: unknown identifier {s:?} (multiplication must be written with '*')"
            ),
            ParseErrorKind::Syntax { expected, found } => {
                write!(f, "syntax error: expected {}, found {found}", expected.join(" or "))
            }
            ParseErrorKind::BadExponent(found) => write!(
                f,
                "exponent must be a nonnegative integer literal no larger than {MAX_EXPONENT}, found {found}"
            ),
            ParseErrorKind::ZeroDenominator => f.write_str("rational literal with zero denominator"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    X,
    Y,
    Q,
    QInv,
    ExpQ,
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::X => f.write_str("'x'"),
            Tok::Y => f.write_str("'y'"),
            Tok::Q => f.write_str("'q'"),
            Tok::QInv => f.write_str("'qinv'"),
            Tok::ExpQ => f.write_str("'expq'"),
            Tok::Nat(n) => write!(f, "'{n}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            let n: BigInt = input[pos..end].parse().expect("digits");
            out.push((Tok::Nat(n), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let tok = match &input[pos..end] {
                "x" => Tok::X,
                "y" => Tok::Y,
                "q" => Tok::Q,
                "qinv" => Tok::QInv,
                "expq" => Tok::ExpQ,
                other => {
                    return Err(ParseError {
                        pos,
                        kind: ParseErrorKind::UnknownIdentifier(other.to_string()),
                    })
                }
            };
            out.push((tok, pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        chars.next();
        out.push((tok, pos));
    }
    out.push((Tok::Eof, input.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            pos: self.pos(),
            kind: ParseErrorKind::Syntax {
                expected,
                found: self.peek().to_string(),
            },
        }
    }

    fn expect(&mut self, tok: Tok, what: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(vec![what]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let ctor = match self.peek() {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let pos = lhs.pos;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let ctor = match self.peek() {
                Tok::Star => ExprKind::Mul,
                Tok::Slash => ExprKind::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            let pos = lhs.pos;
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let (_, pos) = self.bump();
            let inner = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), pos));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let exp = match self.peek() {
            Tok::Nat(n) => u32::try_from(n).ok().filter(|&k| k <= MAX_EXPONENT),
            _ => None,
        };
        let Some(exp) = exp else {
            return Err(ParseError {
                pos,
                kind: ParseErrorKind::BadExponent(self.peek().to_string()),
            });
        };
        self.bump();
        if *self.peek() == Tok::Caret {
            // '^' does not associate
            return Err(self.error(vec!["operator", "')'", "end of input"]));
        }
        let pos = base.pos;
        Ok(Expr::new(ExprKind::Pow(Box::new(base), exp), pos))
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let kind = match self.peek().clone() {
            Tok::X => ExprKind::X,
            Tok::Y => ExprKind::Y,
            Tok::Q => ExprKind::Q,
            Tok::QInv => ExprKind::QInv,
            Tok::Nat(n) => {
                self.bump();
                let mut den = BigInt::from(1);
                if *self.peek() == Tok::Slash {
                    if let Tok::Nat(d) = self.peek2().clone() {
                        let dpos = self.toks[self.at + 1].1;
                        if d.is_zero() {
                            return Err(ParseError {
                                pos: dpos,
                                kind: ParseErrorKind::ZeroDenominator,
                            });
                        }
                        self.bump();
                        self.bump();
                        den = d;
                    }
                }
                return Ok(Expr::new(ExprKind::Rational(RationalScalar::new(n, den)), pos));
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Expr::new(inner.kind, pos));
            }
            Tok::ExpQ => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Expr::new(ExprKind::QExp(Box::new(inner)), pos));
            }
            _ => {
                return Err(self.error(vec![
                    "'x'", "'y'", "'q'", "'qinv'", "number", "'('", "'expq'",
                ]))
            }
        };
        self.bump();
        Ok(Expr::new(kind, pos))
    }
}

/// Parses one complete expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        let expected = if *p.peek() == Tok::Caret {
            vec!["operator", "')'", "end of input"]
        } else {
            vec!["'+'", "'-'", "'*'", "'/'", "end of input"]
        };
        return Err(p.error(expected));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(kind: ExprKind, pos: usize) -> Box<Expr> {
        Box::new(Expr::new(kind, pos))
    }

    /// Tree shape without positions.
    fn shape(e: &Expr) -> String {
        e.to_string()
    }

    #[test]
    fn simple_product() {
        let e = parse("y*x").unwrap();
        assert_eq!(
            e,
            Expr::new(ExprKind::Mul(bx(ExprKind::Y, 0), bx(ExprKind::X, 2)), 0)
        );
    }

    #[test]
    fn reversed_relation_argument() {
        let e = parse("expq(x + y + (1 - qinv)*y*x)").unwrap();
        assert_eq!(shape(&e), "expq(((x + y) + (((1 - qinv) * y) * x)))");
        let ExprKind::QExp(inner) = e.kind else { panic!() };
        let ExprKind::Add(_, rhs) = inner.kind else { panic!() };
        let ExprKind::Mul(left, right) = rhs.kind else { panic!() };
        assert_eq!(right.kind, ExprKind::X);
        let ExprKind::Mul(coef, y) = left.kind else { panic!() };
        assert_eq!(y.kind, ExprKind::Y);
        assert!(matches!(coef.kind, ExprKind::Sub(..)));
    }

    #[test]
    fn precedence() {
        assert_eq!(shape(&parse("-x^2*y").unwrap()), "(-((x)^2) * y)");
        assert_eq!(shape(&parse("x + y*x - 1").unwrap()), "((x + (y * x)) - 1)");
        assert_eq!(shape(&parse("2/3^2").unwrap()), "(2/3)^2");
        assert_eq!(shape(&parse("x/2/3").unwrap()), "(x) / (2/3)");
        assert_eq!(shape(&parse("x*y*x").unwrap()), "((x * y) * x)");
    }

    #[test]
    fn exponent_must_be_bare_nat() {
        let err = parse("x^(2)").unwrap_err();
        assert_eq!(err.pos, 2);
        assert!(matches!(err.kind, ParseErrorKind::BadExponent(_)));
        assert!(matches!(parse("q^-1").unwrap_err().kind, ParseErrorKind::BadExponent(_)));
        assert!(matches!(parse("x^999").unwrap_err().kind, ParseErrorKind::BadExponent(_)));
        assert!(parse("x^2^3").is_err());
    }

    #[test]
    fn lexical_errors() {
        assert_eq!(
            parse("x + $").unwrap_err(),
            ParseError {
                pos: 4,
                kind: ParseErrorKind::UnexpectedChar('$')
            }
        );
        assert_eq!(
            parse("xy").unwrap_err().kind,
            ParseErrorKind::UnknownIdentifier("xy".into())
        );
        assert_eq!(parse("1/0").unwrap_err().kind, ParseErrorKind::ZeroDenominator);
    }

    #[test]
    fn syntax_errors() {
        let e = parse("x +").unwrap_err();
        assert_eq!(e.pos, 3);
        assert!(matches!(e.kind, ParseErrorKind::Syntax { .. }));
        assert_eq!(parse("(x").unwrap_err().pos, 2);
        assert_eq!(parse("x y").unwrap_err().pos, 2);
        assert!(parse("").is_err());
        assert!(parse("expq x").is_err());
    }
}
