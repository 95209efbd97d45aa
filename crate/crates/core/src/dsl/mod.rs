//! Cycle-class expressions: `expr := term (('+'|'-') term)*`,
//! `term := factor ('*'? factor)*`, `factor := atom ('^' int)?`,
//! `atom := rational | ident | 'p*(' expr ')' | '(' expr ')'`.

mod elaborate;
mod parse;

use std::fmt;

use thiserror::Error;

use crate::algebra::Rational;
use crate::chow::ChowError;

pub use elaborate::{elaborate, eval_expr, DslContext, Evaluation};
pub use parse::parse_expr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Ident(String),
    Pullback(Box<Expr>),
    /// two or more terms, or a single negated term
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
    /// two or more factors
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("unknown identifier {0}")]
    UnknownIdentifier(String),
    #[error("pullback of a class that does not come from the base: {0}")]
    PullbackOfNonBase(String),
    #[error("grade mismatch: {left} against {right}")]
    GradeMismatch { left: u32, right: u32 },
    #[error("binding failed: {0}")]
    Binding(String),
    #[error(transparent)]
    Chow(#[from] ChowError),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(_) | Expr::Neg(_) => 0,
            Expr::Product(_) => 1,
            Expr::Power(..) => 2,
            Expr::Num(_) | Expr::Ident(_) | Expr::Pullback(_) => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Num(r) => write!(f, "{r}"),
            Expr::Ident(n) => write!(f, "{n}"),
            Expr::Pullback(e) => {
                write!(f, "p*(")?;
                e.fmt_at(f, 0)?;
                write!(f, ")")
            }
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_at(f, 1)
            }
            Expr::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    match (i, t) {
                        (0, Expr::Neg(inner)) => {
                            write!(f, "-")?;
                            inner.fmt_at(f, 1)?;
                        }
                        (0, _) => t.fmt_at(f, 1)?,
                        (_, Expr::Neg(inner)) => {
                            write!(f, " - ")?;
                            inner.fmt_at(f, 1)?;
                        }
                        _ => {
                            write!(f, " + ")?;
                            t.fmt_at(f, 1)?;
                        }
                    }
                }
                Ok(())
            }
            Expr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    // nested products keep their parentheses
                    x.fmt_at(f, 2)?;
                }
                Ok(())
            }
            Expr::Power(b, n) => {
                b.fmt_at(f, 3)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}
