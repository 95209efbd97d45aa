use num_bigint::BigInt;

use super::{Expr, ParseError};
use crate::algebra::Rational;

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Pull,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
    Bad(char),
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Vec<Spanned> {
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = col;
        let (tok, len) = if c.is_ascii_digit() {
            let n = chars[i..].iter().take_while(|c| c.is_ascii_digit()).count();
            let s: String = chars[i..i + n].iter().collect();
            (Tok::Int(s.parse().expect("digits")), n)
        } else if c.is_ascii_alphabetic() {
            let n = chars[i..].iter().take_while(|c| c.is_ascii_alphanumeric()).count();
            let s: String = chars[i..i + n].iter().collect();
            if s == "p" && chars.get(i + 1) == Some(&'*') && chars.get(i + 2) == Some(&'(') {
                (Tok::Pull, 3)
            } else {
                (Tok::Ident(s), n)
            }
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => Tok::Bad(other),
            };
            (t, 1)
        };
        out.push(Spanned { tok, line, column: start });
        i += len;
        col += len;
    }
    out.push(Spanned { tok: Tok::End, line, column: col });
    out
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const ATOM_START: [&str; 4] = ["rational", "identifier", "'p*('", "'('"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError { line: s.line, column: s.column, expected: expected.iter().map(|e| e.to_string()).collect() }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::Pull | Tok::LParen)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut terms = vec![if neg { Expr::Neg(Box::new(first)) } else { first }];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
                factors.push(self.factor()?);
            } else if self.starts_atom() {
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let expected = ["nonnegative integer exponent"];
        match self.peek().clone() {
            Tok::Int(n) => match u32::try_from(&n) {
                Ok(e) if e <= MAX_EXPONENT => {
                    self.bump();
                    Ok(Expr::Power(Box::new(base), e))
                }
                _ => Err(self.error(&["exponent at most 64"])),
            },
            _ => Err(self.error(&expected)),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Num(Rational::from_integer(n)));
                }
                self.bump();
                match self.peek().clone() {
                    Tok::Int(m) if m != BigInt::from(0) => {
                        self.bump();
                        Ok(Expr::Num(Rational::new(n, m)))
                    }
                    _ => Err(self.error(&["nonzero integer denominator"])),
                }
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Ident(s))
            }
            Tok::Pull => {
                self.bump();
                let inner = self.expr()?;
                self.close()?;
                Ok(Expr::Pullback(Box::new(inner)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.close()?;
                Ok(inner)
            }
            _ => Err(self.error(&ATOM_START)),
        }
    }

    fn close(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&["'+'", "'-'", "'*'", "'^'", "')'"]))
        }
    }
}

/// Parses a cycle-class expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text), pos: 0 };
    if *p.peek() == Tok::End {
        return Err(p.error(&["expression"]));
    }
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(e)
}
