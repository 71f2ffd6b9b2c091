//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom (('^' | '**') integer)?
//! atom   := number | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::multi::MultiPoly;
use crate::error::{Error, Result};
use crate::numeric::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexed {
    tok: Tok,
    col: usize,
}

fn lex(text: &str, line: usize) -> Result<Vec<Lexed>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let tok = if s.contains('.') {
                Tok::Num(parse_rational(&s).map_err(|_| Error::parse(line, col, format!("bad number `{s}`")))?)
            } else {
                Tok::Int(s.parse().map_err(|_| Error::parse(line, col, format!("bad number `{s}`")))?)
            };
            out.push(Lexed { tok, col });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Lexed {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' if chars.get(i + 1) == Some(&'*') => {
                i += 1;
                Tok::Caret
            }
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(Error::parse(line, col, format!("unexpected character `{other}`"))),
        };
        out.push(Lexed { tok, col });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Lexed>,
    pos: usize,
    line: usize,
    end_col: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |l| l.col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), msg)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|l| l.tok.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let col = self.col();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(Error::parse(self.line, col, "can only divide by a nonzero constant"));
                    }
                    let c = d.coeff(&super::Monomial::one(d.nvars()));
                    acc = acc.scale(&c.recip());
                }
                Some(Tok::Num(_) | Tok::Int(_) | Tok::Ident(_) | Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Int(e)) => {
                    let e = e
                        .to_u32()
                        .filter(|&e| e <= 10_000)
                        .ok_or_else(|| Error::parse(self.line, col, "exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::parse(self.line, col, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let n = self.vars.len();
        let col = self.col();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(MultiPoly::constant(n, Rational::from_integer(v))),
            Some(Tok::Num(q)) => Ok(MultiPoly::constant(n, q)),
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(k) => Ok(MultiPoly::var(n, k)),
                None => Err(Error::parse(self.line, col, format!("undeclared variable `{name}`"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(_) => Err(Error::parse(self.line, col, "expected a number, variable or `(`")),
            None => Err(Error::parse(self.line, col, "unexpected end of input")),
        }
    }
}

/// Parses one polynomial over the given ordered variables. `line` is only
/// used for error positions.
pub fn parse_polynomial(text: &str, vars: &[String], line: usize) -> Result<MultiPoly> {
    let toks = lex(text, line)?;
    if toks.is_empty() {
        return Err(Error::parse(line, 1, "empty polynomial"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        end_col: text.chars().count() + 1,
        vars,
    };
    let poly = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    fn vars(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_sphere() {
        let v = vars(&["x", "y", "z"]);
        let p = parse_polynomial("x^2 + y^2 + z^2 - 3", &v, 1).unwrap();
        let q = MultiPoly::from_terms(
            3,
            [
                (vec![2, 0, 0], int(1)),
                (vec![0, 2, 0], int(1)),
                (vec![0, 0, 2], int(1)),
                (vec![0, 0, 0], int(-3)),
            ],
        );
        assert_eq!(p, q);
    }

    #[test]
    fn implicit_mult_division_and_parens() {
        let v = vars(&["u", "z"]);
        let p = parse_polynomial("24 u z - (u z)^2/2 + 0.5", &v, 1).unwrap();
        let q = MultiPoly::from_terms(
            2,
            [
                (vec![1, 1], int(24)),
                (vec![2, 2], rat(-1, 2)),
                (vec![0, 0], rat(1, 2)),
            ],
        );
        assert_eq!(p, q);
        assert_eq!(parse_polynomial("x**3", &vars(&["x"]), 1).unwrap(), MultiPoly::var(1, 0).pow(3));
    }

    #[test]
    fn error_positions() {
        let v = vars(&["x"]);
        match parse_polynomial("y - 1", &v, 2) {
            Err(Error::Parse { line: 2, column: 1, message }) => assert!(message.contains("undeclared")),
            other => panic!("{other:?}"),
        }
        match parse_polynomial("x + $", &v, 1) {
            Err(Error::Parse { column: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x / x", &v, 1).is_err());
        assert!(parse_polynomial("(x + 1", &v, 1).is_err());
        assert!(parse_polynomial("x^-1", &v, 1).is_err());
    }
}
