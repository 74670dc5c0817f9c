//! Expressions such as `s[3,1]*s[2,1] - 2/3*h[4]` or `(e[2] + p[1,1])^2`.
//!
//! ```text
//! expr    = term (('+' | '-') term)*
//! term    = unary ('*' unary)*
//! unary   = '-' unary | power
//! power   = primary ('^' integer)?
//! primary = integer ('/' integer)? | letter '[' parts ('/' parts)? ']' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::exact::Rat;
use crate::tableau::Partition;

use super::{Basis, SymError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Expr {
    Number(Rat),
    Atom {
        basis: Basis,
        outer: Partition,
        inner: Option<Partition>,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Letter(char),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, SymError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Token::Int(digits.parse().expect("ascii digits"))));
        } else if c.is_ascii_alphabetic() {
            out.push((i, Token::Letter(c)));
            i += 1;
        } else if "+-*^/()[],".contains(c) {
            out.push((i, Token::Sym(c)));
            i += 1;
        } else {
            return Err(SymError::Parse(format!("unexpected character '{c}' at {i}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(i, _)| *i)
    }

    fn error(&self, what: &str) -> SymError {
        SymError::Parse(format!("expected {what} at {}", self.at()))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SymError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn int(&mut self) -> Result<BigInt, SymError> {
        match self.peek() {
            Some(Token::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error("an integer")),
        }
    }

    fn small(&mut self) -> Result<usize, SymError> {
        let n = self.int()?;
        usize::try_from(&n).map_err(|_| SymError::Parse(format!("{n} is too large")))
    }

    fn expr(&mut self) -> Result<Expr, SymError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SymError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, SymError> {
        let base = self.primary()?;
        if self.eat('^') {
            let n = self.small()?;
            let n = u32::try_from(n).map_err(|_| SymError::Parse(format!("exponent {n} is too large")))?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Expr, SymError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn primary(&mut self) -> Result<Expr, SymError> {
        match self.peek().cloned() {
            Some(Token::Int(_)) => {
                let n = self.int()?;
                if self.eat('/') {
                    let d = self.int()?;
                    if d == BigInt::default() {
                        return Err(SymError::Parse("zero denominator".into()));
                    }
                    return Ok(Expr::Number(Rat::new(n, d)));
                }
                Ok(Expr::Number(Rat::from_integer(n)))
            }
            Some(Token::Letter(c)) => {
                let basis = Basis::from_letter(c).ok_or_else(|| SymError::UnknownBasis(c.to_string()))?;
                self.pos += 1;
                self.expect('[')?;
                let outer = self.parts()?;
                let inner = if self.eat('/') { Some(self.parts()?) } else { None };
                self.expect(']')?;
                if inner.is_some() && basis != Basis::S {
                    return Err(SymError::SkewOutsideSchur);
                }
                Ok(Expr::Atom { basis, outer, inner })
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => Err(self.error("a number, a basis element or '('")),
        }
    }

    fn parts(&mut self) -> Result<Partition, SymError> {
        let mut parts = Vec::new();
        if matches!(self.peek(), Some(Token::Int(_))) {
            parts.push(self.small()?);
            while self.eat(',') {
                parts.push(self.small()?);
            }
        }
        Ok(Partition::new(parts)?)
    }
}

pub(crate) fn parse_expr(text: &str) -> Result<Expr, SymError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        len: text.chars().count(),
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}
