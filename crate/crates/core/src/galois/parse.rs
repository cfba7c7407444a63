//! Parser for integer polynomials in `x`, e.g. `x^5+2*x^4-44*x^3` or
//! `(x-8)*(x^2+1)^2`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'x' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at position {position}: {message}")]
pub struct PolyParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError { position: self.pos, message: message.into() })
    }

    fn int(&mut self) -> Result<BigInt, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn expr(&mut self) -> Result<IntPolynomial, PolyParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial, PolyParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntPolynomial, PolyParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<IntPolynomial, PolyParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let e = self.int()?;
        match e.to_u32().filter(|&e| e <= 4096) {
            Some(e) => Ok(base.pow(e)),
            None => Err(PolyParseError { position: at, message: "exponent too large".into() }),
        }
    }

    fn atom(&mut self) -> Result<IntPolynomial, PolyParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(IntPolynomial::constant(self.int()?)),
            Some(b'x') => {
                self.pos += 1;
                Ok(IntPolynomial::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(_) => self.err("expected a number, x or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse(s: &str) -> Result<IntPolynomial, PolyParseError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}
