//! Polynomial expression parser.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := ['-'] factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := uint ('/' uint)? | ident | '(' expr ')'
//! ```
//!
//! Integer literals map into the coefficient field. The optional `/ uint`
//! suffix forms an exact field constant, so canonical output with fractional
//! coefficients parses back; input files normally stick to integers.

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use num_bigint::BigInt;
use std::sync::Arc;

pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Poly> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring: ring.clone(),
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    ring: Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let negate = self.eat(b'-');
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let exp = self.uint("exponent")?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.uint_big()?;
                if self.eat(b'/') {
                    self.skip_ws();
                    let denom = self.uint_big()?;
                    let c = self
                        .ring
                        .field()
                        .from_fraction(&numer, &denom)
                        .map_err(|m| self.error(&m))?;
                    Ok(Poly::constant(&self.ring, c))
                } else {
                    Ok(Poly::constant(&self.ring, self.ring.field().from_bigint(&numer)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos])
                    .expect("ascii identifier");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Poly::var(&self.ring, i)),
                    None => Err(Error::Parse {
                        pos: start,
                        message: format!("unknown identifier `{name}`"),
                    }),
                }
            }
            _ => Err(self.error("expected a number, identifier or `(`")),
        }
    }

    fn uint(&mut self, what: &str) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse {
                pos: start,
                message: format!("expected a non-negative integer {what}"),
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                message: format!("{what} too large"),
            })
    }

    fn uint_big(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .expect("digits form an integer"))
    }
}
