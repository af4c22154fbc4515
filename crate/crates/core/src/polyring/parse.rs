use super::order::TermOrder;
use super::poly::{Poly, PolyQ, PolyZ};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unexpected character `{0}` at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
}

/// Parse integer-coefficient polynomial text: variables from `vars`,
/// operators `+ - * ^`, parentheses, whitespace-insensitive.
/// Example: `y1^2 - y1`.
pub fn parse_poly(s: &str, vars: &[String], ord: TermOrder) -> Result<PolyZ, PolyParseError> {
    let mut p = Parser::new(s, vars, ord);
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(PolyParseError::UnexpectedChar(p.peek_char(), p.pos));
    }
    Ok(e)
}

/// Same grammar, coefficients embedded into ℚ.
pub fn parse_poly_q(s: &str, vars: &[String], ord: TermOrder) -> Result<PolyQ, PolyParseError> {
    let z = parse_poly(s, vars, ord)?;
    Ok(z.map_coeff(|c| BigRational::from_integer(c.clone()), ord))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [String],
    ord: TermOrder,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str, vars: &'a [String], ord: TermOrder) -> Self {
        Parser { bytes: s.as_bytes(), pos: 0, vars, ord }
    }

    fn peek_char(&self) -> char {
        self.bytes[self.pos] as char
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == c {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<PolyZ, PolyParseError> {
        let n = self.vars.len();
        let mut acc = Poly::zero(n);
        let mut sign = BigInt::one();
        if self.eat(b'-') {
            sign = -sign;
        } else {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign), self.ord);
            self.skip_ws();
            if self.eat(b'+') {
                sign = BigInt::one();
            } else if self.eat(b'-') {
                sign = -BigInt::one();
            } else {
                return Ok(acc);
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<PolyZ, PolyParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f, self.ord);
        }
        Ok(acc)
    }

    // factor := atom ('^' integer)?
    fn factor(&mut self) -> Result<PolyZ, PolyParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e: u32 = self
                .integer()?
                .try_into()
                .map_err(|_| PolyParseError::Expected("small exponent"))?;
            Ok(base.pow(e, self.ord))
        } else {
            Ok(base)
        }
    }

    // atom := integer | identifier | '(' expr ')'
    fn atom(&mut self) -> Result<PolyZ, PolyParseError> {
        self.skip_ws();
        if self.pos >= self.bytes.len() {
            return Err(PolyParseError::UnexpectedEnd);
        }
        let c = self.bytes[self.pos] as char;
        if c == '(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(b')') {
                return Err(PolyParseError::Expected("closing parenthesis"));
            }
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let v = self.integer()?;
            return Ok(Poly::constant(self.vars.len(), v));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = self.pos;
            while self.pos < self.bytes.len() {
                let ch = self.bytes[self.pos] as char;
                if ch.is_ascii_alphanumeric() || ch == '_' {
                    self.pos += 1;
                } else {
                    break;
                }
            }
            let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
            let idx = self
                .vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| PolyParseError::UnknownVariable(name.to_string()))?;
            return Ok(Poly::var(idx, self.vars.len()));
        }
        Err(PolyParseError::UnexpectedChar(c, self.pos))
    }

    fn integer(&mut self) -> Result<BigInt, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(PolyParseError::Expected("integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| PolyParseError::Expected("integer"))
    }
}
