//! Polynomial text parsing.
//!
//! Grammar: integer or rational coefficients, operators `+ - * ^`,
//! parentheses, variable names from the supplied order. `^` takes a
//! nonnegative integer exponent.

use crate::error::CadError;
use crate::poly::MultiPoly;
use crate::rat::Rational;
use crate::var::VarOrder;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn parse_poly(text: &str, order: &VarOrder) -> Result<MultiPoly, CadError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        order,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    order: &'a VarOrder,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> CadError {
        CadError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn expr(&mut self) -> Result<MultiPoly, CadError> {
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == b'-' {
                self.pos += 1;
                negate = true;
            } else if c == b'+' {
                self.pos += 1;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                b'-' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, CadError> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, CadError> {
        let base = self.base()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let e = self.uint()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly, CadError> {
        match self.peek() {
            None => Err(self.err("expected a polynomial factor")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.bigint()?;
                if let Some(b'/') = self.peek() {
                    self.pos += 1;
                    let d = self.bigint()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(MultiPoly::constant(Rational::new(n, d)))
                } else {
                    Ok(MultiPoly::constant(Rational::from(n)))
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
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match self.order.find(name) {
                    Some(v) => Ok(MultiPoly::variable(v)),
                    None => Err(CadError::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }

    fn bigint(&mut self) -> Result<BigInt, CadError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn uint(&mut self) -> Result<usize, CadError> {
        let n = self.bigint()?;
        n.to_usize()
            .filter(|&k| k <= u32::MAX as usize)
            .ok_or_else(|| self.err("exponent out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_style_inputs() {
        let ord = VarOrder::new(vec!["x", "y"]);
        assert!(parse_poly("x^2+y^2-1", &ord).is_ok());
        assert!(parse_poly("x*y-1/4", &ord).is_ok());
        assert!(parse_poly("(x-1)^2+(y-1)^2-1", &ord).is_ok());
        assert!(parse_poly(" - x ^ 2 + 3 * y ", &ord).is_ok());
    }

    #[test]
    fn rejects_bad_input_with_position() {
        let ord = VarOrder::new(vec!["x", "y"]);
        match parse_poly("x^2+", &ord) {
            Err(CadError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("x+z", &ord) {
            Err(CadError::UnknownVariable(n)) => assert_eq!(n, "z"),
            other => panic!("expected unknown variable, got {other:?}"),
        }
    }
}
