//! Recursive-descent parser for rational-function expressions.
//!
//! Grammar (whitespace insignificant):
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['_' uint] ['^' ['-'] uint]
//! atom   := uint | 'n' | 'N' | '(' expr ')'
//! ```
//! `_j` is the falling-factorial postfix: `(n-1)_3 = (n-1)(n-2)(n-3)`.

use crate::error::{Error, Result};

use super::poly::Var;
use super::RatFunc;

pub fn parse_ratfunc(input: &str) -> Result<RatFunc> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
        input,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::parse(format!(
            "unexpected trailing input at byte {}: `{}`",
            p.pos,
            &input[p.pos..]
        )));
    }
    Ok(v)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.bump() {
            Some(x) if x == b => Ok(()),
            _ => Err(Error::parse(format!(
                "expected `{}` at byte {} in `{}`",
                b as char, self.pos, self.input
            ))),
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                self.term()?.neg()
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.bump();
                    acc = acc.div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let mut v = self.atom()?;
        if self.peek() == Some(b'_') {
            self.bump();
            let j = self.uint()?;
            v = falling_of(&v, j)?;
        }
        if self.peek() == Some(b'^') {
            self.bump();
            let neg = if self.peek() == Some(b'-') {
                self.bump();
                true
            } else {
                false
            };
            let k = self.uint()? as i32;
            v = v.powi(if neg { -k } else { k })?;
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'n') => {
                self.bump();
                Ok(RatFunc::var(Var::SampleSize))
            }
            Some(b'N') => {
                self.bump();
                Ok(RatFunc::var(Var::PopSize))
            }
            Some(b) if b.is_ascii_digit() => {
                let k = self.uint()?;
                Ok(RatFunc::from_int(k as i64))
            }
            _ => Err(Error::parse(format!(
                "expected atom at byte {} in `{}`",
                self.pos, self.input
            ))),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(format!(
                "expected integer at byte {} in `{}`",
                start, self.input
            )));
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(format!("integer overflow in `{}`", self.input)))
    }
}

/// `(x)_j` for an arbitrary polynomial base; errors when the base is a
/// genuine fraction (the sugar is only meaningful for polynomial arguments).
fn falling_of(base: &RatFunc, j: u32) -> Result<RatFunc> {
    if !base.denom().is_one() {
        return Err(Error::parse(
            "falling factorial `_j` requires a polynomial base",
        ));
    }
    Ok(RatFunc::from_poly(super::poly::Poly2::falling_of(
        base.numer(),
        j,
    )))
}

#[cfg(test)]
mod tests {
    use super::super::poly::brat;
    use super::*;

    #[test]
    fn parses_basic_forms() {
        let f = parse_ratfunc("N*(n-1)/(n*(N-1))").unwrap();
        assert_eq!(f.eval(&brat(2), &brat(3)).unwrap(), brat(3) / brat(4));
    }

    #[test]
    fn falling_factorial_sugar() {
        let f = parse_ratfunc("(n-1)_3").unwrap();
        // (n-1)(n-2)(n-3) at n=5: 4*3*2
        assert_eq!(f.eval(&brat(5), &brat(0)).unwrap(), brat(24));
        let g = parse_ratfunc("(N-1)_4^-1").unwrap();
        assert_eq!(
            g.eval(&brat(0), &brat(5)).unwrap(),
            brat(1) / brat(24)
        );
    }

    #[test]
    fn negative_exponents() {
        let f = parse_ratfunc("10*N*(n-1)*(N-n)_2*(N-2*n)*n^-4*(N-1)_4^-1").unwrap();
        assert!(!f.is_zero());
        let g = parse_ratfunc("n^-2").unwrap();
        assert_eq!(g.eval(&brat(4), &brat(1)).unwrap(), brat(1) / brat(16));
    }

    #[test]
    fn roundtrip_examples() {
        for s in [
            "N*(n-1)/(n*(N-1))",
            "(N-n)/(n*(N-1))",
            "1",
            "0",
            "-3/7",
            "n^5",
            "(n^2-3*n+3)",
        ] {
            let f = parse_ratfunc(s).unwrap();
            let back = parse_ratfunc(&f.to_string()).unwrap();
            assert_eq!(f, back, "roundtrip of {s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("").is_err());
        assert!(parse_ratfunc("n +").is_err());
        assert!(parse_ratfunc("x").is_err());
        assert!(parse_ratfunc("(n").is_err());
        assert!(parse_ratfunc("1/0").is_err());
    }
}
