//! Recursive-descent parser for scalar expressions in `q`.
//!
//! Grammar: sums and differences of products and quotients of powers of
//! integers, `q`, and parenthesized subexpressions. `^` binds tightest and
//! accepts a signed integer exponent.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::Scalar;
use crate::error::{Error, Result};

pub(super) fn parse_scalar(s: &str) -> Result<Scalar> {
    let mut p = Parser {
        chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let src: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at offset {} in `{src}`", self.pos))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.checked_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let k = self.integer()?;
            let k: i64 = k
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return base.pow(if neg { -k } else { k });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(Scalar::q())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::Rational(BigRational::from_integer(n)))
            }
            _ => Err(self.error("expected a number, `q` or `(`")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        assert_eq!(parse_scalar("-1/2").unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(parse_scalar("(1 + q)/1").unwrap(), &Scalar::one() + &Scalar::q());
        assert_eq!(parse_scalar("-1/q").unwrap(), super::super::q_integer(-1));
        assert_eq!(parse_scalar("2*q^3").unwrap().to_string(), "2*q^3/1");
        assert_eq!(parse_scalar("q^-2").unwrap().to_string(), "1/q^2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_scalar("1 +"), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar("x"), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar("(1"), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar("1/0"), Err(Error::DivisionByZero)));
    }
}
