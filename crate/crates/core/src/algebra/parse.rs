//! Recursive-descent reader for the textual polynomial format.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ['^' power]
//! atom    := integer ['/' integer] | ident | '(' expr ')'
//! power   := ['-'] integer | '(' ['-'] integer ')'
//! ```

use num_bigint::BigInt;

use super::{AlgebraError, LaurentPoly, Rational};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small_int(&mut self) -> Result<i32, AlgebraError> {
        let neg = self.eat(b'-');
        let v = self.integer()?;
        let v: i32 = v
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<LaurentPoly, AlgebraError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, AlgebraError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, AlgebraError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = if self.eat(b'(') {
                let k = self.small_int()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                k
            } else {
                self.small_int()?
            };
            return base.pow(k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LaurentPoly, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let d = if self.eat(b'/') {
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                if d == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                Ok(LaurentPoly::constant(Rational::new(n, d)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(LaurentPoly::var(name))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(crate) fn parse_poly(text: &str) -> Result<LaurentPoly, AlgebraError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn accepts_both_negative_exponent_spellings() {
        assert_eq!(parse_poly("x^-1").unwrap(), parse_poly("x^(-1)").unwrap());
    }

    #[test]
    fn parenthesised_powers_expand() {
        assert_eq!(
            parse_poly("(1 + x)^2").unwrap(),
            parse_poly("x^2 + 2*x + 1").unwrap()
        );
    }

    #[test]
    fn rational_coefficients() {
        let q = parse_poly("-3/2*x + 1/3").unwrap();
        assert_eq!(
            q,
            LaurentPoly::monomial(rat(-3, 2), &[("x", 1)]).unwrap()
                + LaurentPoly::constant(rat(1, 3))
        );
    }

    #[test]
    fn errors_are_reported() {
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("x y").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("(1+x)^-1").is_err());
    }
}
