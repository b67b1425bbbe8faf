//! Parser for the scalar literal grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' exponent)?
//! atom  := integer | 'zeta(' integer ')' | 't' | '(' expr ')'
//! ```
//!
//! Examples: `-1`, `3/4`, `zeta(3)`, `-zeta(3)^2`, `1/2*zeta(4)`, `(1+t)/(1-t)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Cyclotomic, Field, Scalar};
use crate::error::HopfError;

pub fn parse_scalar(src: &str) -> Result<Scalar, HopfError> {
    let chars: Vec<char> = src.chars().collect();
    let mut p = Parser { chars, pos: 0, src };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> HopfError {
        HopfError::Parse(format!("{what} at offset {} in scalar {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), HopfError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Scalar, HopfError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add_ref(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub_ref(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, HopfError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul_ref(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.div_ref(&d).ok_or_else(|| self.error("division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, HopfError> {
        if self.eat('-') {
            return Ok(self.unary()?.neg_ref());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, HopfError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e = self.integer()?;
        if paren {
            self.expect(')')?;
        }
        let e = i64::try_from(&e).map_err(|_| self.error("exponent too large"))?;
        let e = if neg { -e } else { e };
        base.pow_i64(e).ok_or_else(|| self.error("zero to a negative power"))
    }

    fn integer(&mut self) -> Result<BigInt, HopfError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("bad integer"))
    }

    fn atom(&mut self) -> Result<Scalar, HopfError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some('t') => {
                self.pos += 1;
                Ok(Scalar::parameter())
            }
            Some('z') => {
                let word: String = self.chars[self.pos..].iter().take(4).collect();
                if word != "zeta" {
                    return Err(self.error("unexpected token"));
                }
                self.pos += 4;
                self.expect('(')?;
                let n = self.integer()?;
                self.expect(')')?;
                let n = u64::try_from(&n).map_err(|_| self.error("bad conductor"))?;
                if n == 0 {
                    return Err(self.error("conductor must be positive"));
                }
                Ok(Scalar::constant(Cyclotomic::zeta(n)))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Scalar::from_rational(&BigRational::from_integer(v)))
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::rat;
    use num_traits::One;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_scalar("-zeta(3)").unwrap(), Scalar::constant(-Cyclotomic::zeta(3)));
        assert_eq!(
            parse_scalar("1/2*zeta(4)").unwrap(),
            Scalar::constant(Cyclotomic::from_rational(&rat(1, 2)) * Cyclotomic::zeta(4))
        );
        assert_eq!(parse_scalar("zeta(6)^6").unwrap(), Scalar::one());
        assert_eq!(parse_scalar("zeta(5)^(-1)").unwrap(), parse_scalar("zeta(5)^4").unwrap());
        assert_eq!(parse_scalar(" 3 / 4 ").unwrap(), Scalar::from_rational(&rat(3, 4)));
        let t = Scalar::parameter();
        assert_eq!(parse_scalar("(1+t)/(1-t)").unwrap(), (Scalar::one() + t.clone()) / (Scalar::one() - t));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "zeta(0)", "1/0", "2+", "x", "zeta(3", "1 2"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["-1-zeta(3)", "1/2*zeta(4)", "-3/7", "zeta(5)^3-2*zeta(5)", "(1+t)/(2-t)", "t^2+zeta(3)"] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(parse_scalar(&v.to_string()).unwrap(), v, "{s} -> {v}");
        }
    }
}
