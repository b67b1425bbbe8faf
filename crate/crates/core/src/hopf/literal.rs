//! Element literals such as `x^(1/2)*y^(1/3) - 2*z^2` or `1 - x`.
//!
//! Generator symbols depend on the family: `x` (and `y`, `z`, `w`, `x1`,
//! `x2` where present) take rational exponents; coefficients use the scalar
//! grammar (`zeta(N)`, `t`, fractions).

use std::sync::Arc;

use num_traits::One;

use super::{Element, MonomialKey};
use crate::families::{Family, HopfInstance};
use crate::groups::{exp, Exp};
use crate::scalars::{Cyclotomic, Field, Scalar};
use crate::{HopfError, Result};

#[derive(Clone)]
enum Value {
    Scalar(Scalar),
    Elem(Element),
}

struct Parser<'a> {
    inst: &'a Arc<HopfInstance>,
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

pub fn parse_element(inst: &Arc<HopfInstance>, src: &str) -> Result<Element> {
    let mut p = Parser { inst, chars: src.chars().collect(), pos: 0, src };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(p.to_elem(v))
}

/// A single monomial with coefficient 1, e.g. a weight `x^(1/2)`.
pub fn parse_key(inst: &Arc<HopfInstance>, src: &str) -> Result<MonomialKey> {
    let e = parse_element(inst, src)?;
    match e.terms().iter().next() {
        Some((k, c)) if e.terms().len() == 1 && c.is_one() => Ok(k.clone()),
        _ => Err(HopfError::Parse(format!("{src:?} is not a single monomial"))),
    }
}

impl Parser<'_> {
    fn error(&self, what: &str) -> HopfError {
        HopfError::Parse(format!("{what} at offset {} in element {:?}", self.pos, self.src))
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

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn to_elem(&self, v: Value) -> Element {
        match v {
            Value::Scalar(s) => Element::scalar(self.inst, s),
            Value::Elem(e) => e,
        }
    }

    fn combine(&self, a: Value, b: Value, op: char) -> Result<Value> {
        Ok(match (a, b, op) {
            (Value::Scalar(x), Value::Scalar(y), '+') => Value::Scalar(x.add_ref(&y)),
            (Value::Scalar(x), Value::Scalar(y), '-') => Value::Scalar(x.sub_ref(&y)),
            (Value::Scalar(x), Value::Scalar(y), '*') => Value::Scalar(x.mul_ref(&y)),
            (a, Value::Scalar(y), '/') => {
                let inv = y.inv().ok_or_else(|| self.error("division by zero"))?;
                match a {
                    Value::Scalar(x) => Value::Scalar(x.mul_ref(&inv)),
                    Value::Elem(e) => Value::Elem(e.scale(&inv)),
                }
            }
            (_, _, '/') => return Err(self.error("can only divide by scalars")),
            (Value::Scalar(x), Value::Elem(e), '*') | (Value::Elem(e), Value::Scalar(x), '*') => {
                Value::Elem(e.scale(&x))
            }
            (a, b, op) => {
                let (a, b) = (self.to_elem(a), self.to_elem(b));
                Value::Elem(match op {
                    '+' => &a + &b,
                    '-' => &a - &b,
                    _ => &a * &b,
                })
            }
        })
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let op = match self.peek() {
                Some(c @ ('+' | '-')) => c,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.combine(acc, rhs, op)?;
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(c @ ('*' | '/')) => c,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            acc = self.combine(acc, rhs, op)?;
        }
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat('-') {
            let v = self.unary()?;
            return self.combine(Value::Scalar(Scalar::one().neg_ref()), v, '*');
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("integer too large"))
    }

    /// `^` exponent: `k`, `-k`, `(k)`, `(-k)` or `(a/b)`.
    fn exponent(&mut self) -> Result<Exp> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let n = self.integer()?;
        let d = if paren && self.eat('/') { self.integer()? } else { 1 };
        if paren {
            self.expect(')')?;
        }
        if d == 0 {
            return Err(self.error("zero denominator"));
        }
        Ok(exp(if neg { -n } else { n }, d))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn generator(&self, name: &str, e: Exp) -> Result<Element> {
        let zero = Exp::from_integer(0);
        let nat = |e: Exp| -> Result<u32> {
            if e.is_integer() && e >= zero {
                Ok(e.to_integer() as u32)
            } else {
                Err(self.error(&format!("{name} needs a nonnegative integer exponent")))
            }
        };
        let key = match (self.inst.family(), name) {
            (Family::GroupQ(_), "x") => MonomialKey::Group(e),
            (Family::GroupQ2(_), "x1") => MonomialKey::Pair(e, zero),
            (Family::GroupQ2(_), "x2") => MonomialKey::Pair(zero, e),
            (Family::Semidirect(_), "x") => MonomialKey::Pair(e, zero),
            (Family::Semidirect(_), "w") => MonomialKey::Pair(zero, e),
            (Family::Enveloping(_), "x") => MonomialKey::Pbw(nat(e)?, 0),
            (Family::Enveloping(_), "y") => MonomialKey::Pbw(0, nat(e)?),
            (Family::TypeA { .. } | Family::TypeC { .. }, "x") => MonomialKey::Ore(e, 0),
            (Family::TypeA { .. } | Family::TypeC { .. }, "z") => MonomialKey::Ore(zero, nat(e)?),
            (Family::TypeB { .. }, "x") => MonomialKey::Smash(e, zero),
            (Family::TypeB { .. }, "y") => MonomialKey::Smash(zero, e),
            _ => return Err(self.error(&format!("unknown symbol {name:?} for family {}", self.inst.tag()))),
        };
        Element::monomial(self.inst, key)
    }

    fn power(&mut self) -> Result<Value> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                if self.eat('^') {
                    let e = self.exponent()?;
                    return self.raise(v, e);
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Value::Scalar(Scalar::from_i64(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                let v = match name.as_str() {
                    "t" => Value::Scalar(Scalar::parameter()),
                    "zeta" => {
                        self.expect('(')?;
                        let n = self.integer()?;
                        self.expect(')')?;
                        if n <= 0 {
                            return Err(self.error("conductor must be positive"));
                        }
                        Value::Scalar(Scalar::constant(Cyclotomic::zeta(n as u64)))
                    }
                    _ => {
                        let e = if self.eat('^') { self.exponent()? } else { Exp::from_integer(1) };
                        return Ok(Value::Elem(self.generator(&name, e)?));
                    }
                };
                if self.eat('^') {
                    let e = self.exponent()?;
                    return self.raise(v, e);
                }
                Ok(v)
            }
            _ => Err(self.error("unexpected token")),
        }
    }

    fn raise(&self, v: Value, e: Exp) -> Result<Value> {
        if !e.is_integer() {
            return Err(self.error("fractional powers apply only to generators"));
        }
        let k = e.to_integer();
        match v {
            Value::Scalar(s) => s.pow_i64(k).map(Value::Scalar).ok_or_else(|| self.error("zero to a negative power")),
            Value::Elem(el) if k >= 0 => Ok(Value::Elem(el.pow(k as u32))),
            Value::Elem(_) => Err(self.error("negative power of an element")),
        }
    }
}
