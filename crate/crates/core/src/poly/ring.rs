use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;

use super::monomial::{Monomial, MonomialOrder, OrderKind};
use super::polynomial::Polynomial;

/// Variable names, grading weights and coefficient field of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub field: Field,
}

impl PolyRing {
    pub fn new(vars: &[&str], field: Field) -> Self {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let weights = vec![1; vars.len()];
        PolyRing { vars, weights, field }
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != self.vars.len() || weights.iter().any(|&w| w == 0) {
            return Err(Error::Precondition("weights must be positive, one per variable".into()));
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Weighted grevlex: the graded-mode default and the printing order.
    pub fn graded_order(&self) -> MonomialOrder {
        MonomialOrder::new(OrderKind::WeightedGrevlex, self.weights.clone())
    }

    pub fn local_order(&self) -> MonomialOrder {
        MonomialOrder::new(OrderKind::NegweightedGrevlex, self.weights.clone())
    }

    pub fn lex_order(&self) -> MonomialOrder {
        MonomialOrder::new(OrderKind::Lex, self.weights.clone())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), i, self.field)
    }

    pub fn constant(&self, v: i64) -> Polynomial {
        Polynomial::constant(self.nvars(), self.field.from_i64(v))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    /// Canonical text form: terms descending in weighted grevlex, e.g. `3/2*x^2*y - z + 1`.
    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.sorted_terms(&self.graded_order()).into_iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                write!(out, "{mag}").unwrap();
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                write!(out, "{mag}*{mono}").unwrap();
            }
        }
        out
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.vars.iter().zip(m.exps()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    /// Parses `+ - * / ^`, parentheses, integers and variable names.
    /// Division is allowed only by nonzero constants.
    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        let mut p = Parser { ring: self, src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: msg.into() }
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

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        self.pos = at;
                        return Err(self.err("division only by nonzero constants"));
                    }
                    let c = d.constant_term().unwrap().clone();
                    acc = acc.scale(&c.inv());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let c = self.ring.field.from_ratio(&v, &BigInt::from(1))?;
                Ok(Polynomial::constant(n, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.err(format!("unknown variable `{name}`")))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Shorthand used throughout the tests: parse or panic.
pub fn p(ring: &PolyRing, s: &str) -> Polynomial {
    ring.parse(s).unwrap_or_else(|e| panic!("cannot parse `{s}`: {e}"))
}
