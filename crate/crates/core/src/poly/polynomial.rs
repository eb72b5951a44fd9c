use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

use super::monomial::{Monomial, MonomialOrder};

/// Sparse polynomial with exact coefficients. No zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElem>,
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic; errors when the operands live in different variable counts.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if a.nvars != b.nvars {
        return Err(Error::VariableMismatch { left: a.nvars, right: b.nvars });
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: FieldElem) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn one(nvars: usize, field: Field) -> Self {
        Self::constant(nvars, field.one())
    }

    pub fn term(c: FieldElem, m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize, field: Field) -> Self {
        Self::term(field.one(), Monomial::var(nvars, i, 1))
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, FieldElem)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in storage order (ascending lex on exponents).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&FieldElem> {
        self.terms.get(m)
    }

    /// The coefficient field, if the polynomial is nonzero.
    pub fn field(&self) -> Option<Field> {
        self.terms.values().next().map(FieldElem::field)
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn constant_term(&self) -> Option<&FieldElem> {
        self.terms.get(&Monomial::one(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// A unit of the local ring at the origin (nonzero constant term).
    pub fn is_local_unit(&self) -> bool {
        self.constant_term().is_some()
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, c: &FieldElem, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let field = self.field().unwrap_or(Field::Rational);
        let mut r = Polynomial::one(self.nvars, field);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[i] -= 1;
            out.add_term(dm, c.mul(&c.field().from_i64(e as i64)));
        }
        out
    }

    /// All formal partial derivatives, in variable order.
    pub fn partials(&self) -> Vec<Polynomial> {
        (0..self.nvars).map(|i| self.derivative(i)).collect()
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &FieldElem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Largest weighted degree of a term.
    pub fn max_degree(&self, weights: &[u32]) -> Option<i64> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).max()
    }

    pub fn min_degree(&self, weights: &[u32]) -> Option<i64> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).min()
    }

    /// `Some(d)` when every term has weighted degree `d`; `None` for the zero polynomial
    /// or inhomogeneous input.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Option<i64> {
        let d = self.max_degree(weights)?;
        (self.min_degree(weights) == Some(d)).then_some(d)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let order = MonomialOrder::grevlex(self.nvars);
        let (lm, lc) = d.leading_term(&order).map(|(m, c)| (m.clone(), c.inv()))?;
        let mut rem = self.clone();
        let mut q = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let tm = lm.quotient_of(&m);
            let tc = c.mul(&lc);
            rem = &rem - &d.mul_term(&tc, &tm);
            q.add_term(tm, tc);
        }
        Some(q)
    }

    /// Evaluates at a point of the coefficient field.
    pub fn eval(&self, point: &[FieldElem]) -> Option<FieldElem> {
        let mut acc: Option<FieldElem> = None;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = Some(match acc {
                Some(a) => a.add(&t),
                None => t,
            });
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg());
        }
        r
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        r
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, o: Polynomial) -> Polynomial {
                (&self).$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
