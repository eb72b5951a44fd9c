//! Internal sparse representation of free-module vectors, kept sorted
//! descending in a position-over-term order.

use std::cmp::Ordering;

use crate::field::FieldElem;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Position-over-term: `e_0 > e_1 > ...`, then the monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModuleOrder {
    pub mono: MonomialOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: usize,
    pub deg: i64,
    pub mon: Monomial,
    pub coef: FieldElem,
}

impl ModuleOrder {
    pub fn new(mono: MonomialOrder) -> Self {
        ModuleOrder { mono }
    }

    pub fn is_local(&self) -> bool {
        self.mono.is_local()
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        b.pos
            .cmp(&a.pos)
            .then_with(|| self.mono.compare_with_degrees(&a.mon, a.deg, &b.mon, b.deg))
    }

    pub fn term(&self, pos: usize, mon: Monomial, coef: FieldElem) -> Term {
        Term { pos, deg: self.mono.degree(&mon), mon, coef }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Vect {
    pub terms: Vec<Term>,
}

impl Vect {
    pub fn from_free(v: &[Polynomial], ord: &ModuleOrder) -> Vect {
        let mut terms: Vec<Term> = v
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| p.terms().map(move |(m, c)| (pos, m.clone(), c.clone())))
            .map(|(pos, m, c)| ord.term(pos, m, c))
            .collect();
        terms.sort_by(|a, b| ord.cmp(b, a));
        Vect { terms }
    }

    pub fn to_free(&self, rank: usize, nvars: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(nvars); rank];
        for t in &self.terms {
            out[t.pos].add_term(t.mon.clone(), t.coef.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn max_deg(&self) -> i64 {
        self.terms.iter().map(|t| t.deg).max().unwrap_or(0)
    }

    pub fn ecart(&self) -> i64 {
        match self.lead() {
            Some(l) => self.max_deg() - l.deg,
            None => 0,
        }
    }

    /// True when every term sits in one position.
    pub fn single_position(&self) -> bool {
        match self.lead() {
            Some(l) => self.terms.iter().all(|t| t.pos == l.pos),
            None => true,
        }
    }

    /// Scales so the leading coefficient is one; returns the factor used.
    pub fn make_monic(&mut self) -> Option<FieldElem> {
        let inv = self.lead()?.coef.inv();
        if !inv.is_one() {
            for t in &mut self.terms {
                t.coef = t.coef.mul(&inv);
            }
        }
        Some(inv)
    }

    /// `self - c * m * other`, merged in order.
    pub fn sub_mul(&self, c: &FieldElem, m: &Monomial, mdeg: i64, other: &Vect, ord: &ModuleOrder) -> Vect {
        let neg = c.neg();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|t| Term { pos: t.pos, deg: t.deg + mdeg, mon: t.mon.mul(m), coef: t.coef.mul(&neg) })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match ord.cmp(x, y) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = x.coef.add(&y.coef);
                        let x = a.next().unwrap();
                        b.next();
                        if !s.is_zero() {
                            out.push(Term { coef: s, ..x.clone() });
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (None, None) => break,
            }
        }
        Vect { terms: out }
    }

    #[cfg(test)]
    pub fn add(&self, other: &Vect, ord: &ModuleOrder) -> Vect {
        let nvars = self.terms.first().or(other.terms.first()).map_or(0, |t| t.mon.nvars());
        let field_one = match self.terms.first().or(other.terms.first()) {
            Some(t) => t.coef.field().from_i64(-1),
            None => return Vect::default(),
        };
        self.sub_mul(&field_one, &Monomial::one(nvars), 0, other, ord)
    }
}
