use crate::poly::Polynomial;

use super::vector::{ModuleOrder, Term, Vect};

/// Certificate of a reduction: `unit * input = sum(quot[i] * basis[i]) + remainder`.
#[derive(Debug, Clone)]
pub(crate) struct Tracker {
    pub unit: Polynomial,
    pub quot: Vec<Polynomial>,
}

impl Tracker {
    pub fn new(nbasis: usize, one: Polynomial) -> Self {
        let nvars = one.nvars();
        Tracker { unit: one, quot: vec![Polynomial::zero(nvars); nbasis] }
    }
}

fn divides(g: &Term, t: &Term) -> bool {
    g.pos == t.pos && g.mon.divides(&t.mon)
}

fn first_reducer(basis: &[Vect], t: &Term) -> Option<usize> {
    basis.iter().position(|g| g.lead().is_some_and(|l| divides(l, t)))
}

/// Reduction for global orders. With `full`, every term of the remainder is
/// irreducible; otherwise only the leading term is.
pub(crate) fn reduce_global(
    v: Vect,
    basis: &[Vect],
    ord: &ModuleOrder,
    full: bool,
    mut track: Option<&mut Tracker>,
) -> Vect {
    let mut p = v;
    let mut done: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < p.terms.len() {
        let lt = &p.terms[start];
        match first_reducer(basis, lt) {
            Some(i) => {
                let g = basis[i].lead().unwrap();
                let c = lt.coef.div(&g.coef);
                let m = g.mon.quotient_of(&lt.mon);
                let mdeg = lt.deg - g.deg;
                if let Some(tr) = track.as_deref_mut() {
                    tr.quot[i].add_term(m.clone(), c.clone());
                }
                // Terms before `start` are already irreducible and larger than lt.
                let tail = Vect { terms: p.terms.split_off(start) };
                let reduced = tail.sub_mul(&c, &m, mdeg, &basis[i], ord);
                done.append(&mut p.terms);
                p = reduced;
                start = 0;
            }
            None if full => start += 1,
            None => break,
        }
    }
    done.append(&mut p.terms);
    Vect { terms: done }
}

/// Mora's normal form for local orders: reduce the leading term with the
/// element of least ecart, adding intermediate results to the reducer set
/// whenever that reducer's ecart is larger.
pub(crate) fn reduce_mora(v: Vect, basis: &[Vect], ord: &ModuleOrder, mut track: Option<&mut Tracker>) -> Vect {
    let mut h = v;
    let mut extra: Vec<(Vect, Option<Tracker>)> = Vec::new();
    while let Some(lt) = h.lead().cloned() {
        let mut best: Option<(i64, bool, usize)> = None;
        for (i, g) in basis.iter().enumerate() {
            if g.lead().is_some_and(|l| divides(l, &lt)) {
                let e = g.ecart();
                if best.is_none_or(|(be, _, _)| e < be) {
                    best = Some((e, false, i));
                }
            }
        }
        for (k, (g, _)) in extra.iter().enumerate() {
            if g.lead().is_some_and(|l| divides(l, &lt)) {
                let e = g.ecart();
                if best.is_none_or(|(be, _, _)| e < be) {
                    best = Some((e, true, k));
                }
            }
        }
        let Some((e, is_extra, idx)) = best else { break };
        if e > h.ecart() {
            extra.push((h.clone(), track.as_deref().cloned()));
        }
        let g = if is_extra { &extra[idx].0 } else { &basis[idx] };
        let gl = g.lead().unwrap();
        let c = lt.coef.div(&gl.coef);
        let m = gl.mon.quotient_of(&lt.mon);
        let mdeg = lt.deg - gl.deg;
        let next = h.sub_mul(&c, &m, mdeg, g, ord);
        if let Some(tr) = track.as_deref_mut() {
            if is_extra {
                let snap = extra[idx].1.as_ref().expect("tracked snapshot");
                tr.unit = &tr.unit - &snap.unit.mul_term(&c, &m);
                for (q, sq) in tr.quot.iter_mut().zip(&snap.quot) {
                    if !sq.is_zero() {
                        *q = &*q - &sq.mul_term(&c, &m);
                    }
                }
            } else {
                tr.quot[idx].add_term(m, c);
            }
        }
        h = next;
    }
    h
}

/// Dispatches on the order kind. Local orders only guarantee an irreducible leading term.
pub(crate) fn reduce(v: Vect, basis: &[Vect], ord: &ModuleOrder, full: bool, track: Option<&mut Tracker>) -> Vect {
    if ord.is_local() {
        reduce_mora(v, basis, ord, track)
    } else {
        reduce_global(v, basis, ord, full, track)
    }
}
