use crate::poly::Monomial;

use super::reduce::{reduce, reduce_global};
use super::vector::{ModuleOrder, Vect};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    lcm_deg: i64,
    sugar: i64,
    coprime: bool,
}

struct Completion<'a> {
    ord: &'a ModuleOrder,
    basis: Vec<Vect>,
    sugar: Vec<i64>,
    pairs: Vec<Pair>,
}

impl Completion<'_> {
    fn make_pair(&self, i: usize, j: usize) -> Option<Pair> {
        let (li, lj) = (self.basis[i].lead()?, self.basis[j].lead()?);
        if li.pos != lj.pos {
            return None;
        }
        let lcm = li.mon.lcm(&lj.mon);
        let lcm_deg = self.ord.mono.degree(&lcm);
        let sugar = (self.sugar[i] - li.deg).max(self.sugar[j] - lj.deg) + lcm_deg;
        // The product criterion is only used for ideal-like vectors and global orders.
        let coprime = !self.ord.is_local()
            && self.basis[i].single_position()
            && self.basis[j].single_position()
            && li.mon.gcd_is_one(&lj.mon);
        Some(Pair { i, j, pos: li.pos, lcm, lcm_deg, sugar, coprime })
    }

    /// Gebauer-Möller update after appending basis element `k`.
    fn update(&mut self, k: usize) {
        let lk = self.basis[k].lead().unwrap().clone();
        let cands: Vec<Pair> = (0..k).filter_map(|i| self.make_pair(i, k)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, c) in cands.iter().enumerate() {
            let dominated = cands[idx + 1..].iter().any(|d| d.lcm.divides(&c.lcm))
                || kept.iter().any(|d| d.lcm.divides(&c.lcm));
            if c.coprime || !dominated {
                kept.push(c.clone());
            }
        }
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.pos != lk.pos || !lk.mon.divides(&p.lcm) {
                return true;
            }
            let lik = basis[p.i].lead().unwrap().mon.lcm(&lk.mon);
            let ljk = basis[p.j].lead().unwrap().mon.lcm(&lk.mon);
            lik == p.lcm || ljk == p.lcm
        });
        self.pairs.extend(kept.into_iter().filter(|p| !p.coprime));
    }

    fn push(&mut self, mut v: Vect, sugar: i64) {
        v.make_monic();
        self.basis.push(v);
        self.sugar.push(sugar);
        self.update(self.basis.len() - 1);
    }

    fn select(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.sugar, p.lcm_deg, p.j, p.i))
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_vector(&self, p: &Pair) -> Vect {
        let (gi, gj) = (&self.basis[p.i], &self.basis[p.j]);
        let (li, lj) = (gi.lead().unwrap(), gj.lead().unwrap());
        let mi = li.mon.quotient_of(&p.lcm);
        let mj = lj.mon.quotient_of(&p.lcm);
        let one = li.coef.field().one();
        let zero = Vect::default();
        let a = zero.sub_mul(&one.neg(), &mi, p.lcm_deg - li.deg, gi, self.ord);
        a.sub_mul(&one, &mj, p.lcm_deg - lj.deg, gj, self.ord)
    }
}

/// Completes `gens` to a standard basis (Gröbner basis for global orders).
/// The result is minimal and, for global orders, tail-reduced.
pub(crate) fn complete(gens: Vec<Vect>, ord: &ModuleOrder) -> Vec<Vect> {
    let mut c = Completion { ord, basis: Vec::new(), sugar: Vec::new(), pairs: Vec::new() };
    for g in gens.into_iter().filter(|g| !g.is_zero()) {
        let s = g.max_deg();
        c.push(g, s);
    }
    while let Some(pair) = c.select() {
        let s = c.s_vector(&pair);
        let h = reduce(s, &c.basis, ord, false, None);
        if !h.is_zero() {
            c.push(h, pair.sugar);
        }
    }
    minimize(c.basis, ord)
}

fn minimize(basis: Vec<Vect>, ord: &ModuleOrder) -> Vec<Vect> {
    let leads: Vec<_> = basis.iter().map(|g| g.lead().unwrap().clone()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&k| {
            !(0..basis.len()).any(|j| {
                j != k
                    && leads[j].pos == leads[k].pos
                    && leads[j].mon.divides(&leads[k].mon)
                    && (leads[j].mon != leads[k].mon || j < k)
            })
        })
        .collect();
    let kept: Vec<Vect> = keep.into_iter().map(|k| basis[k].clone()).collect();
    if ord.is_local() {
        return kept;
    }
    (0..kept.len())
        .map(|k| {
            let others: Vec<Vect> = kept
                .iter()
                .enumerate()
                .map(|(j, g)| if j == k { Vect::default() } else { g.clone() })
                .collect();
            let mut r = reduce_global(kept[k].clone(), &others, ord, true, None);
            r.make_monic();
            r
        })
        .collect()
}

/// Checks the Buchberger/Mora criterion: every S-vector reduces to zero.
pub(crate) fn is_standard(basis: &[Vect], ord: &ModuleOrder) -> bool {
    let c = Completion {
        ord,
        basis: basis.to_vec(),
        sugar: basis.iter().map(Vect::max_deg).collect(),
        pairs: Vec::new(),
    };
    for j in 0..basis.len() {
        for i in 0..j {
            if let Some(p) = c.make_pair(i, j) {
                if !reduce(c.s_vector(&p), basis, ord, false, None).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
