//! Gröbner bases for global orders (Buchberger) and standard bases for local
//! orders (Mora), for submodules of free modules `P^r`, with syzygies and lifts.
//!
//! Computations over `R = P/(f)` are done inside `P` by adjoining `f * e_i`
//! for every ambient basis vector and discarding those coordinates afterwards.

mod buchberger;
mod reduce;
mod vector;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

use reduce::Tracker;
pub(crate) use vector::{ModuleOrder, Vect};

/// A column vector of a free module, one polynomial per ambient basis vector.
pub type FreeVector = Vec<Polynomial>;

/// A standard basis of a submodule of `P^rank`, optionally modulo `f * P^rank`.
#[derive(Debug, Clone)]
pub struct SubmoduleBasis {
    ring: PolyRing,
    rank: usize,
    order: MonomialOrder,
    ring_modulus: Option<Polynomial>,
    original: Vec<FreeVector>,
    elems: Vec<Vect>,
    generators: Vec<FreeVector>,
}

/// `unit * v = sum(quotients[i] * generators[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: FreeVector,
    pub unit: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// `unit * target = sum(coefficients[j] * original_generator[j])` (modulo `f` when set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub unit: Polynomial,
    pub coefficients: Vec<Polynomial>,
}

fn with_modulus(ring: &PolyRing, gens: &[FreeVector], rank: usize, modulus: Option<&Polynomial>) -> Vec<FreeVector> {
    let mut all = gens.to_vec();
    if let Some(f) = modulus {
        for i in 0..rank {
            let mut e = vec![ring.zero(); rank];
            e[i] = f.clone();
            all.push(e);
        }
    }
    all
}

fn check_shapes(ring: &PolyRing, gens: &[FreeVector], rank: usize) {
    for g in gens {
        assert_eq!(g.len(), rank, "generator has wrong rank");
        for p in g {
            assert_eq!(p.nvars(), ring.nvars(), "generator over a different ring");
        }
    }
}

/// Computes a standard basis of the submodule spanned by `gens` in `P^rank`
/// (Buchberger for global orders, Mora for local ones).
pub fn standard_basis(
    ring: &PolyRing,
    gens: &[FreeVector],
    rank: usize,
    order: &MonomialOrder,
    ring_modulus: Option<&Polynomial>,
) -> SubmoduleBasis {
    check_shapes(ring, gens, rank);
    let ord = ModuleOrder::new(order.clone());
    let all = with_modulus(ring, gens, rank, ring_modulus);
    let vects = all.iter().map(|g| Vect::from_free(g, &ord)).collect();
    let elems = buchberger::complete(vects, &ord);
    let generators = elems.iter().map(|v| v.to_free(rank, ring.nvars())).collect();
    SubmoduleBasis {
        ring: ring.clone(),
        rank,
        order: order.clone(),
        ring_modulus: ring_modulus.cloned(),
        original: gens.to_vec(),
        elems,
        generators,
    }
}

impl SubmoduleBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ring_modulus(&self) -> Option<&Polynomial> {
        self.ring_modulus.as_ref()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// The standard basis elements (monic, minimal).
    pub fn generators(&self) -> &[FreeVector] {
        &self.generators
    }

    /// The generators the basis was computed from (without the modulus vectors).
    pub fn original_generators(&self) -> &[FreeVector] {
        &self.original
    }

    pub fn is_standard(&self) -> bool {
        true
    }

    /// Leading module monomials `(position, monomial)`.
    pub fn leading_monomials(&self) -> Vec<(usize, Monomial)> {
        self.elems.iter().filter_map(|v| v.lead().map(|t| (t.pos, t.mon.clone()))).collect()
    }

    /// Re-checks the S-pair criterion from scratch.
    pub fn satisfies_criterion(&self) -> bool {
        buchberger::is_standard(&self.elems, &ModuleOrder::new(self.order.clone()))
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> NormalForm {
        normal_form(v, self)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        let ord = ModuleOrder::new(self.order.clone());
        reduce::reduce(Vect::from_free(v, &ord), &self.elems, &ord, false, None).is_zero()
    }

    /// Debug dump in canonical text form, one generator per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            let parts: Vec<_> = g.iter().map(|p| self.ring.format(p)).collect();
            writeln!(s, "[{}]", parts.join(", ")).unwrap();
        }
        s
    }
}

/// Division with remainder by a standard basis. For local orders only the
/// leading term of the remainder is guaranteed irreducible, and `unit` has a
/// nonzero constant term; for global orders `unit = 1` and the remainder is
/// fully reduced.
pub fn normal_form(v: &[Polynomial], basis: &SubmoduleBasis) -> NormalForm {
    assert_eq!(v.len(), basis.rank, "vector has wrong rank");
    let ord = ModuleOrder::new(basis.order.clone());
    let mut tr = Tracker::new(basis.elems.len(), basis.ring.one());
    let r = reduce::reduce(Vect::from_free(v, &ord), &basis.elems, &ord, true, Some(&mut tr));
    NormalForm { remainder: r.to_free(basis.rank, basis.ring.nvars()), unit: tr.unit, quotients: tr.quot }
}

/// Augmented vectors `(g_j ; e_j)` whose standard basis encodes syzygies and lifts.
fn augmented_basis(ring: &PolyRing, gens: &[FreeVector], ord: &ModuleOrder) -> Vec<Vect> {
    let k = gens.len();
    let vects = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut v = g.clone();
            v.extend((0..k).map(|i| if i == j { ring.one() } else { ring.zero() }));
            Vect::from_free(&v, ord)
        })
        .collect();
    buchberger::complete(vects, ord)
}

/// Generators of the kernel of `P^k -> P^rank` (or `R^k -> R^rank` when
/// `ring_modulus` is set) sending `e_j` to `m[j]`.
pub fn syzygies(
    ring: &PolyRing,
    m: &[FreeVector],
    rank: usize,
    order: &MonomialOrder,
    ring_modulus: Option<&Polynomial>,
) -> Vec<FreeVector> {
    check_shapes(ring, m, rank);
    let k = m.len();
    if k == 0 {
        return Vec::new();
    }
    let ord = ModuleOrder::new(order.clone());
    // Over R the cofactors only matter modulo f: `(f e_i ; 0)` and `(0 ; f e_j)`
    // keep both blocks reduced, which stops coefficient growth under lex.
    let mut vects: Vec<Vect> = m
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut v = g.clone();
            v.extend((0..k).map(|i| if i == j { ring.one() } else { ring.zero() }));
            Vect::from_free(&v, &ord)
        })
        .collect();
    if let Some(f) = ring_modulus {
        for i in 0..rank + k {
            let mut v = vec![ring.zero(); rank + k];
            v[i] = f.clone();
            vects.push(Vect::from_free(&v, &ord));
        }
    }
    let mut out: Vec<FreeVector> = Vec::new();
    for v in buchberger::complete(vects, &ord) {
        if v.lead().is_some_and(|t| t.pos < rank) {
            continue;
        }
        let full = v.to_free(rank + k, ring.nvars());
        let s: FreeVector = full[rank..].to_vec();
        if s.iter().all(Polynomial::is_zero) || out.contains(&s) {
            continue;
        }
        out.push(s);
    }
    out
}

/// Expresses each target in the original generators of `basis`.
pub fn lift_many(targets: &[FreeVector], basis: &SubmoduleBasis) -> Vec<Result<Lift>> {
    let ring = &basis.ring;
    let rank = basis.rank;
    let k = basis.original.len();
    let ord = ModuleOrder::new(basis.order.clone());
    let all = with_modulus(ring, &basis.original, rank, basis.ring_modulus.as_ref());
    let total = all.len();
    let sb = augmented_basis(ring, &all, &ord);
    targets
        .iter()
        .map(|t| {
            assert_eq!(t.len(), rank, "target has wrong rank");
            let mut v = t.clone();
            v.extend((0..total).map(|_| ring.zero()));
            let mut tr = Tracker::new(sb.len(), ring.one());
            let r = reduce::reduce(Vect::from_free(&v, &ord), &sb, &ord, false, Some(&mut tr));
            if r.lead().is_some_and(|l| l.pos < rank) {
                return Err(Error::NotInSubmodule);
            }
            let full = r.to_free(rank + total, ring.nvars());
            let coefficients = full[rank..rank + k].iter().map(|p| -p).collect();
            Ok(Lift { unit: tr.unit, coefficients })
        })
        .collect()
}

/// Expresses `target` in the original generators of `basis`, or fails with
/// [`Error::NotInSubmodule`].
pub fn lift(target: &[Polynomial], basis: &SubmoduleBasis) -> Result<Lift> {
    lift_many(&[target.to_vec()], basis).pop().unwrap()
}
