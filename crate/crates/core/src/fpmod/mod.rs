//! Finitely presented modules over `P` or `R = P/(f)`: kernels, homology,
//! minimal presentations, lengths and Hilbert series.

mod hilbert;

use serde::{Deserialize, Serialize};

use crate::engine::{Hypersurface, LengthMode};
use crate::error::{Error, Result};
use crate::gbasis::{standard_basis, syzygies, FreeVector};
use crate::matrix::Matrix;
use crate::poly::{Monomial, Polynomial};

pub use hilbert::{hilbert_series, monomial_ideal_numerator, HilbertSeries};

/// Which ring a module lives over. Over `R` the relations `f * e_i` are implicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseRing {
    P,
    R,
}

/// `coker(presentation)`: `rank` generators, one relation per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPModule {
    pub ring: BaseRing,
    pub rank: usize,
    pub presentation: Matrix,
    /// Generator degrees, when graded.
    pub degrees: Option<Vec<i64>>,
}

impl FPModule {
    pub fn new(ring: BaseRing, presentation: Matrix, degrees: Option<Vec<i64>>) -> Self {
        if let Some(d) = &degrees {
            assert_eq!(d.len(), presentation.rows(), "one degree per generator");
        }
        FPModule { ring, rank: presentation.rows(), presentation, degrees }
    }

    pub fn free(ring: BaseRing, rank: usize, nvars: usize) -> Self {
        Self::new(ring, Matrix::zeros(rank, 0, nvars), Some(vec![0; rank]))
    }

    pub fn zero(ring: BaseRing, nvars: usize) -> Self {
        Self::free(ring, 0, nvars)
    }

    pub fn relations(&self) -> Vec<FreeVector> {
        self.presentation.columns()
    }

    pub fn nvars(&self) -> usize {
        self.presentation.nvars()
    }

    pub fn direct_sum(&self, o: &FPModule) -> FPModule {
        assert_eq!(self.ring, o.ring, "direct sum over different rings");
        let pres = Matrix::block_diag(self.nvars(), &[self.presentation.clone(), o.presentation.clone()]);
        let degrees = match (&self.degrees, &o.degrees) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Self::new(self.ring, pres, degrees)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LengthReport {
    pub is_finite: bool,
    pub length: Option<usize>,
    /// `(position, monomial)` pairs spanning the module as a vector space.
    pub standard_monomials: Option<Vec<(usize, Monomial)>>,
}

pub(crate) fn modulus(hs: &Hypersurface, ring: BaseRing) -> Option<&Polynomial> {
    match ring {
        BaseRing::P => None,
        BaseRing::R => Some(hs.f()),
    }
}

/// `P/I` or `R/I` as a cyclic module.
pub fn module_from_ideal(hs: &Hypersurface, gens: &[Polynomial], ring: BaseRing) -> FPModule {
    let row: Vec<Polynomial> = gens.to_vec();
    let pres = if row.is_empty() {
        Matrix::zeros(1, 0, hs.nvars())
    } else {
        Matrix::from_rows(hs.nvars(), vec![row])
    };
    FPModule::new(ring, pres, Some(vec![0]))
}

/// Weighted degree of a homogeneous vector whose positions carry `pos_deg`.
pub(crate) fn vector_degree(v: &[Polynomial], pos_deg: &[i64], weights: &[u32]) -> Option<i64> {
    let mut deg = None;
    for (p, d) in v.iter().zip(pos_deg) {
        if p.is_zero() {
            continue;
        }
        let e = p.homogeneous_degree(weights)? + d;
        match deg {
            None => deg = Some(e),
            Some(x) if x != e => return None,
            _ => {}
        }
    }
    deg
}

fn propagate_degrees(hs: &Hypersurface, pos_deg: Option<&Vec<i64>>, vecs: &[FreeVector]) -> Option<Vec<i64>> {
    let pos_deg = pos_deg?;
    vecs.iter().map(|v| vector_degree(v, pos_deg, &hs.ctx.ring.weights)).collect()
}

fn reduce_entries(hs: &Hypersurface, ring: BaseRing, m: &Matrix) -> Matrix {
    let Some(f) = modulus(hs, ring) else { return m.clone() };
    let r = &hs.ctx.ring;
    let sb = standard_basis(r, &[vec![f.clone()]], 1, &hs.global_order(), None);
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                out.set(i, j, sb.normal_form(&[m.get(i, j).clone()]).remainder.pop().unwrap());
            }
        }
    }
    out
}

fn drop_zero_columns(m: &Matrix) -> Matrix {
    let keep: Vec<usize> = (0..m.cols()).filter(|&j| m.column(j).iter().any(|e| !e.is_zero())).collect();
    m.select_columns(&keep)
}

/// Eliminates row `i` and column `j` using the unit `m[i][j]`:
/// every other column `k` becomes `u * col_k - m[i][k] * col_j` (or the
/// same divided by `u` when `u` is a constant).
fn pivot(m: &Matrix, i: usize, j: usize) -> Matrix {
    let u = m.get(i, j);
    let rows: Vec<usize> = (0..m.rows()).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&k| k != j).collect();
    let mut out = Matrix::zeros(rows.len(), cols.len(), m.nvars());
    let inv = if u.is_constant() { Some(u.constant_term().unwrap().inv()) } else { None };
    for (a, &r) in rows.iter().enumerate() {
        for (b, &k) in cols.iter().enumerate() {
            let e = match &inv {
                Some(c) => m.get(r, k) - &(m.get(i, k) * m.get(r, j)).scale(c),
                None => &(u * m.get(r, k)) - &(m.get(i, k) * m.get(r, j)),
            };
            out.set(a, b, e);
        }
    }
    out
}

/// Prefers constant pivots, which keep the module unchanged globally.
fn find_pivot(m: &Matrix) -> Option<(usize, usize)> {
    let all = (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j)));
    all.clone()
        .find(|&(i, j)| m.get(i, j).is_constant() && !m.get(i, j).is_zero())
        .or_else(|| m.find_local_unit())
}

/// Removes unit entries and redundant relations. Over `R`, entries are
/// reduced modulo `f`.
pub fn minimal_presentation(hs: &Hypersurface, m: &FPModule) -> FPModule {
    let mut pres = drop_zero_columns(&reduce_entries(hs, m.ring, &m.presentation));
    let mut degrees = m.degrees.clone();
    while let Some((i, j)) = find_pivot(&pres) {
        pres = drop_zero_columns(&reduce_entries(hs, m.ring, &pivot(&pres, i, j)));
        if let Some(d) = &mut degrees {
            d.remove(i);
        }
    }
    let rank = pres.rows();
    if pres.cols() > 1 {
        let r = &hs.ctx.ring;
        let syz = syzygies(r, &pres.columns(), rank, &hs.global_order(), modulus(hs, m.ring));
        let mut s = Matrix::from_columns(pres.cols(), r.nvars(), &syz);
        let mut keep: Vec<usize> = (0..pres.cols()).collect();
        while let Some((j, k)) = find_pivot(&s) {
            keep.remove(j);
            s = pivot(&s, j, k);
        }
        pres = pres.select_columns(&keep);
    }
    FPModule::new(m.ring, pres, degrees)
}

/// Generators, in the source free module, of the preimage of the target relations.
pub fn kernel_generators(hs: &Hypersurface, phi: &Matrix, target: &FPModule) -> Vec<FreeVector> {
    let s = phi.cols();
    let nv = hs.nvars();
    if target.rank == 0 {
        return Matrix::identity(s, nv, hs.ctx.ring.field).columns();
    }
    let mut cols = phi.columns();
    cols.extend(target.relations());
    let mut out: Vec<FreeVector> = Vec::new();
    for v in syzygies(&hs.ctx.ring, &cols, target.rank, &hs.global_order(), modulus(hs, target.ring)) {
        let g = v[..s].to_vec();
        if g.iter().any(|e| !e.is_zero()) && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// `(span(gens) + span(denominators)) / span(denominators)` inside the free
/// module of `ambient`, minimally presented.
fn subquotient(hs: &Hypersurface, gens: Vec<FreeVector>, denominators: Vec<FreeVector>, ambient: &FPModule) -> FPModule {
    let nv = hs.nvars();
    let m = gens.len();
    if m == 0 {
        return FPModule::zero(ambient.ring, nv);
    }
    let degrees = propagate_degrees(hs, ambient.degrees.as_ref(), &gens);
    let mut cols = gens;
    cols.extend(denominators);
    let mut rel: Vec<FreeVector> = Vec::new();
    if ambient.rank > 0 {
        for v in syzygies(&hs.ctx.ring, &cols, ambient.rank, &hs.global_order(), modulus(hs, ambient.ring)) {
            let r = v[..m].to_vec();
            if r.iter().any(|e| !e.is_zero()) && !rel.contains(&r) {
                rel.push(r);
            }
        }
    }
    let raw = FPModule::new(ambient.ring, Matrix::from_columns(m, nv, &rel), degrees);
    minimal_presentation(hs, &raw)
}

/// True when every column of `m` lies in the relations of `target`.
fn maps_into_relations(hs: &Hypersurface, m: &Matrix, target: &FPModule) -> bool {
    if m.cols() == 0 || target.rank == 0 {
        return true;
    }
    let r = &hs.ctx.ring;
    let sb = standard_basis(r, &target.relations(), target.rank, &hs.global_order(), modulus(hs, target.ring));
    m.columns().iter().all(|c| sb.contains(c))
}

fn check_map(hs: &Hypersurface, phi: &Matrix, source: &FPModule, target: &FPModule) -> Result<()> {
    if phi.rows() != target.rank || phi.cols() != source.rank {
        return Err(Error::IllFormedMap(format!(
            "matrix is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            target.rank,
            source.rank
        )));
    }
    if source.ring != target.ring {
        return Err(Error::IllFormedMap("source and target live over different rings".into()));
    }
    if !maps_into_relations(hs, &phi.mul(&source.presentation), target) {
        return Err(Error::IllFormedMap("a relation of the source does not map to zero".into()));
    }
    Ok(())
}

/// The kernel of `phi: source -> target` as a module in its own right.
pub fn kernel(hs: &Hypersurface, phi: &Matrix, source: &FPModule, target: &FPModule) -> Result<FPModule> {
    check_map(hs, phi, source, target)?;
    let gens = kernel_generators(hs, phi, target);
    Ok(subquotient(hs, gens, source.relations(), source))
}

/// `ker(outgoing) / im(incoming)` at `middle`, where `outgoing: middle -> target`.
pub fn subquotient_homology(
    hs: &Hypersurface,
    incoming: &Matrix,
    outgoing: &Matrix,
    middle: &FPModule,
    target: &FPModule,
) -> Result<FPModule> {
    if incoming.rows() != middle.rank {
        return Err(Error::IllFormedMap(format!(
            "incoming map has {} rows, middle has rank {}",
            incoming.rows(),
            middle.rank
        )));
    }
    check_map(hs, outgoing, middle, target)?;
    if !maps_into_relations(hs, &outgoing.mul(incoming), target) {
        return Err(Error::NotAComplex);
    }
    let gens = kernel_generators(hs, outgoing, target);
    let mut den = incoming.columns();
    den.extend(middle.relations());
    Ok(subquotient(hs, gens, den, middle))
}

/// Length via standard monomials of the relation module (plus `f * e_i` over `R`).
pub fn length(hs: &Hypersurface, m: &FPModule, mode: LengthMode) -> LengthReport {
    let r = &hs.ctx.ring;
    let nv = r.nvars();
    if m.rank == 0 {
        return LengthReport { is_finite: true, length: Some(0), standard_monomials: Some(Vec::new()) };
    }
    let sb = standard_basis(r, &m.relations(), m.rank, &hs.length_order(mode), modulus(hs, m.ring));
    let leads = sb.leading_monomials();
    let mut out = Vec::new();
    for pos in 0..m.rank {
        let at: Vec<&Monomial> = leads.iter().filter(|(p, _)| *p == pos).map(|(_, l)| l).collect();
        if at.iter().any(|l| l.is_one()) {
            continue;
        }
        let mut bounds = vec![u32::MAX; nv];
        for l in &at {
            let support: Vec<usize> = (0..nv).filter(|&v| l.0[v] > 0).collect();
            if let [v] = support[..] {
                bounds[v] = bounds[v].min(l.0[v]);
            }
        }
        if bounds.contains(&u32::MAX) {
            return LengthReport { is_finite: false, length: None, standard_monomials: None };
        }
        let mut cur = Monomial::one(nv);
        enumerate_standard(&at, &bounds, 0, &mut cur, &mut |mon| out.push((pos, mon.clone())));
    }
    LengthReport { is_finite: true, length: Some(out.len()), standard_monomials: Some(out) }
}

fn enumerate_standard(leads: &[&Monomial], bounds: &[u32], v: usize, cur: &mut Monomial, emit: &mut impl FnMut(&Monomial)) {
    if v == bounds.len() {
        emit(cur);
        return;
    }
    for e in 0..bounds[v] {
        cur.0[v] = e;
        if leads.iter().any(|l| l.divides(cur)) {
            break;
        }
        enumerate_standard(leads, bounds, v + 1, cur, emit);
    }
    cur.0[v] = 0;
}
