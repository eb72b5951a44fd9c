use crate::engine::Hypersurface;
use crate::error::{Error, Result};
use crate::gbasis::standard_basis;
use crate::poly::Monomial;
use crate::series::{IntPoly, RationalSeries};

use super::{modulus, vector_degree, BaseRing, FPModule};

/// Hilbert series are rational series with denominators `prod (1 - t^w)`.
pub type HilbertSeries = RationalSeries;

/// Numerator `N` with `H(P/L) = N(t) / prod(1 - t^{w_j})` for a monomial ideal `L`.
pub fn monomial_ideal_numerator(gens: &[Monomial], weights: &[u32]) -> IntPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return IntPoly::zero();
    }
    let nv = weights.len();
    let counts: Vec<usize> = (0..nv).map(|v| gens.iter().filter(|g| g.0[v] > 0).count()).collect();
    let (v, &c) = counts.iter().enumerate().max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v))).unwrap();
    if c < 2 {
        // pairwise coprime
        return gens.iter().fold(IntPoly::one(), |acc, g| {
            acc.mul(&IntPoly::one_minus_t_pow(g.weighted_degree(weights) as u32))
        });
    }
    // N(L) = N(L + (x_v)) + t^{w_v} N(L : x_v)
    let xv = Monomial::var(nv, v, 1);
    let mut plus = gens.clone();
    plus.push(xv.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h.0[v] = h.0[v].saturating_sub(1);
            h
        })
        .collect();
    monomial_ideal_numerator(&plus, weights).add(&monomial_ideal_numerator(&colon, weights).shift(weights[v] as usize))
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort_by_key(|m| m.0.iter().sum::<u32>());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Generator degrees of a graded module, checking every relation is homogeneous.
pub(crate) fn graded_degrees(hs: &Hypersurface, m: &FPModule) -> Result<Vec<i64>> {
    let w = &hs.ctx.ring.weights;
    if m.ring == BaseRing::R && hs.f().homogeneous_degree(w).is_none() {
        return Err(Error::NotGraded("f is not weighted homogeneous".into()));
    }
    let degrees = m.degrees.clone().unwrap_or_else(|| vec![0; m.rank]);
    for (k, col) in m.relations().iter().enumerate() {
        if col.iter().all(|e| e.is_zero()) {
            continue;
        }
        if vector_degree(col, &degrees, w).is_none() {
            return Err(Error::NotGraded(format!("relation {k} is not homogeneous")));
        }
    }
    Ok(degrees)
}

/// Hilbert series from the leading terms of a graded standard basis.
pub fn hilbert_series(hs: &Hypersurface, m: &FPModule) -> Result<HilbertSeries> {
    let degrees = graded_degrees(hs, m)?;
    let r = &hs.ctx.ring;
    let sb = standard_basis(r, &m.relations(), m.rank, &r.graded_order(), modulus(hs, m.ring));
    let leads = sb.leading_monomials();
    let parts: Vec<(i64, IntPoly)> = (0..m.rank)
        .map(|pos| {
            let at: Vec<Monomial> = leads.iter().filter(|(p, _)| *p == pos).map(|(_, l)| l.clone()).collect();
            (degrees[pos], monomial_ideal_numerator(&at, &r.weights))
        })
        .collect();
    Ok(HilbertSeries::from_parts(&parts, &r.weights))
}
