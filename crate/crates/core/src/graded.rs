//! The graded side: Hilbert-series algebra, residues at `t = 1`, Serre
//! intersection multiplicities, and both sides of the degree formula for theta
//! on a homogeneous hypersurface in an even number of variables.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::engine::{Hypersurface, LengthMode};
use crate::error::{Error, Result};
use crate::fpmod::{
    hilbert_series, length, minimal_presentation, module_from_ideal, subquotient_homology, BaseRing, FPModule,
};
use crate::gbasis::syzygies;
use crate::hypersurface::theta;
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::series::{IntPoly, RationalSeries};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GradedCycleReport {
    pub deg_y: i64,
    pub deg_z: i64,
    pub d: i64,
    pub proj_intersection: Rational64,
    pub primitive_pairing: Rational64,
    pub theta_predicted: Rational64,
    pub theta_computed: i64,
    /// Residue at `t = 1` of `H(M) H(N) / H(R)`.
    pub product_residue: Rational64,
    /// `deg(Y) deg(Z) / d = [Y].[Z] + theta / d`.
    pub balanced: bool,
}

/// `H(M) H(N) / H(R)` as an exact rational function.
pub fn series_product_formula(hm: &RationalSeries, hn: &RationalSeries, hr: &RationalSeries) -> Result<RationalSeries> {
    if hr.is_zero() {
        return Err(Error::DivisionByZeroSeries("H(R) is zero".into()));
    }
    let (c, a, b) = hr
        .numerator
        .cyclotomic_quotient()
        .ok_or_else(|| Error::DivisionByZeroSeries("numerator of H(R) is not a product of cyclotomic factors".into()))?;
    if c.abs() != 1 {
        return Err(Error::DivisionByZeroSeries(format!("leading coefficient {c} of H(R) is not a unit")));
    }
    // 1 / H(R) = c * prod(1 - t^b) * prod(1 - t^w) / prod(1 - t^a)
    let mut num = IntPoly::new(vec![c]);
    for &e in b.iter().chain(&hr.denominator) {
        num = num.mul(&IntPoly::one_minus_t_pow(e));
    }
    let inv = RationalSeries::new(num, a, -hr.shift);
    Ok(hm.mul(hn).mul(&inv))
}

/// Residue at `t = 1`, i.e. `lim (1 - t) S(t)`, for a simple pole.
pub fn residue_at_one(s: &RationalSeries) -> Result<Rational64> {
    match s.pole_order_at_one() {
        1 => Ok(s.leading_coefficient_at_one()),
        k => Err(Error::WrongPoleOrder(k)),
    }
}

/// Minimal free resolution `d_1, d_2, ...` of `m` over `P`.
pub fn free_resolution_over_p(hs: &Hypersurface, m: &FPModule) -> Result<Vec<Matrix>> {
    let ring = &hs.ctx.ring;
    let mut cur = minimal_presentation(hs, m);
    let mut out = Vec::new();
    while cur.presentation.cols() > 0 {
        if out.len() > ring.nvars() + 1 {
            return Err(Error::NoStabilization(out.len()));
        }
        let d = cur.presentation.clone();
        let k = d.cols();
        let rel = syzygies(ring, &d.columns(), d.rows(), &hs.global_order(), None);
        out.push(d);
        let next = minimal_presentation(hs, &FPModule::new(BaseRing::P, Matrix::from_columns(k, ring.nvars(), &rel), None));
        if next.rank != k {
            return Err(Error::Precondition("syzygy generators were not minimal".into()));
        }
        cur = next;
    }
    Ok(out)
}

/// `sum (-1)^i length Tor_i^P(P/I, P/J)` at the origin.
pub fn serre_intersection(hs: &Hypersurface, i: &[Polynomial], j: &[Polynomial]) -> Result<i64> {
    let nv = hs.nvars();
    let both: Vec<Polynomial> = i.iter().chain(j).cloned().collect();
    if !length(hs, &module_from_ideal(hs, &both, BaseRing::P), LengthMode::Local).is_finite {
        return Err(Error::NotIsolatedIntersection);
    }
    let pi = minimal_presentation(hs, &module_from_ideal(hs, i, BaseRing::P));
    let pj = minimal_presentation(hs, &module_from_ideal(hs, j, BaseRing::P));
    if pi.rank == 0 || pj.rank == 0 {
        return Ok(0);
    }
    let d = free_resolution_over_p(hs, &pi)?;
    // ranks r_0 = 1, r_i = cols(d_i)
    let rank = |k: usize| if k == 0 { 1 } else { d[k - 1].cols() };
    let tensored = |r: usize| FPModule::new(BaseRing::P, pj.presentation.identity_kron(r), None);
    let mut chi = 0i64;
    for k in 0..=d.len() {
        let middle = tensored(rank(k));
        let (outgoing, target) = if k == 0 {
            (Matrix::zeros(0, 1, nv), FPModule::zero(BaseRing::P, nv))
        } else {
            (d[k - 1].clone(), tensored(rank(k - 1)))
        };
        let incoming = if k < d.len() { d[k].clone() } else { Matrix::zeros(rank(k), 0, nv) };
        let h = subquotient_homology(hs, &incoming, &outgoing, &middle, &target)?;
        let l = length(hs, &h, LengthMode::Local).length.ok_or(Error::NotIsolatedIntersection)? as i64;
        chi += if k % 2 == 0 { l } else { -l };
    }
    Ok(chi)
}

/// Residue at `t = 1` of the Hilbert series of `P/(I + J)`; zero when the
/// projective intersection is empty.
pub fn proj_intersection_number(hs: &Hypersurface, i: &[Polynomial], j: &[Polynomial]) -> Result<Rational64> {
    let both: Vec<Polynomial> = i.iter().chain(j).cloned().collect();
    let s = hilbert_series(hs, &module_from_ideal(hs, &both, BaseRing::P))?;
    match s.pole_order_at_one() {
        k if k <= 0 => Ok(Rational64::from_integer(0)),
        _ => residue_at_one(&s),
    }
}

/// Degree of the projective cycle cut out by `ideal`, checking its cone has dimension `m + 1`.
fn cycle_degree(hs: &Hypersurface, ideal: &[Polynomial], m: usize) -> Result<(i64, RationalSeries)> {
    let s = hilbert_series(hs, &module_from_ideal(hs, ideal, BaseRing::R))?;
    if s.pole_order_at_one() != m as i64 + 1 {
        return Err(Error::Precondition(format!("cycle is not of codimension {m} on the hypersurface")));
    }
    Ok((*s.leading_coefficient_at_one().numer(), s))
}

/// Evaluates both sides of `theta(O_Y, O_Z) = -d [Y].[Z] + deg(Y) deg(Z)`.
pub fn theorem_1_2_check(hs: &Hypersurface, i: &[Polynomial], j: &[Polynomial]) -> Result<GradedCycleReport> {
    let nv = hs.nvars();
    if nv % 2 != 0 || nv < 2 {
        return Err(Error::Precondition(format!("need an even number of variables, got {nv}")));
    }
    let m = (nv - 2) / 2;
    let d = hs.ctx.homogeneous_degree().ok_or_else(|| Error::NotGraded("f is not homogeneous".into()))?;
    if hs.ctx.ring.weights.iter().any(|&w| w != 1) {
        return Err(Error::NotGraded("standard grading required".into()));
    }
    let (deg_y, hy) = cycle_degree(hs, i, m)?;
    let (deg_z, hz) = cycle_degree(hs, j, m)?;
    let proj = proj_intersection_number(hs, i, j)?;
    let both: Vec<Polynomial> = i.iter().chain(j).cloned().collect();
    let meet = hilbert_series(hs, &module_from_ideal(hs, &both, BaseRing::P))?;
    if meet.pole_order_at_one() > 1 {
        return Err(Error::WrongPoleOrder(meet.pole_order_at_one()));
    }
    let hr = hilbert_series(hs, &FPModule::free(BaseRing::R, 1, nv))?;
    let product_residue = residue_at_one(&series_product_formula(&hy, &hz, &hr)?)?;
    let theta_computed = theta(hs, &module_from_ideal(hs, i, BaseRing::R), &module_from_ideal(hs, j, BaseRing::R))?;
    let dd = Rational64::from_integer(d);
    let degs = Rational64::from_integer(deg_y * deg_z);
    let primitive = dd * dd * proj - dd * degs;
    let predicted = -primitive / dd;
    let balanced = degs / dd == proj + Rational64::from_integer(theta_computed) / dd;
    Ok(GradedCycleReport {
        deg_y,
        deg_z,
        d,
        proj_intersection: proj,
        primitive_pairing: primitive,
        theta_predicted: predicted,
        theta_computed,
        product_residue,
        balanced,
    })
}

#[cfg(test)]
mod tests;
