//! Resolutions over `R = P/(f)`: MCM approximation, matrix factorizations,
//! stable Tor and Ext of the 2-periodic tail, the theta pairing.

#[cfg(test)]
mod tests;

use serde::{Deserialize, Serialize};

use crate::engine::Hypersurface;
use crate::error::{Error, Result};
use crate::fpmod::{length, minimal_presentation, subquotient_homology, BaseRing, FPModule, LengthReport};
use crate::gbasis::{lift_many, standard_basis, syzygies, FreeVector};
use crate::matrix::Matrix;
use crate::poly::{PolyRing, Polynomial};

/// `A * B = B * A = f * I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub a: Matrix,
    pub b: Matrix,
    pub f: Polynomial,
}

/// Text form of a [`MatrixFactorization`] for JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFactorizationView {
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
    pub p: usize,
    pub f: String,
}

impl MatrixFactorization {
    pub fn size(&self) -> usize {
        self.a.rows()
    }

    /// Checks `A * B = B * A = f * I` exactly.
    pub fn is_valid(&self) -> bool {
        let fi = Matrix::scalar(self.size(), &self.f);
        self.a.mul(&self.b) == fi && self.b.mul(&self.a) == fi
    }

    pub fn view(&self, ring: &PolyRing) -> MatrixFactorizationView {
        let fmt = |m: &Matrix| m.to_rows().iter().map(|r| r.iter().map(|e| ring.format(e)).collect()).collect();
        MatrixFactorizationView { a: fmt(&self.a), b: fmt(&self.b), p: self.size(), f: ring.format(&self.f) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionOverR {
    /// `d_1, d_2, ...` with `d_i: F_i -> F_{i-1}`; `d_1` presents the module.
    pub differentials: Vec<Matrix>,
    /// First index `i` with `d_i = tail.a`; from there on the maps alternate `A, B`.
    pub stabilized_at: usize,
    pub tail: Option<MatrixFactorization>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ThetaReport {
    pub len_even: usize,
    pub len_odd: usize,
    pub theta: i64,
    pub stable_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HerbrandReport {
    pub len_even_ext: usize,
    pub len_odd_ext: usize,
    pub h: i64,
    pub stable_index: usize,
}

/// `dim P/J_f` at the origin.
pub fn milnor_number(hs: &Hypersurface) -> Result<usize> {
    let ring = &hs.ctx.ring;
    let gens: Vec<FreeVector> = hs.ctx.jacobian_ideal.iter().map(|g| vec![g.clone()]).collect();
    let m = FPModule::new(BaseRing::P, Matrix::from_columns(1, ring.nvars(), &gens), Some(vec![0]));
    length(hs, &m, crate::engine::LengthMode::Local).length.ok_or(Error::NonIsolated)
}

fn require_r(m: &FPModule) -> Result<()> {
    match m.ring {
        BaseRing::R => Ok(()),
        BaseRing::P => Err(Error::Precondition("module must be over R".into())),
    }
}

/// The first syzygy of `m` over `R`, minimally presented. Its generators are
/// the columns of the minimal presentation of `m`.
pub fn syzygy_over_r(hs: &Hypersurface, m: &FPModule) -> FPModule {
    let m = minimal_presentation(hs, m);
    syzygy_of_minimal(hs, &m)
}

fn syzygy_of_minimal(hs: &Hypersurface, m: &FPModule) -> FPModule {
    let nv = hs.nvars();
    let cols = m.relations();
    if cols.is_empty() {
        return FPModule::zero(BaseRing::R, nv);
    }
    let k = cols.len();
    let rel = syzygies(&hs.ctx.ring, &cols, m.rank, &hs.global_order(), Some(hs.f()));
    let degrees = m.degrees.as_ref().and_then(|d| {
        cols.iter().map(|c| crate::fpmod::vector_degree(c, d, &hs.ctx.ring.weights)).collect()
    });
    let raw = FPModule::new(BaseRing::R, Matrix::from_columns(k, nv, &rel), degrees);
    minimal_presentation(hs, &raw)
}

/// Lifts `f * e_i` through the columns of `a` over `P`.
fn partner(hs: &Hypersurface, a: &Matrix) -> Option<Matrix> {
    let p = a.rows();
    if p == 0 || a.cols() != p {
        return None;
    }
    let ring = &hs.ctx.ring;
    let sb = standard_basis(ring, &a.columns(), p, &hs.global_order(), None);
    let targets: Vec<FreeVector> = (0..p)
        .map(|i| {
            let mut t = vec![ring.zero(); p];
            t[i] = hs.f().clone();
            t
        })
        .collect();
    let mut cols = Vec::with_capacity(p);
    for l in lift_many(&targets, &sb) {
        let l = l.ok()?;
        if l.unit != ring.one() {
            return None;
        }
        cols.push(l.coefficients);
    }
    Some(Matrix::from_columns(p, ring.nvars(), &cols))
}

/// MCM certificate: square minimal presentation whose columns lift `f * I` over `P`.
pub fn is_mcm(hs: &Hypersurface, m: &FPModule) -> bool {
    m.rank > 0 && m.presentation.cols() == m.rank && partner(hs, &m.presentation).is_some()
}

/// Iterates syzygies until the MCM certificate holds. Returns the MCM module
/// (zero when `m` has finite projective dimension) and the number of steps.
pub fn mcm_approximation(hs: &Hypersurface, m: &FPModule) -> Result<(FPModule, usize)> {
    require_r(m)?;
    let mut cur = minimal_presentation(hs, m);
    let mut steps = 0;
    loop {
        if cur.rank == 0 || is_mcm(hs, &cur) {
            return Ok((cur, steps));
        }
        if steps >= hs.max_steps() {
            return Err(Error::NoStabilization(steps));
        }
        cur = syzygy_of_minimal(hs, &cur);
        steps += 1;
    }
}

/// The factorization `(A, B)` with `A` the presentation of an MCM module.
pub fn matrix_factorization(hs: &Hypersurface, mcm: &FPModule) -> Result<MatrixFactorization> {
    let a = &mcm.presentation;
    if a.rows() != a.cols() || a.rows() == 0 {
        return Err(Error::LiftFailed(format!("presentation is {}x{}, not square", a.rows(), a.cols())));
    }
    let b = partner(hs, a).ok_or_else(|| Error::LiftFailed("f * e_i is not in the column span over P".into()))?;
    let mf = MatrixFactorization { a: a.clone(), b, f: hs.f().clone() };
    if !mf.is_valid() {
        return Err(Error::LiftFailed("A * B != f * I".into()));
    }
    if hs.config.verify && mf.size() <= 8 {
        let det = mf.a.determinant();
        if det.is_zero() || hs.f().pow(mf.size() as u32).div_exact(&det).is_none() {
            return Err(Error::LiftFailed("det(A) does not divide a power of f".into()));
        }
    }
    Ok(mf)
}

/// Minimal resolution of `m` over `R` up to two maps past the MCM approximation.
pub fn resolve(hs: &Hypersurface, m: &FPModule) -> Result<ResolutionOverR> {
    require_r(m)?;
    let mut cur = minimal_presentation(hs, m);
    let mut differentials = Vec::new();
    let mut steps = 0;
    loop {
        if cur.rank == 0 {
            return Ok(ResolutionOverR { differentials, stabilized_at: steps + 1, tail: None });
        }
        if is_mcm(hs, &cur) {
            let mf = matrix_factorization(hs, &cur)?;
            differentials.push(mf.a.clone());
            differentials.push(mf.b.clone());
            return Ok(ResolutionOverR { differentials, stabilized_at: steps + 1, tail: Some(mf) });
        }
        if steps >= hs.max_steps() {
            return Err(Error::NoStabilization(steps));
        }
        differentials.push(cur.presentation.clone());
        cur = syzygy_of_minimal(hs, &cur);
        steps += 1;
    }
}

/// Smallest even `2k` with `2k > max(n, steps)`.
fn stable_index(n: usize, steps: usize) -> usize {
    let m = n.max(steps);
    (m / 2 + 1) * 2
}

fn finite(r: LengthReport) -> Result<usize> {
    r.length.ok_or(Error::InfiniteLength)
}

/// Homology lengths of `N^p --u--> N^p --v--> N^p` at the middle, for both
/// orders of the pair: returns `(len ker(v)/im(u), len ker(u)/im(v))`.
fn periodic_homology(hs: &Hypersurface, u: &Matrix, v: &Matrix, n: &FPModule) -> Result<(usize, usize)> {
    let p = u.rows();
    let q = n.rank;
    let np = FPModule::new(BaseRing::R, n.presentation.identity_kron(p), None);
    let u = u.kron_identity(q);
    let v = v.kron_identity(q);
    let mode = hs.config.mode;
    let first = finite(length(hs, &subquotient_homology(hs, &u, &v, &np, &np)?, mode))?;
    let second = finite(length(hs, &subquotient_homology(hs, &v, &u, &np, &np)?, mode))?;
    Ok((first, second))
}

/// Stable Tor lengths of `m` against `n`, at index `2k` (even) and `2k + 1`.
pub fn stable_tor(hs: &Hypersurface, m: &FPModule, n: &FPModule) -> Result<ThetaReport> {
    require_r(n)?;
    let (mcm, steps) = mcm_approximation(hs, m)?;
    let stable_index = stable_index(hs.ctx.n, steps);
    if mcm.rank == 0 {
        return Ok(ThetaReport { len_even: 0, len_odd: 0, theta: 0, stable_index });
    }
    let mf = matrix_factorization(hs, &mcm)?;
    let nmin = minimal_presentation(hs, n);
    // d_odd = A, d_even = B: Tor_odd = ker(A)/im(B), Tor_even = ker(B)/im(A)
    let (even, odd) = periodic_homology(hs, &mf.a, &mf.b, &nmin)?;
    let (len_even, len_odd) = if steps % 2 == 0 { (even, odd) } else { (odd, even) };
    Ok(ThetaReport { len_even, len_odd, theta: len_even as i64 - len_odd as i64, stable_index })
}

pub fn theta(hs: &Hypersurface, m: &FPModule, n: &FPModule) -> Result<i64> {
    Ok(stable_tor(hs, m, n)?.theta)
}

/// Stable Ext lengths of `m` into `n` via the transposed periodic complex.
pub fn stable_ext(hs: &Hypersurface, m: &FPModule, n: &FPModule) -> Result<HerbrandReport> {
    require_r(n)?;
    let (mcm, steps) = mcm_approximation(hs, m)?;
    let stable_index = stable_index(hs.ctx.n, steps);
    if mcm.rank == 0 {
        return Ok(HerbrandReport { len_even_ext: 0, len_odd_ext: 0, h: 0, stable_index });
    }
    let mf = matrix_factorization(hs, &mcm)?;
    let nmin = minimal_presentation(hs, n);
    // Ext^odd = ker(B^T)/im(A^T), Ext^even = ker(A^T)/im(B^T)
    let (odd, even) = periodic_homology(hs, &mf.a.transpose(), &mf.b.transpose(), &nmin)?;
    let (len_even_ext, len_odd_ext) = if steps % 2 == 0 { (even, odd) } else { (odd, even) };
    Ok(HerbrandReport { len_even_ext, len_odd_ext, h: len_even_ext as i64 - len_odd_ext as i64, stable_index })
}

/// The factorization `(B^T, A^T)`.
pub fn dual_factorization(mf: &MatrixFactorization) -> MatrixFactorization {
    MatrixFactorization { a: mf.b.transpose(), b: mf.a.transpose(), f: mf.f.clone() }
}

/// `coker(B^T)`, the module whose theta pairing reproduces the Herbrand difference.
pub fn dual_mcm(mf: &MatrixFactorization) -> FPModule {
    FPModule::new(BaseRing::R, mf.b.transpose(), None)
}

/// Theta of each pair; all zero when `n` is even.
pub fn parity_vanishing_check(hs: &Hypersurface, pairs: &[(FPModule, FPModule)]) -> Result<Vec<i64>> {
    if hs.ctx.n % 2 == 1 {
        return Err(Error::Precondition(format!("vanishing is only expected for even n, here n = {}", hs.ctx.n)));
    }
    pairs.iter().map(|(m, n)| theta(hs, m, n)).collect()
}
