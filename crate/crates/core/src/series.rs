//! Integer polynomials in one variable `t`, the numerators of Hilbert series.

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// Dense integer polynomial, `coeffs[i]` is the coefficient of `t^i`. No trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn monomial(c: i64, e: usize) -> Self {
        let mut v = vec![0; e + 1];
        v[e] = c;
        Self::new(v)
    }

    /// `1 - t^e`.
    pub fn one_minus_t_pow(e: u32) -> Self {
        let mut v = vec![0; e as usize + 1];
        v[0] += 1;
        v[e as usize] -= 1;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        IntPoly::new(v)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * t + c)
    }

    /// Exact division by `1 - t^e`, if it divides.
    pub fn div_one_minus_t_pow(&self, e: u32) -> Option<IntPoly> {
        let e = e as usize;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // self = (1 - t^e) q  <=>  q_i = self_i + q_{i-e}
        let n = self.coeffs.len();
        if n <= e {
            return None;
        }
        let mut q = vec![0i64; n - e];
        for i in 0..n - e {
            q[i] = self.coeff(i) + if i >= e { q[i - e] } else { 0 };
        }
        let q = IntPoly::new(q);
        (q.mul(&IntPoly::one_minus_t_pow(e as u32)) == *self).then_some(q)
    }

    /// Exact division by another integer polynomial with unit leading coefficient
    /// behaviour checked by multiplication.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lead = d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(IntPoly::zero);
        }
        let mut q = vec![0i64; rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = rem[i + dd];
            if c % lead != 0 {
                return None;
            }
            let c = c / lead;
            q[i] = c;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
        rem.iter().all(|&c| c == 0).then(|| IntPoly::new(q))
    }

    /// Largest `k` with `(1 - t)^k` dividing `self` (zero polynomial: 0).
    pub fn one_minus_t_multiplicity(&self) -> usize {
        let mut k = 0;
        let mut p = self.clone();
        while !p.is_zero() {
            match p.div_one_minus_t_pow(1) {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }

    /// Writes `self = c * prod (1 - t^a) / prod (1 - t^b)` with `c = self(0)`,
    /// when `self / c` is a product of cyclotomic polynomials.
    pub fn cyclotomic_quotient(&self) -> Option<(i64, Vec<u32>, Vec<u32>)> {
        let deg = self.degree()?;
        let c = self.coeff(0);
        if c == 0 {
            return None;
        }
        let mut rest = self.clone();
        let bound = 2 * deg * deg + 2;
        let mut mult = vec![0i64; bound + 1];
        let mut phis: Vec<IntPoly> = vec![IntPoly::zero()];
        for k in 1..=bound {
            let phi = cyclotomic(k, &phis);
            while rest.degree().unwrap_or(0) > 0 {
                match rest.div_exact(&phi) {
                    Some(q) => {
                        rest = q;
                        mult[k] += 1;
                    }
                    None => break,
                }
            }
            phis.push(phi);
        }
        if rest != IntPoly::new(vec![c]) {
            return None;
        }
        // Phi_k = prod_{j | k} (1 - t^j)^{mu(k / j)}
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for j in 1..=bound {
            let e: i64 = (j..=bound).step_by(j).map(|k| mult[k] * mobius(k / j)).sum();
            let list = if e > 0 { &mut a } else { &mut b };
            list.extend(std::iter::repeat(j as u32).take(e.unsigned_abs() as usize));
        }
        Some((c, a, b))
    }

    /// Power-series coefficients of `self / prod(1 - t^e)` up to `t^max_deg`.
    pub fn expand_over(&self, denominator: &[u32], max_deg: usize) -> Vec<i64> {
        let mut s: Vec<i64> = (0..=max_deg).map(|i| self.coeff(i)).collect();
        for &e in denominator {
            let e = e as usize;
            for i in e..=max_deg {
                s[i] += s[i - e];
            }
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `Phi_k` normalized to constant term 1 (so `Phi_1 = 1 - t`), given `Phi_1..Phi_{k-1}`.
fn cyclotomic(k: usize, lower: &[IntPoly]) -> IntPoly {
    let mut p = IntPoly::one_minus_t_pow(k as u32);
    for (j, phi) in lower.iter().enumerate().skip(1) {
        if k % j == 0 {
            p = p.div_exact(phi).expect("cyclotomic division");
        }
    }
    p
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `t^shift * numerator / prod_j (1 - t^{denominator[j]})`. Factors of the
/// denominator that divide the numerator are cancelled, largest first, and
/// `numerator(0) != 0`. Equality compares the series, not the representation.
#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RationalSeries {
    pub numerator: IntPoly,
    pub denominator: Vec<u32>,
    pub shift: i64,
}

impl RationalSeries {
    pub fn new(numerator: IntPoly, mut denominator: Vec<u32>, shift: i64) -> Self {
        if numerator.is_zero() {
            return RationalSeries { numerator, denominator: Vec::new(), shift: 0 };
        }
        denominator.sort_unstable_by(|a, b| b.cmp(a));
        let mut num = numerator;
        let mut kept = Vec::new();
        for e in denominator {
            match num.div_one_minus_t_pow(e) {
                Some(q) => num = q,
                None => kept.push(e),
            }
        }
        let low = num.coeffs().iter().position(|&c| c != 0).unwrap();
        let numerator = IntPoly::new(num.coeffs()[low..].to_vec());
        RationalSeries { numerator, denominator: kept, shift: shift + low as i64 }
    }

    /// `sum_i t^{s_i} p_i / prod_j (1 - t^{w_j})`.
    pub fn from_parts(parts: &[(i64, IntPoly)], weights: &[u32]) -> Self {
        let parts: Vec<_> = parts.iter().filter(|(_, p)| !p.is_zero()).collect();
        let Some(low) = parts.iter().map(|(s, _)| *s).min() else {
            return Self::new(IntPoly::zero(), Vec::new(), 0);
        };
        let mut num = IntPoly::zero();
        for (s, p) in &parts {
            num = num.add(&p.shift((s - low) as usize));
        }
        Self::new(num, weights.to_vec(), low)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Order of the pole at `t = 1` (negative for a zero there).
    pub fn pole_order_at_one(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        self.denominator.len() as i64 - self.numerator.one_minus_t_multiplicity() as i64
    }

    /// `lim_{t -> 1} (1 - t)^k * S(t)` where `k` is the pole order.
    pub fn leading_coefficient_at_one(&self) -> Rational64 {
        if self.is_zero() {
            return Rational64::from_integer(0);
        }
        let mut num = self.numerator.clone();
        while let Some(q) = num.div_one_minus_t_pow(1) {
            num = q;
        }
        let den: i64 = self.denominator.iter().map(|&e| e as i64).product();
        Rational64::new(num.eval(1), den)
    }

    pub fn mul(&self, o: &RationalSeries) -> RationalSeries {
        let mut den = self.denominator.clone();
        den.extend(&o.denominator);
        RationalSeries::new(self.numerator.mul(&o.numerator), den, self.shift + o.shift)
    }

    /// `e` when the series is `p(t) / (1 - t)^e`.
    pub fn denom_exponent(&self) -> Option<u32> {
        self.denominator.iter().all(|&w| w == 1).then_some(self.denominator.len() as u32)
    }

    /// `dim M_d`.
    pub fn dimension(&self, d: i64) -> i64 {
        let k = d - self.shift;
        if k < 0 {
            return 0;
        }
        *self.numerator.expand_over(&self.denominator, k as usize).last().unwrap()
    }

    /// Dimensions in degrees `0..=max_deg`.
    pub fn dimensions(&self, max_deg: i64) -> Vec<i64> {
        (0..=max_deg).map(|d| self.dimension(d)).collect()
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, o: &Self) -> bool {
        let den = |w: &[u32]| w.iter().fold(IntPoly::one(), |acc, &e| acc.mul(&IntPoly::one_minus_t_pow(e)));
        let low = self.shift.min(o.shift);
        let a = self.numerator.shift((self.shift - low) as usize).mul(&den(&o.denominator));
        let b = o.numerator.shift((o.shift - low) as usize).mul(&den(&self.denominator));
        a == b
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift != 0 {
            write!(f, "t^{}*", self.shift)?;
        }
        write!(f, "({})", self.numerator)?;
        let mut d = self.denominator.clone();
        d.sort_unstable();
        d.dedup();
        let parts: Vec<String> = d
            .iter()
            .map(|&w| {
                let k = self.denominator.iter().filter(|&&x| x == w).count();
                let base = if w == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{w})") };
                if k == 1 { base } else { format!("{base}^{k}") }
            })
            .collect();
        if !parts.is_empty() {
            write!(f, "/{}", parts.join("*"))?;
        }
        Ok(())
    }
}
