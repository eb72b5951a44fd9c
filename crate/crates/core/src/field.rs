//! Coefficient fields: exact rationals and prime fields `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// `F_p` for a prime `p < 2^31`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElem::Mod {
                value: v.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Builds `num/den`; `den` must be nonzero (and invertible mod p).
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElem> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        match *self {
            Field::Rational => Ok(FieldElem::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let reduce = |b: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    (((b % &m) + &m) % &m).to_u64().unwrap()
                };
                let d = reduce(den);
                if d == 0 {
                    return Err(Error::Precondition(format!("denominator vanishes mod {p}")));
                }
                let n = FieldElem::Mod { value: reduce(num), p };
                Ok(n.div(&FieldElem::Mod { value: d, p }))
            }
        }
    }

    /// Results over `F_p` are flagged probabilistic by the reports.
    pub fn is_probabilistic(&self) -> bool {
        matches!(self, Field::Prime(_))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("F"))
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| Error::Precondition(format!("unknown field `{s}` (use Q or Fp:<prime>)")))?;
        Field::prime(p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a coefficient field, always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Mod { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        match (self, o) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Mod { value: a, p }, FieldElem::Mod { value: b, p: q }) if p == q => {
                FieldElem::Mod { value: (a + b) % p, p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Mod { value, p } => FieldElem::Mod { value: (p - value) % p, p: *p },
        }
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        match (self, o) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Mod { value: a, p }, FieldElem::Mod { value: b, p: q }) if p == q => {
                FieldElem::Mod { value: a * b % p, p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Panics on division by zero.
    pub fn inv(&self) -> FieldElem {
        assert!(!self.is_zero(), "division by zero in coefficient field");
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(a.recip()),
            FieldElem::Mod { value, p } => FieldElem::Mod { value: pow_mod(*value, p - 2, *p), p: *p },
        }
    }

    pub fn div(&self, o: &FieldElem) -> FieldElem {
        self.mul(&o.inv())
    }

    /// True when printing needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rational(a) => a.is_negative(),
            FieldElem::Mod { .. } => false,
        }
    }

    /// Integer value, when the element is an integer (rationals) or always (F_p, in [0,p)).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldElem::Rational(a) if a.is_integer() => a.to_integer().to_i64(),
            FieldElem::Rational(_) => None,
            FieldElem::Mod { value, .. } => Some(*value as i64),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(a) => write!(f, "{a}"),
            FieldElem::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(31).unwrap();
        for v in 1..31 {
            let a = f.from_i64(v);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn rational_canonical() {
        let f = Field::Rational;
        let a = f.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(a.to_string(), "-2/3");
        assert_eq!(f.from_i64(-3).add(&f.from_i64(3)), f.zero());
    }

    #[test]
    fn parse_field() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("Fp:31".parse::<Field>().unwrap(), Field::Prime(31));
        assert!("Fp:32".parse::<Field>().is_err());
        assert_eq!(Field::Prime(31).from_i64(-1).to_i64(), Some(30));
    }
}
