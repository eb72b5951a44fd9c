use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial in `numVars` variables.
///
/// The derived `Ord` is plain lexicographic order on exponent vectors; it is
/// used only for canonical storage. Algebraic orders live in [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = exp;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// The kinds of monomial order the engine understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    Grevlex,
    Lex,
    WeightedGrevlex,
    /// Local order: smaller weighted degree is *larger*, ties broken as in grevlex.
    NegweightedGrevlex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub weights: Vec<u32>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, weights: Vec<u32>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        MonomialOrder { kind, weights }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, vec![1; nvars])
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, vec![1; nvars])
    }

    pub fn is_local(&self) -> bool {
        self.kind == OrderKind::NegweightedGrevlex
    }

    /// The degree used by this order (standard degree for plain grevlex/lex).
    pub fn degree(&self, m: &Monomial) -> i64 {
        match self.kind {
            OrderKind::Grevlex | OrderKind::Lex => m.total_degree(),
            OrderKind::WeightedGrevlex | OrderKind::NegweightedGrevlex => m.weighted_degree(&self.weights),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        self.compare_with_degrees(a, self.degree(a), b, self.degree(b))
    }

    /// Comparison with precomputed degrees (`self.degree` of each side).
    pub fn compare_with_degrees(&self, a: &Monomial, da: i64, b: &Monomial, db: i64) -> Ordering {
        match self.kind {
            OrderKind::Lex => a.0.cmp(&b.0),
            OrderKind::Grevlex | OrderKind::WeightedGrevlex => da.cmp(&db).then_with(|| revlex(a, b)),
            OrderKind::NegweightedGrevlex => db.cmp(&da).then_with(|| revlex(a, b)),
        }
    }
}

/// Reverse-lexicographic tie-break: the monomial with the smaller exponent in
/// the last differing variable is larger.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Lex => "lex",
            OrderKind::WeightedGrevlex => "weighted-grevlex",
            OrderKind::NegweightedGrevlex => "negweighted-grevlex",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn textbook_comparisons() {
        let grevlex = MonomialOrder::grevlex(2);
        assert_eq!(grevlex.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        let local = MonomialOrder::new(OrderKind::NegweightedGrevlex, vec![1, 1]);
        assert_eq!(local.compare(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        let lex = MonomialOrder::lex(2);
        assert_eq!(lex.compare(&m(&[0, 3]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn global_and_local_against_one() {
        let one = Monomial::one(3);
        for kind in [OrderKind::Grevlex, OrderKind::Lex, OrderKind::WeightedGrevlex] {
            let o = MonomialOrder::new(kind, vec![2, 1, 3]);
            for i in 0..3 {
                assert_eq!(o.compare(&Monomial::var(3, i, 1), &one), Ordering::Greater);
            }
        }
        let o = MonomialOrder::new(OrderKind::NegweightedGrevlex, vec![2, 1, 3]);
        for i in 0..3 {
            assert_eq!(o.compare(&Monomial::var(3, i, 1), &one), Ordering::Less);
        }
    }

    fn all_orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::grevlex(3),
            MonomialOrder::lex(3),
            MonomialOrder::new(OrderKind::WeightedGrevlex, vec![1, 2, 3]),
            MonomialOrder::new(OrderKind::NegweightedGrevlex, vec![1, 1, 1]),
            MonomialOrder::new(OrderKind::NegweightedGrevlex, vec![3, 1, 2]),
        ]
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(a in prop::collection::vec(0u32..5, 3),
                                    b in prop::collection::vec(0u32..5, 3),
                                    c in prop::collection::vec(0u32..5, 3)) {
            let (a, b, c) = (Monomial(a), Monomial(b), Monomial(c));
            for o in all_orders() {
                let ab = o.compare(&a, &b);
                prop_assert_eq!(ab, o.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
            }
        }
    }
}
