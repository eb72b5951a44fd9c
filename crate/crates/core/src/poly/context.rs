use crate::error::{Error, Result};

use super::polynomial::Polynomial;
use super::ring::PolyRing;

/// The ambient data of a hypersurface germ: the ring `P`, the equation `f`
/// and its Jacobian ideal. `R = P/(f)` has Krull dimension `n = numVars - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityContext {
    pub ring: PolyRing,
    pub f: Polynomial,
    pub n: usize,
    pub jacobian_ideal: Vec<Polynomial>,
    /// Filled in by `hypersurface::milnor_number` callers that want to cache it.
    pub milnor_number: Option<usize>,
}

impl SingularityContext {
    pub fn new(ring: PolyRing, f: Polynomial) -> Result<Self> {
        if f.nvars() != ring.nvars() {
            return Err(Error::VariableMismatch { left: f.nvars(), right: ring.nvars() });
        }
        if ring.nvars() == 0 {
            return Err(Error::Precondition("need at least one variable".into()));
        }
        if f.is_zero() {
            return Err(Error::Precondition("f must be nonzero".into()));
        }
        if f.constant_term().is_some() {
            return Err(Error::Precondition("f must vanish at the origin".into()));
        }
        let jacobian_ideal = f.partials();
        Ok(SingularityContext { n: ring.nvars() - 1, ring, f, jacobian_ideal, milnor_number: None })
    }

    pub fn from_strings(vars: &[&str], field: crate::field::Field, f: &str) -> Result<Self> {
        let ring = PolyRing::new(vars, field);
        let f = ring.parse(f)?;
        Self::new(ring, f)
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Weighted degree of `f` when it is weighted homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        self.f.homogeneous_degree(&self.ring.weights)
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        self.ring.parse(s)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        self.ring.format(p)
    }
}
