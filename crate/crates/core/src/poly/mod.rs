//! Exact sparse multivariate polynomials, monomial orders and the ambient
//! hypersurface context.

mod context;
mod monomial;
mod polynomial;
mod ring;

pub use context::SingularityContext;
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use polynomial::{poly_arith, ArithOp, Polynomial};
pub use ring::{p, PolyRing};
