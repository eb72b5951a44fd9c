pub mod engine;
pub mod error;
pub mod field;
pub mod fpmod;
pub mod gbasis;
pub mod graded;
pub mod hypersurface;
pub mod matrix;
pub mod poly;
pub mod series;

pub use engine::{EngineConfig, GlobalOrder, Hypersurface, LengthMode};
pub use error::{Error, Result};
pub use field::{Field, FieldElem};
pub use matrix::Matrix;
pub use poly::{Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial, SingularityContext};
pub use series::{IntPoly, RationalSeries};
