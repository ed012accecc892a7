//! Exact polynomial algebra for Landau-Ginzburg mirror models: Groebner
//! bases, periodic resolutions, Ext tables, fibre bookkeeping and Dehn-twist
//! monodromy.

pub mod groebner;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod mirror;
pub mod monodromy;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod sampling;
pub mod scalar;
pub mod verify;

pub use groebner::{GroebnerBasis, GroebnerConfig, GroebnerError};
pub use ideal::{IdealBasis, IdealError};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_poly, ParseError};
pub use poly::{PolyError, Polynomial};
pub use ring::{Ring, RingError, VariableRegistry};
pub use scalar::{Field, Scalar, ScalarError};
