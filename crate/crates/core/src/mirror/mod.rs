//! Landau-Ginzburg mirror data: theta-function equations, the general
//! mirror family, fibre bookkeeping, morphism tables.

pub mod fibres;
pub mod hom;
pub mod model;
pub mod sl3;
pub mod theta;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::homology::HomologyError;
use crate::ideal::IdealError;
use crate::poly::{PolyError, Polynomial};
use crate::ring::RingError;

pub use fibres::{dsg_generators, fibre_report, mirror_map, Fibre, FibreReport, MirrorMapReport};
pub use hom::{hom_sheaves, hom_sheaves_with, hom_table_lg2, GroupDescriptor, HomEntry, HomTable};
pub use model::{MirrorModel, ModelReport, Pencil, TParam};
pub use sl3::{rational_potential_sl3, RationalPotential, RationalPotentialReport};
pub use theta::{
    lg2_surface, mir_equation, reduced_coefficients, substitution_cross_check, theta_eliminate,
    theta_equations, Lg2Surface, ThetaElimination, ThetaSystem,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MirrorError {
    #[error("n must be at least 2 (got {0}); the n = 1 case is the theta surface")]
    NTooSmall(usize),
    #[error("index {index} outside 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("Hom({i}, {j}) is not determined by the available data")]
    Undetermined { i: usize, j: usize },
    #[error("coefficient `{0}` vanishes identically")]
    ZeroCoefficient(&'static str),
    #[error("weights must sum to zero (sum is {0})")]
    TraceNonzero(String),
    #[error("weights are all equal; the potential degenerates")]
    DegenerateWeights,
    #[error("the swap needs both couplings symbolic or both numeric")]
    MixedCouplings,
    #[error("pencil polynomials are not homogeneous of equal degree")]
    NotHomogeneous,
    #[error("elimination produced no relation in the remaining variables")]
    NoRelation,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// `num / den` with polynomial parts, kept unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            let c = self.den.constant_term();
            let inv = c.inv().expect("nonzero denominator");
            return write!(f, "{}", self.num.scale(&inv));
        }
        let single_var = self.den.is_monomial()
            && self.den.degree() == Some(1)
            && self.den.leading().map(|(_, c)| c.is_one()).unwrap_or(false);
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if single_var {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A component of a fibre, named, with its defining ideal.
#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub label: String,
    pub generators: Vec<String>,
}
