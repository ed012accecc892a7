//! The rational potential on the compactified `sl(3)` orbit.

use serde::Serialize;

use super::MirrorError;
use crate::ideal::IdealBasis;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone)]
pub struct RationalPotential {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    /// Where the denominator vanishes.
    pub flag_ideal: IdealBasis,
    /// Base locus `(numerator, denominator)`.
    pub indeterminacy: IdealBasis,
}

#[derive(Debug, Clone, Serialize)]
pub struct RationalPotentialReport {
    pub numerator: String,
    pub denominator: String,
    pub flag_ideal: Vec<String>,
    pub indeterminacy: Vec<String>,
}

impl RationalPotential {
    pub fn report(&self) -> RationalPotentialReport {
        let gens = |i: &IdealBasis| i.generators().iter().map(|g| g.to_string()).collect();
        RationalPotentialReport {
            numerator: self.numerator.to_string(),
            denominator: self.denominator.to_string(),
            flag_ideal: gens(&self.flag_ideal),
            indeterminacy: gens(&self.indeterminacy),
        }
    }
}

/// `(l1 x1 y1 + l2 x2 y2 + l3 x3 y3) / (x1 y1 + x2 y2 + x3 y3)`. With
/// `None` the weights are ring variables `l1, l2, l3`; numeric weights must
/// sum to zero and not all coincide.
pub fn rational_potential_sl3(weights: Option<[Scalar; 3]>) -> Result<RationalPotential, MirrorError> {
    let mut names = Vec::new();
    if weights.is_none() {
        names.extend(["l1", "l2", "l3"]);
    }
    names.extend(["x1", "x2", "x3", "y1", "y2", "y3"]);
    let ring = Ring::new(&names, Field::Rational)?;
    let lambda: Vec<Polynomial> = match &weights {
        None => ["l1", "l2", "l3"]
            .iter()
            .map(|v| ring.var(v))
            .collect::<Result<_, _>>()?,
        Some(w) => {
            if w[0] == w[1] && w[1] == w[2] {
                return Err(MirrorError::DegenerateWeights);
            }
            let sum = &(&w[0] + &w[1]) + &w[2];
            if !sum.is_zero() {
                return Err(MirrorError::TraceNonzero(sum.to_string()));
            }
            w.iter()
                .map(|s| Field::Rational.convert(s).map(|c| ring.constant(c)))
                .collect::<Result<_, _>>()
                .map_err(crate::poly::PolyError::from)?
        }
    };
    let mut numerator = ring.zero();
    let mut denominator = ring.zero();
    for k in 1..=3 {
        let xy = &ring.var(&format!("x{k}"))? * &ring.var(&format!("y{k}"))?;
        numerator = &numerator + &(&lambda[k - 1] * &xy);
        denominator = &denominator + &xy;
    }
    Ok(RationalPotential {
        flag_ideal: IdealBasis::new(&ring, vec![denominator.clone()])?,
        indeterminacy: IdealBasis::new(&ring, vec![numerator.clone(), denominator.clone()])?,
        numerator,
        denominator,
    })
}
