//! Ideals: membership, quotients, intersections, elimination, Jacobians.

use serde::Serialize;
use thiserror::Error;

use crate::groebner::{GroebnerBasis, GroebnerConfig, GroebnerError};
use crate::order::MonomialOrder;
use crate::poly::{PolyError, Polynomial};
use crate::ring::{Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("no Groebner basis has been computed for this ideal")]
    MissingGroebner,
    #[error("ideal quotient by the zero polynomial")]
    ZeroDivisor,
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A generating set, optionally with a cached reduced Groebner basis.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    groebner: Option<GroebnerBasis>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub generators: Vec<String>,
    pub order: Option<String>,
    pub verified: bool,
}

impl IdealBasis {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<IdealBasis, IdealError> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(IdealError::RingMismatch);
        }
        Ok(IdealBasis {
            ring: ring.clone(),
            generators,
            groebner: None,
        })
    }

    /// Parses each source as a generator.
    pub fn parse(ring: &Ring, srcs: &[&str]) -> Result<IdealBasis, crate::parse::ParseError> {
        let gens = srcs
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IdealBasis {
            ring: ring.clone(),
            generators: gens,
            groebner: None,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self) -> Option<&GroebnerBasis> {
        self.groebner.as_ref()
    }

    /// Computes and caches a reduced Groebner basis.
    pub fn with_groebner(mut self, order: MonomialOrder) -> Result<IdealBasis, IdealError> {
        if self.groebner.as_ref().map(|g| g.order()) != Some(order) {
            self.groebner = Some(groebner_basis(&self.ring, &self.generators, order)?);
        }
        Ok(self)
    }

    /// Grevlex basis, computed if absent.
    pub fn ensure_groebner(self) -> Result<IdealBasis, IdealError> {
        if self.groebner.is_some() {
            Ok(self)
        } else {
            self.with_groebner(MonomialOrder::Grevlex)
        }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, IdealError> {
        let g = self.groebner.as_ref().ok_or(IdealError::MissingGroebner)?;
        if p.ring() != &self.ring {
            return Err(IdealError::RingMismatch);
        }
        Ok(g.normal_form(p))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, IdealError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// Mutual membership of generators.
    pub fn same_ideal(&self, other: &IdealBasis) -> Result<bool, IdealError> {
        let a = self.clone().ensure_groebner()?;
        let b = other.clone().ensure_groebner()?;
        for g in &other.generators {
            if !a.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !b.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn report(&self, verified: bool) -> IdealReport {
        let shown = match &self.groebner {
            Some(g) => g.elements(),
            None => &self.generators,
        };
        IdealReport {
            generators: shown.iter().map(|p| p.to_string()).collect(),
            order: self.groebner.as_ref().map(|g| g.order().to_string()),
            verified,
        }
    }

    /// One generator per line in canonical print order.
    pub fn to_text(&self) -> String {
        let shown = match &self.groebner {
            Some(g) => g.elements(),
            None => &self.generators,
        };
        shown
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub fn groebner_basis(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis, IdealError> {
    Ok(GroebnerBasis::compute(ring, gens, order, GroebnerConfig::default())?.0)
}

/// Eliminates the named variables: generators of `I ∩ k[other vars]`,
/// expressed in the original ring.
pub fn eliminate(ideal: &IdealBasis, vars: &[&str]) -> Result<IdealBasis, IdealError> {
    let ring = ideal.ring();
    let first: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let work = ring.reordered(&first)?;
    let gens = ideal
        .generators
        .iter()
        .map(|g| g.embed(&work))
        .collect::<Result<Vec<_>, _>>()?;
    let k = vars.len();
    let gb = groebner_basis(&work, &gens, MonomialOrder::Elimination(k))?;
    let kept = gb
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)))
        .map(|p| p.embed(ring))
        .collect::<Result<Vec<_>, _>>()?;
    IdealBasis::new(ring, kept)
}

/// `I ∩ J` via an auxiliary variable `t`: eliminate `t` from `tI + (1-t)J`.
pub fn ideal_intersection(a: &IdealBasis, b: &IdealBasis) -> Result<IdealBasis, IdealError> {
    if a.ring() != b.ring() {
        return Err(IdealError::RingMismatch);
    }
    let ring = a.ring();
    let t = ring.fresh_name("t");
    let mut names = vec![t.clone()];
    names.extend(ring.names().iter().cloned());
    let work = Ring::new(&names, ring.field())?;
    let tv = work.var(&t)?;
    let one_minus_t = &work.one() - &tv;
    let mut gens = Vec::new();
    for g in &a.generators {
        gens.push(&tv * &g.embed(&work)?);
    }
    for g in &b.generators {
        gens.push(&one_minus_t * &g.embed(&work)?);
    }
    let gb = groebner_basis(&work, &gens, MonomialOrder::Elimination(1))?;
    let kept = gb
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|p| p.embed(ring))
        .collect::<Result<Vec<_>, _>>()?;
    IdealBasis::new(ring, kept)
}

/// `(I : f) = (I ∩ (f)) / f`.
pub fn ideal_quotient(ideal: &IdealBasis, f: &Polynomial) -> Result<IdealBasis, IdealError> {
    if f.is_zero() {
        return Err(IdealError::ZeroDivisor);
    }
    let ring = ideal.ring();
    if f.ring() != ring {
        return Err(IdealError::RingMismatch);
    }
    let principal = IdealBasis::new(ring, vec![f.clone()])?;
    let meet = ideal_intersection(ideal, &principal)?;
    let gens = meet
        .generators
        .iter()
        .map(|g| g.div_exact(f).expect("intersection lies in (f)"))
        .collect();
    IdealBasis::new(ring, gens)
}

/// The sequence `P, dP/dv1, ..., dP/dvk`.
pub fn jacobian_ideal(p: &Polynomial, vars: &[&str]) -> Result<IdealBasis, IdealError> {
    let mut gens = vec![p.clone()];
    for v in vars {
        gens.push(p.partial_derivative(v)?);
    }
    IdealBasis::new(p.ring(), gens)
}

/// True iff every polynomial reduces to zero modulo `comp`.
pub fn vanishes_on_component(polys: &[Polynomial], comp: &IdealBasis) -> Result<bool, IdealError> {
    for q in polys {
        if !comp.normal_form(q)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
