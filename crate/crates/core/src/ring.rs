//! Variable registries and polynomial rings.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable `{0}` registered twice")]
    Duplicate(String),
    #[error("`{0}` is not a valid variable name")]
    InvalidName(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

/// Ordered, duplicate-free list of variable names. Position fixes monomial
/// comparison: the first name is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableRegistry {
    names: Vec<String>,
}

impl VariableRegistry {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, RingError> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(RingError::InvalidName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(RingError::Duplicate(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(VariableRegistry { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// A new registry with `extra` appended.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Self, RingError> {
        let mut all: Vec<&str> = self.names.iter().map(String::as_str).collect();
        all.extend(extra.iter().map(AsRef::as_ref));
        VariableRegistry::new(&all)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug)]
struct RingInner {
    vars: VariableRegistry,
    field: Field,
}

/// Polynomial ring `field[vars]`. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], field: Field) -> Result<Ring, RingError> {
        Ok(Ring::from_registry(VariableRegistry::new(names)?, field))
    }

    pub fn from_registry(vars: VariableRegistry, field: Field) -> Ring {
        Ring(Arc::new(RingInner { vars, field }))
    }

    pub fn vars(&self) -> &VariableRegistry {
        &self.0.vars
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn names(&self) -> &[String] {
        self.0.vars.names()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.vars.index_of(name)
    }

    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring, RingError> {
        Ok(Ring::from_registry(self.0.vars.extend(extra)?, self.field()))
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Ring::from_registry(self.0.vars.clone(), field)
    }

    /// Same variables, with `first` moved to the front in the given order.
    pub(crate) fn reordered(&self, first: &[String]) -> Result<Ring, RingError> {
        for f in first {
            if !self.0.vars.contains(f) {
                return Err(RingError::UnknownVariable(f.clone()));
            }
        }
        let mut names: Vec<String> = first.to_vec();
        names.extend(self.names().iter().filter(|n| !first.contains(n)).cloned());
        Ring::new(&names, self.field())
    }

    /// A variable name not yet present, derived from `stem`.
    pub(crate) fn fresh_name(&self, stem: &str) -> String {
        if !self.0.vars.contains(stem) {
            return stem.to_string();
        }
        (0..)
            .map(|k| format!("{stem}{k}"))
            .find(|n| !self.0.vars.contains(n))
            .expect("infinitely many candidates")
    }

    pub fn var(&self, name: &str) -> Result<Polynomial, RingError> {
        let idx = self
            .index_of(name)
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::variable(self, idx))
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        Polynomial::constant(self, c)
    }

    pub fn from_i64(&self, c: i64) -> Polynomial {
        Polynomial::constant(self, self.field().from_i64(c))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        self.from_i64(1)
    }

    /// Parses a polynomial in this ring.
    pub fn parse(&self, src: &str) -> Result<Polynomial, crate::parse::ParseError> {
        crate::parse::parse_poly(src, self)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.names().join(","))
    }
}
