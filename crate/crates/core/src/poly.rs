//! Sparse multivariate polynomials.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::scalar::{Field, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` already occurs in the polynomial")]
    VariableOccurs(String),
    #[error("no value assigned to `{0}`")]
    MissingAssignment(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A polynomial over `ring`. Terms are stored in descending grevlex order
/// with no zero coefficients, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Polynomial {
        Polynomial::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Scalar) -> Polynomial {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        assert_eq!(c.field(), ring.field(), "coefficient field mismatch");
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &Ring, idx: usize) -> Polynomial {
        Polynomial::monomial(
            ring,
            Monomial::var(ring.nvars(), idx, 1),
            ring.field().one(),
        )
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already sorted descending with no zeros or repeats.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree counted only in the variables at `idxs`.
    pub fn degree_in(&self, idxs: &[usize]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| idxs.iter().map(|&i| m.exp(i)).sum())
            .max()
    }

    /// Leading term in grevlex.
    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.ring.field().zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    pub fn is_homogeneous(&self) -> bool {
        let all: Vec<usize> = (0..self.ring.nvars()).collect();
        self.is_homogeneous_in(&all)
    }

    pub fn is_homogeneous_in(&self, idxs: &[usize]) -> bool {
        let mut degs = self
            .terms
            .iter()
            .map(|(m, _)| idxs.iter().map(|&i| m.exp(i)).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Indices of variables that occur.
    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .collect()
    }

    pub fn occurs(&self, name: &str) -> bool {
        match self.ring.index_of(name) {
            Some(i) => self.terms.iter().any(|(m, _)| m.exp(i) > 0),
            None => false,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        )
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(self.ring == other.ring, "polynomials live in different rings");
    }

    pub fn partial_derivative(&self, name: &str) -> Result<Polynomial, PolyError> {
        let idx = self
            .ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.derivative_at(idx))
    }

    pub(crate) fn derivative_at(&self, idx: usize) -> Polynomial {
        let field = self.ring.field();
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.exp(idx) > 0).map(|(m, c)| {
                let e = m.exp(idx);
                let mut ex = m.exps().to_vec();
                ex[idx] -= 1;
                (Monomial::from_exps(ex), c * &field.from_i64(e as i64))
            }),
        )
    }

    /// Ring homomorphism fixing unassigned variables. Assigned values must
    /// live in the same ring.
    pub fn substitute(&self, assignment: &[(&str, Polynomial)]) -> Result<Polynomial, PolyError> {
        self.substitute_into(&self.ring, assignment)
    }

    /// Ring homomorphism into `target`. Unassigned variables are sent to
    /// the variable of the same name in `target`.
    pub fn substitute_into(
        &self,
        target: &Ring,
        assignment: &[(&str, Polynomial)],
    ) -> Result<Polynomial, PolyError> {
        let mut images: Vec<Option<Polynomial>> = vec![None; self.ring.nvars()];
        for (name, value) in assignment {
            let idx = self
                .ring
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            if value.ring != *target {
                return Err(PolyError::RingMismatch);
            }
            images[idx] = Some(value.clone());
        }
        for idx in self.variables_used() {
            if images[idx].is_none() {
                let name = &self.ring.names()[idx];
                let v = target
                    .var(name)
                    .map_err(|_| PolyError::UnknownVariable(name.clone()))?;
                images[idx] = Some(v);
            }
        }
        if self.ring.field() != target.field() {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.ring.nvars()];
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for idx in m.support() {
                let e = m.exp(idx) as usize;
                let img = images[idx].as_ref().expect("image assigned");
                let cache = &mut powers[idx];
                if cache.is_empty() {
                    cache.push(target.one());
                }
                while cache.len() <= e {
                    let next = cache.last().unwrap() * img;
                    cache.push(next);
                }
                t = &t * &cache[e];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `den^k * P(.., num/den, ..)` where `k` is the degree of `P` in `name`.
    pub fn substitute_fraction(
        &self,
        name: &str,
        num: &Polynomial,
        den: &Polynomial,
    ) -> Result<Polynomial, PolyError> {
        let idx = self
            .ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        if num.ring != self.ring || den.ring != self.ring {
            return Err(PolyError::RingMismatch);
        }
        let k = self.degree_in(&[idx]).unwrap_or(0);
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exp(idx);
            let mut ex = m.exps().to_vec();
            ex[idx] = 0;
            let rest = Polynomial::monomial(&self.ring, Monomial::from_exps(ex), c.clone());
            out = &out + &(&(&rest * &num.pow(e)) * &den.pow(k - e));
        }
        Ok(out)
    }

    /// Homogenizes with respect to all variables using `name`, appending it
    /// to the ring when it is not registered yet.
    pub fn homogenize(&self, name: &str) -> Result<Polynomial, PolyError> {
        let over: Vec<String> = self.ring.names().to_vec();
        let over: Vec<&str> = over.iter().map(String::as_str).collect();
        self.homogenize_in(name, &over)
    }

    /// Homogenizes so that the degree in `over` (plus the new variable) is
    /// constant, padding with powers of `name`.
    pub fn homogenize_in(&self, name: &str, over: &[&str]) -> Result<Polynomial, PolyError> {
        if self.occurs(name) {
            return Err(PolyError::VariableOccurs(name.to_string()));
        }
        let ring = if self.ring.index_of(name).is_some() {
            self.ring.clone()
        } else {
            self.ring
                .extend(&[name])
                .map_err(|_| PolyError::UnknownVariable(name.to_string()))?
        };
        let mut idxs = Vec::new();
        for v in over {
            if *v == name {
                continue;
            }
            idxs.push(
                self.ring
                    .index_of(v)
                    .ok_or_else(|| PolyError::UnknownVariable(v.to_string()))?,
            );
        }
        let h = ring.index_of(name).expect("registered");
        let top = self.degree_in(&idxs).unwrap_or(0);
        Ok(Polynomial::from_terms(
            &ring,
            self.terms.iter().map(|(m, c)| {
                let d: u32 = idxs.iter().map(|&i| m.exp(i)).sum();
                let mut ex = m.exps().to_vec();
                ex.resize(ring.nvars(), 0);
                ex[h] += top - d;
                (Monomial::from_exps(ex), c.clone())
            }),
        ))
    }

    /// Evaluates at a named point.
    pub fn evaluate(&self, point: &HashMap<String, Scalar>) -> Result<Scalar, PolyError> {
        let mut values = Vec::with_capacity(self.ring.nvars());
        let used = self.variables_used();
        for (i, name) in self.ring.names().iter().enumerate() {
            match point.get(name) {
                Some(v) => values.push(self.ring.field().convert(v)?),
                None if used.contains(&i) => {
                    return Err(PolyError::MissingAssignment(name.clone()))
                }
                None => values.push(self.ring.field().zero()),
            }
        }
        Ok(self.evaluate_at(&values))
    }

    /// Evaluates at values given in registry order.
    pub fn evaluate_at(&self, values: &[Scalar]) -> Scalar {
        assert_eq!(values.len(), self.ring.nvars(), "point dimension mismatch");
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for idx in m.support() {
                t = &t * &values[idx].pow(m.exp(idx));
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        if self.ring == *target {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() {
            return Err(PolyError::RingMismatch);
        }
        let mut map = vec![usize::MAX; self.ring.nvars()];
        for idx in self.variables_used() {
            let name = &self.ring.names()[idx];
            map[idx] = target
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
        }
        Ok(Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut ex = vec![0u32; target.nvars()];
                for idx in m.support() {
                    ex[map[idx]] = m.exp(idx);
                }
                (Monomial::from_exps(ex), c.clone())
            }),
        ))
    }

    /// The same polynomial in a ring whose variables are renamed by `pairs`;
    /// positions, and hence term order, are unchanged.
    pub fn rename(&self, pairs: &[(&str, &str)]) -> Result<Polynomial, PolyError> {
        let mut names = self.ring.names().to_vec();
        for (from, to) in pairs {
            let idx = self
                .ring
                .index_of(from)
                .ok_or_else(|| PolyError::UnknownVariable(from.to_string()))?;
            names[idx] = to.to_string();
        }
        let ring = Ring::new(&names, self.ring.field())
            .map_err(|e| PolyError::UnknownVariable(e.to_string()))?;
        Ok(Polynomial::from_sorted(&ring, self.terms.clone()))
    }

    /// Maps the coefficients into another field over the same variables.
    pub fn to_field(&self, field: Field) -> Result<Polynomial, PolyError> {
        let ring = self.ring.with_field(field);
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), field.convert(c)?));
        }
        Ok(Polynomial::from_terms(&ring, terms))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        self.check_ring(d);
        let (lm, lc) = d.leading()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            let q = m.checked_div(lm)?;
            let qc = &c * &lc_inv;
            rem = &rem - &d.mul_monomial(&q, &qc);
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Groups terms by their exponents in `vars`; returns pairs of exponent
    /// vectors (over `vars`) and coefficient polynomials free of `vars`.
    pub fn collect(&self, vars: &[&str]) -> Result<Vec<(Vec<u32>, Polynomial)>, PolyError> {
        let idxs = vars
            .iter()
            .map(|v| {
                self.ring
                    .index_of(v)
                    .ok_or_else(|| PolyError::UnknownVariable(v.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut groups: Vec<(Vec<u32>, Vec<(Monomial, Scalar)>)> = Vec::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = idxs.iter().map(|&i| m.exp(i)).collect();
            let mut ex = m.exps().to_vec();
            for &i in &idxs {
                ex[i] = 0;
            }
            let entry = (Monomial::from_exps(ex), c.clone());
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, ts)) => ts.push(entry),
                None => groups.push((key, vec![entry])),
            }
        }
        Ok(groups
            .into_iter()
            .map(|(k, ts)| (k, Polynomial::from_terms(&self.ring, ts)))
            .collect())
    }

    /// Coefficient of `x^e` for the given exponents in `vars`.
    pub fn coefficient_in(&self, vars: &[&str], exps: &[u32]) -> Result<Polynomial, PolyError> {
        Ok(self
            .collect(vars)?
            .into_iter()
            .find(|(k, _)| k.as_slice() == exps)
            .map(|(_, p)| p)
            .unwrap_or_else(|| self.ring.zero()))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        self.check_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| {
            let c = if negate { -c } else { c.clone() };
            (m.clone(), c)
        }));
        Polynomial::from_sorted(&self.ring, out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().flat_map(|(ma, ca)| {
                rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))
            }),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        )
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, names: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(&names[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, names, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names, Field::Rational).unwrap()
    }

    #[test]
    fn display_is_canonical() {
        let r = ring(&["x", "y", "z"]);
        let p = r.parse("1 - 3*y + x*y^2 - z^2 + x^2").unwrap();
        assert_eq!(p.to_string(), "x*y^2 + x^2 - z^2 - 3*y + 1");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!((-&r.var("x").unwrap()).to_string(), "-x");
    }

    #[test]
    fn rational_coefficients_print_as_fractions() {
        let r = ring(&["x"]);
        let half = Field::Rational.parse_scalar("3/2").unwrap();
        assert_eq!(r.var("x").unwrap().scale(&half).to_string(), "3/2*x");
    }

    #[test]
    fn power_rule() {
        let r = ring(&["y1"]);
        let p = r.parse("y1^2").unwrap();
        assert_eq!(p.partial_derivative("y1").unwrap(), r.parse("2*y1").unwrap());
        assert!(matches!(
            p.partial_derivative("q"),
            Err(PolyError::UnknownVariable(_))
        ));
    }

    #[test]
    fn lift_kills_module_relation() {
        let r = ring(&["x", "y", "b0", "b1", "u", "z"]);
        let p = r.parse("b0*y - b1*x").unwrap();
        let u = r.var("u").unwrap();
        let z = r.var("z").unwrap();
        let img = p
            .substitute(&[
                ("x", u.clone()),
                ("y", &z * &u),
                ("b0", u.pow(2)),
                ("b1", &z * &u.pow(2)),
            ])
            .unwrap();
        assert!(img.is_zero());
    }

    #[test]
    fn homogenize_pads_to_top_degree() {
        let r = ring(&["y1", "z1", "z2"]);
        let p = r.parse("y1 + z1*z2").unwrap();
        let h = p.homogenize("y2").unwrap();
        assert_eq!(h.ring().names().last().unwrap(), "y2");
        assert_eq!(h, h.ring().parse("y1*y2 + z1*z2").unwrap());
        assert!(h.is_homogeneous());
        let five = r.from_i64(5).homogenize("h").unwrap();
        assert_eq!(five.to_string(), "5");
        assert!(matches!(
            p.homogenize("y1"),
            Err(PolyError::VariableOccurs(_))
        ));
    }

    #[test]
    fn dehomogenizing_recovers_input() {
        let r = ring(&["a", "b"]);
        let p = r.parse("a^3 - a*b + 7").unwrap();
        let h = p.homogenize("h").unwrap();
        let back = h
            .substitute(&[("h", h.ring().one())])
            .unwrap()
            .embed(&r)
            .unwrap();
        assert_eq!(back, p);
        assert_eq!(h.degree(), p.degree());
    }

    #[test]
    fn evaluation_needs_every_used_variable() {
        let r = ring(&["x", "y"]);
        let p = r.parse("x*y + 2").unwrap();
        let mut pt = HashMap::new();
        pt.insert("x".to_string(), Field::Rational.from_i64(3));
        assert!(matches!(
            p.evaluate(&pt),
            Err(PolyError::MissingAssignment(_))
        ));
        pt.insert("y".to_string(), Field::Rational.from_i64(-1));
        assert_eq!(p.evaluate(&pt).unwrap(), Field::Rational.from_i64(-1));
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let a = r.parse("x^2 - y^2").unwrap();
        let b = r.parse("x - y").unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), r.parse("x + y").unwrap());
        assert!(a.div_exact(&r.parse("x + 2*y").unwrap()).is_none());
    }

    #[test]
    fn fraction_substitution_clears_denominator() {
        let r = ring(&["s", "t"]);
        let p = r.parse("s^2 + s + 1").unwrap();
        let out = p
            .substitute_fraction("s", &r.from_i64(1), &r.var("t").unwrap())
            .unwrap();
        assert_eq!(out, r.parse("1 + t + t^2").unwrap());
    }

    #[test]
    fn collect_by_variables() {
        let r = ring(&["a", "x", "y"]);
        let p = r.parse("a*x*y + 2*x*y - a^2").unwrap();
        let c = p.coefficient_in(&["x", "y"], &[1, 1]).unwrap();
        assert_eq!(c, r.parse("a + 2").unwrap());
    }
}
