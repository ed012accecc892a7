//! Buchberger's algorithm with the sugar selection strategy and the
//! Gebauer-Moeller pair criteria.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("pair limit of {limit} exceeded ({basis_size} basis elements so far)")]
    PairLimit { limit: usize, basis_size: usize },
    #[error("generators live in different rings")]
    RingMismatch,
}

#[derive(Debug, Clone, Copy)]
pub struct GroebnerConfig {
    pub max_pairs: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 200_000 }
    }
}

/// A reduced Groebner basis: monic, interreduced, sorted by ascending
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    ring: Ring,
    elements: Vec<Polynomial>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GroebnerStats {
    pub pairs_considered: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
}

type Terms = Vec<(Monomial, Scalar)>;

#[derive(Clone)]
struct Elem {
    terms: Terms,
    sugar: u32,
}

impl Elem {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

fn sorted_terms(p: &Polynomial, ord: MonomialOrder) -> Terms {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

fn make_monic(t: &mut Terms) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.inv().expect("nonzero");
            for (_, a) in t.iter_mut() {
                *a = &*a * &inv;
            }
        }
    }
}

/// `a - c * m * b`, all sorted by `ord`.
fn sub_mul(a: &[(Monomial, Scalar)], c: &Scalar, m: &Monomial, b: &[(Monomial, Scalar)], ord: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<(Monomial, Scalar)> = b.first().map(|(t, x)| (t.mul(m), x * c));
    while i < a.len() {
        let Some((bm, bc)) = bj.as_ref() else { break };
        match ord.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.clone(), -bc));
                j += 1;
                bj = b.get(j).map(|(t, x)| (t.mul(m), x * c));
            }
            Ordering::Equal => {
                let v = &a[i].1 - bc;
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|(t, x)| (t.mul(m), x * c));
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    if let Some((bm, bc)) = bj {
        out.push((bm, -&bc));
        out.extend(b[j + 1..].iter().map(|(t, x)| (t.mul(m), -&(x * c))));
    }
    out
}

/// Full reduction of `f` by `basis`; returns the remainder and its sugar.
fn reduce(mut f: Terms, mut sugar: u32, basis: &[&Elem], ord: MonomialOrder) -> (Terms, u32) {
    let mut rem: Terms = Vec::new();
    let mut k = 0;
    // terms before `k` are irreducible and already final
    while k < f.len() {
        let (m, c) = f[k].clone();
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lm());
                let coef = &c * &g.terms[0].1.inv().expect("nonzero");
                sugar = sugar.max(q.degree() + g.sugar);
                let tail = sub_mul(&f[k..], &coef, &q, &g.terms, ord);
                f.truncate(k);
                f.extend(tail);
            }
            None => {
                k += 1;
            }
        }
    }
    rem.extend(f);
    (rem, sugar)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn pair(elems: &[Elem], i: usize, j: usize) -> Pair {
    let lcm = elems[i].lm().lcm(elems[j].lm());
    let si = elems[i].sugar + lcm.degree() - elems[i].lm().degree();
    let sj = elems[j].sugar + lcm.degree() - elems[j].lm().degree();
    Pair {
        i,
        j,
        lcm,
        sugar: si.max(sj),
    }
}

/// Gebauer-Moeller update after adding element `h`.
fn update(elems: &[Elem], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = elems[h].lm().clone();
    let mut c: Vec<Pair> = active.iter().map(|&g| pair(elems, h, g)).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = lh.is_coprime(elems[p.j].lm());
        let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|p| !lh.is_coprime(elems[p.j].lm()))
        .collect();
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(elems[p.i].lm()) != p.lcm
            && lh.lcm(elems[p.j].lm()) != p.lcm)
    });
    pairs.extend(e);
    active.retain(|&g| !lh.divides(elems[g].lm()));
    active.push(h);
}

impl GroebnerBasis {
    /// Computes the reduced Groebner basis of the ideal generated by `gens`.
    pub fn compute(
        ring: &Ring,
        gens: &[Polynomial],
        order: MonomialOrder,
        config: GroebnerConfig,
    ) -> Result<(GroebnerBasis, GroebnerStats), GroebnerError> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(GroebnerError::RingMismatch);
        }
        let mut stats = GroebnerStats::default();
        let mut elems: Vec<Elem> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let mut unit = false;
        let add = |terms: Terms,
                   sugar: u32,
                   elems: &mut Vec<Elem>,
                   active: &mut Vec<usize>,
                   pairs: &mut Vec<Pair>|
         -> bool {
            let mut terms = terms;
            make_monic(&mut terms);
            let is_unit = terms[0].0.is_one();
            elems.push(Elem { terms, sugar });
            let h = elems.len() - 1;
            update(elems, active, pairs, h);
            is_unit
        };

        let mut inputs: Vec<Elem> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| Elem {
                terms: sorted_terms(g, order),
                sugar: g.degree().unwrap_or(0),
            })
            .collect();
        inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        for inp in inputs {
            let basis: Vec<&Elem> = active.iter().map(|&k| &elems[k]).collect();
            let (r, s) = reduce(inp.terms, inp.sugar, &basis, order);
            if !r.is_empty() && add(r, s, &mut elems, &mut active, &mut pairs) {
                unit = true;
                break;
            }
        }

        while !unit && !pairs.is_empty() {
            stats.pairs_considered += 1;
            if stats.pairs_considered > config.max_pairs {
                return Err(GroebnerError::PairLimit {
                    limit: config.max_pairs,
                    basis_size: active.len(),
                });
            }
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    pairs[a]
                        .sugar
                        .cmp(&pairs[b].sugar)
                        .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
                })
                .expect("nonempty");
            let p = pairs.swap_remove(best);
            let (fi, fj) = (&elems[p.i], &elems[p.j]);
            let qi = p.lcm.div(fi.lm());
            let qj = p.lcm.div(fj.lm());
            let si: Terms = fi.terms[1..]
                .iter()
                .map(|(m, c)| (m.mul(&qi), c.clone()))
                .collect();
            let one = ring.field().one();
            let s = sub_mul(&si, &one, &qj, &fj.terms[1..], order);
            stats.pairs_reduced += 1;
            let basis: Vec<&Elem> = active.iter().map(|&k| &elems[k]).collect();
            let (r, sugar) = reduce(s, p.sugar, &basis, order);
            if r.is_empty() {
                stats.zero_reductions += 1;
                continue;
            }
            if add(r, sugar, &mut elems, &mut active, &mut pairs) {
                unit = true;
            }
        }

        let elements = if unit {
            vec![ring.one()]
        } else {
            interreduce(ring, active.iter().map(|&k| elems[k].clone()).collect(), order)
        };
        Ok((
            GroebnerBasis {
                order,
                ring: ring.clone(),
                elements,
            },
            stats,
        ))
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    /// Leading monomial of `p` under this basis' order.
    pub fn leading_monomial(&self, p: &Polynomial) -> Option<Monomial> {
        p.terms()
            .iter()
            .map(|(m, _)| m)
            .max_by(|a, b| self.order.cmp(a, b))
            .cloned()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| self.leading_monomial(g).expect("nonzero"))
            .collect()
    }

    /// Remainder of `p` on division by the basis; no remaining term is
    /// divisible by a leading monomial.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert!(p.ring() == &self.ring, "polynomial ring differs from basis ring");
        let elems: Vec<Elem> = self
            .elements
            .iter()
            .map(|g| Elem {
                terms: sorted_terms(g, self.order),
                sugar: 0,
            })
            .collect();
        let basis: Vec<&Elem> = elems.iter().collect();
        let (r, _) = reduce(sorted_terms(p, self.order), 0, &basis, self.order);
        Polynomial::from_terms(&self.ring, r)
    }

    /// True when every monomial in `m`'s divisibility class is standard.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.leading_monomials().iter().all(|l| !l.divides(m))
    }
}

fn interreduce(ring: &Ring, mut elems: Vec<Elem>, order: MonomialOrder) -> Vec<Polynomial> {
    elems.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Elem> = Vec::new();
    for e in elems {
        if !minimal.iter().any(|g| g.lm().divides(e.lm())) {
            minimal.retain(|g| !e.lm().divides(g.lm()));
            minimal.push(e);
        }
    }
    let mut out: Vec<Elem> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Elem> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, e)| e)
            .collect();
        let head = minimal[k].terms[0].clone();
        let (tail, _) = reduce(minimal[k].terms[1..].to_vec(), 0, &others, order);
        let mut terms = vec![head];
        terms.extend(tail);
        make_monic(&mut terms);
        out.push(Elem { terms, sugar: 0 });
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    out.into_iter()
        .map(|e| Polynomial::from_terms(ring, e.terms))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn gb(ring: &Ring, src: &[&str], ord: MonomialOrder) -> GroebnerBasis {
        let gens: Vec<_> = src.iter().map(|s| ring.parse(s).unwrap()).collect();
        GroebnerBasis::compute(ring, &gens, ord, GroebnerConfig::default())
            .unwrap()
            .0
    }

    fn strs(g: &GroebnerBasis) -> Vec<String> {
        g.elements().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::new(&["x"], Field::Rational).unwrap();
        let g = gb(&r, &["x - 1", "x"], MonomialOrder::Grevlex);
        assert_eq!(strs(&g), ["1"]);
        assert!(g.is_unit());
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = Ring::new(&["x", "y", "w"], Field::Rational).unwrap();
        let g = gb(&r, &["y^2 - x*w"], MonomialOrder::Grevlex);
        assert_eq!(strs(&g), ["y^2 - x*w"]);
    }

    #[test]
    fn divisible_generator_is_dropped() {
        let r = Ring::new(&["z1", "z2", "z3", "z4"], Field::Rational).unwrap();
        let g = gb(&r, &["z1*z2*z3*z4", "z1"], MonomialOrder::Grevlex);
        assert_eq!(strs(&g), ["z1"]);
    }

    #[test]
    fn twisted_cubic_lex() {
        let r = Ring::new(&["x", "y", "z"], Field::Rational).unwrap();
        let g = gb(&r, &["x^2 - y", "x^3 - z"], MonomialOrder::Lex);
        for p in g.elements() {
            assert!(p.leading().is_some());
        }
        // z - x*y and y^2 - x*z and x^2 - y are in the ideal
        let zxy = r.parse("x*y - z").unwrap();
        assert!(g.normal_form(&zxy).is_zero());
        let last = g.elements()[0].clone();
        assert_eq!(last.to_string(), "y^3 - z^2");
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::new(&["x1", "x2", "x3", "x4", "y1", "t1", "t2"], Field::Rational).unwrap();
        let g = gb(&r, &["y1", "x3", "x4"], MonomialOrder::Grevlex);
        assert!(g.normal_form(&r.parse("y1 + t2*x3").unwrap()).is_zero());
        let x2 = r.parse("x2").unwrap();
        assert_eq!(g.normal_form(&x2), x2);
    }

    #[test]
    fn pair_limit_is_reported() {
        let r = Ring::new(&["x", "y", "z"], Field::Rational).unwrap();
        let gens: Vec<_> = ["x^3 - y*z", "y^3 - x*z", "z^3 - x*y"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let err = GroebnerBasis::compute(&r, &gens, MonomialOrder::Lex, GroebnerConfig { max_pairs: 1 });
        assert!(matches!(err, Err(GroebnerError::PairLimit { .. })));
    }
}
