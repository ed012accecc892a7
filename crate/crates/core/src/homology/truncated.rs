//! Homology of a graded complex, degree by degree, by linear algebra on
//! standard-monomial bases.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{ChainComplex, Direction, HomologyError, ModuleSpec, QuotientRingSpec};
use crate::linalg::{rank, Echelon, SparseVec};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedHomology {
    pub position: usize,
    /// Inclusive range of internal degrees examined.
    pub window: (i64, i64),
    pub by_degree: Vec<(i64, usize)>,
    pub total: usize,
}

/// Degree-`s` slice of a graded free module: pairs of a generator index and
/// a standard monomial of complementary degree.
struct Slice {
    elems: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl Slice {
    fn new(q: &QuotientRingSpec, module: &ModuleSpec, s: i64) -> Slice {
        let mut elems = Vec::new();
        for (a, &d) in module.degrees.iter().enumerate() {
            if s >= d {
                for m in q.standard_monomials((s - d) as u32) {
                    elems.push((a, m));
                }
            }
        }
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Slice { elems, index }
    }

    fn dim(&self) -> usize {
        self.elems.len()
    }

    /// Coordinates of `p * e_a` in this slice.
    fn coords(&self, a: usize, p: &Polynomial, field: Field) -> Result<SparseVec, HomologyError> {
        let mut v: SparseVec = Vec::new();
        for (m, c) in p.terms() {
            let idx = *self
                .index
                .get(&(a, m.clone()))
                .expect("reduced term of the right degree lies in the slice");
            let c = field.convert(c)?;
            if !c.is_zero() {
                v.push((idx, c));
            }
        }
        v.sort_by_key(|e| e.0);
        Ok(v)
    }
}

/// Basis of the degree-`s` part of the module's (sub)module, in slice
/// coordinates.
fn sub_basis(
    q: &QuotientRingSpec,
    module: &ModuleSpec,
    slice: &Slice,
    s: i64,
    field: Field,
) -> Result<Vec<SparseVec>, HomologyError> {
    let Some(ideal) = &module.submodule else {
        return Ok((0..slice.dim()).map(|i| vec![(i, field.one())]).collect());
    };
    let ring = q.ring();
    let mut ech = Echelon::new();
    for (a, &d) in module.degrees.iter().enumerate() {
        for g in ideal.generators() {
            let g = g.embed(ring)?;
            let Some(gd) = g.degree() else { continue };
            let rest = s - d - gd as i64;
            if rest < 0 {
                continue;
            }
            for m in Monomial::all_of_degree(ring.nvars(), rest as u32) {
                let prod = q.reduce(&g.mul_monomial(&m, &ring.field().one()));
                ech.insert(slice.coords(a, &prod, field)?);
            }
        }
    }
    Ok(ech.into_rows())
}

/// Images of the given source vectors under map `k`.
fn apply(
    c: &ChainComplex,
    k: usize,
    src: &Slice,
    tgt: &Slice,
    vectors: &[SparseVec],
    field: Field,
) -> Result<Vec<SparseVec>, HomologyError> {
    let q = c.quotient();
    let map = &c.maps()[k];
    let one = q.ring().field().one();
    let mut cache: HashMap<usize, SparseVec> = HashMap::new();
    let mut out = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, coef) in v {
            if !cache.contains_key(i) {
                let (a, m) = &src.elems[*i];
                let mut img: BTreeMap<usize, Scalar> = BTreeMap::new();
                for b in 0..map.rows() {
                    let e = map.entry(b, *a);
                    if e.is_zero() {
                        continue;
                    }
                    let prod = q.reduce(&e.mul_monomial(m, &one));
                    for (idx, x) in tgt.coords(b, &prod, field)? {
                        let cur = img.entry(idx).or_insert_with(|| field.zero());
                        *cur = &*cur + &x;
                    }
                }
                cache.insert(*i, img.into_iter().filter(|(_, x)| !x.is_zero()).collect());
            }
            for (idx, x) in &cache[i] {
                let cur = acc.entry(*idx).or_insert_with(|| field.zero());
                *cur = &*cur + &(coef * x);
            }
        }
        out.push(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
    }
    Ok(out)
}

/// Homology at `position` in each internal degree `s` where every module
/// involved is computed to polynomial degree at most `bound`.
pub fn truncated_homology(
    c: &ChainComplex,
    position: usize,
    bound: u32,
    field: Field,
) -> Result<TruncatedHomology, HomologyError> {
    let nmod = c.modules().len();
    if position >= nmod {
        return Err(HomologyError::PositionOutOfRange {
            position,
            modules: nmod,
        });
    }
    if !c.is_graded() {
        return Err(HomologyError::NotGraded);
    }
    let (outgoing, incoming) = match c.direction() {
        Direction::Chain => (
            position.checked_sub(1),
            (position < c.maps().len()).then_some(position),
        ),
        Direction::Cochain => (
            (position < c.maps().len()).then_some(position),
            position.checked_sub(1),
        ),
    };
    let mut involved = vec![position];
    if let Some(k) = outgoing {
        involved.push(c.endpoints(k).1);
    }
    if let Some(k) = incoming {
        involved.push(c.endpoints(k).0);
    }
    let min_twist = |i: usize| c.modules()[i].degrees.iter().copied().min();
    let Some(lo) = min_twist(position) else {
        return Ok(TruncatedHomology {
            position,
            window: (0, -1),
            by_degree: vec![],
            total: 0,
        });
    };
    let hi = bound as i64 + involved.iter().filter_map(|&i| min_twist(i)).min().unwrap_or(lo);
    if hi < lo {
        return Err(HomologyError::WindowEmpty { lo, hi });
    }
    let q = c.quotient();
    let mut by_degree = Vec::new();
    for s in lo..=hi {
        let here = Slice::new(q, &c.modules()[position], s);
        let basis = sub_basis(q, &c.modules()[position], &here, s, field)?;
        let mut h = basis.len() as i64;
        if let Some(k) = outgoing {
            let t = c.endpoints(k).1;
            let tgt = Slice::new(q, &c.modules()[t], s);
            h -= rank(apply(c, k, &here, &tgt, &basis, field)?) as i64;
        }
        if let Some(k) = incoming {
            let sidx = c.endpoints(k).0;
            let src = Slice::new(q, &c.modules()[sidx], s);
            let sb = sub_basis(q, &c.modules()[sidx], &src, s, field)?;
            h -= rank(apply(c, k, &src, &here, &sb, field)?) as i64;
        }
        if h < 0 {
            let (position, next) = match incoming {
                Some(k) => (k, outgoing.unwrap_or(k)),
                None => (position, position),
            };
            return Err(HomologyError::NotAComplex { position, next });
        }
        by_degree.push((s, h as usize));
    }
    let total = by_degree.iter().map(|e| e.1).sum();
    Ok(TruncatedHomology {
        position,
        window: (lo, hi),
        by_degree,
        total,
    })
}
