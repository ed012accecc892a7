//! Complexes of graded free modules over quotient rings.

pub mod ext;
pub mod resolutions;
pub mod truncated;

use std::fmt::Write as _;

use thiserror::Error;

use crate::ideal::{IdealBasis, IdealError};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{PolyError, Polynomial};
use crate::ring::Ring;
use crate::scalar::ScalarError;

pub use ext::{ext_groups, hom_complex, kernel_of_monomial_mult, kernel_of_monomial_mult_in, ClosedForm, ExtDescriptor};
pub use resolutions::{
    build_odp_resolution, build_periodic_resolution, complement_product, matrix_factorization_check,
    monomial_hypersurface, odp_matrix, odp_quotient, two_periodic_complex,
};
pub use truncated::{truncated_homology, TruncatedHomology};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("rank mismatch at map {position}: {detail}")]
    RankMismatch { position: usize, detail: String },
    #[error("map {position} is not homogeneous of degree 0: {detail}")]
    DegreeMismatch { position: usize, detail: String },
    #[error("complex carries no grading")]
    NotGraded,
    #[error("degree window is empty (lowest {lo}, highest {hi}); raise the degree bound")]
    WindowEmpty { lo: i64, hi: i64 },
    #[error("maps {position} and {next} do not compose to zero")]
    NotAComplex { position: usize, next: usize },
    #[error("position {position} outside a complex with {modules} modules")]
    PositionOutOfRange { position: usize, modules: usize },
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indices must differ (got {0} twice)")]
    EqualIndices(usize),
    #[error("length {0} is too short (need at least 2)")]
    LengthTooShort(usize),
    #[error("need at least {min} variables, got {n}")]
    TooFewVariables { n: usize, min: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `ring / relations`, with a grevlex basis of the relations cached.
#[derive(Debug, Clone)]
pub struct QuotientRingSpec {
    ring: Ring,
    relations: IdealBasis,
}

impl QuotientRingSpec {
    pub fn new(ring: &Ring, relations: Vec<Polynomial>) -> Result<Self, HomologyError> {
        let relations = IdealBasis::new(ring, relations)?.with_groebner(MonomialOrder::Grevlex)?;
        Ok(QuotientRingSpec {
            ring: ring.clone(),
            relations,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn relations(&self) -> &IdealBasis {
        &self.relations
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.relations
            .groebner()
            .expect("cached on construction")
            .normal_form(p)
    }

    /// Monomials of degree `d` that are not leading monomials of relations.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let lms = self
            .relations
            .groebner()
            .expect("cached on construction")
            .leading_monomials();
        Monomial::all_of_degree(self.ring.nvars(), d)
            .into_iter()
            .filter(|m| lms.iter().all(|l| !l.divides(m)))
            .collect()
    }
}

/// A matrix of ring elements between graded free modules, row-major,
/// entries reduced modulo the relations.
#[derive(Debug, Clone)]
pub struct FreeModuleMap {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    source_degrees: Vec<i64>,
    target_degrees: Vec<i64>,
    graded: bool,
}

impl FreeModuleMap {
    /// A degree-0 map `S^cols -> S^rows`; entry `(b, a)` must be homogeneous
    /// with `deg + target[b] = source[a]`.
    pub fn new(
        quotient: &QuotientRingSpec,
        matrix: Vec<Vec<Polynomial>>,
        source_degrees: Vec<i64>,
        target_degrees: Vec<i64>,
    ) -> Result<Self, HomologyError> {
        let mut map = FreeModuleMap::ungraded(quotient, matrix)?;
        if source_degrees.len() != map.cols || target_degrees.len() != map.rows {
            return Err(HomologyError::RankMismatch {
                position: 0,
                detail: "degree lists do not match the matrix shape".into(),
            });
        }
        for b in 0..map.rows {
            for a in 0..map.cols {
                let e = map.entry(b, a);
                if e.is_zero() {
                    continue;
                }
                let ok = e.is_homogeneous()
                    && e.degree().map(|d| d as i64 + target_degrees[b]) == Some(source_degrees[a]);
                if !ok {
                    return Err(HomologyError::DegreeMismatch {
                        position: 0,
                        detail: format!("entry ({b}, {a}) = {e}"),
                    });
                }
            }
        }
        map.source_degrees = source_degrees;
        map.target_degrees = target_degrees;
        map.graded = true;
        Ok(map)
    }

    /// A map without grading data; enough for composition checks.
    pub fn ungraded(quotient: &QuotientRingSpec, matrix: Vec<Vec<Polynomial>>) -> Result<Self, HomologyError> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, Vec::len);
        if matrix.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::RankMismatch {
                position: 0,
                detail: "ragged matrix".into(),
            });
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for row in matrix {
            for e in row {
                let e = e.embed(quotient.ring())?;
                entries.push(quotient.reduce(&e));
            }
        }
        Ok(FreeModuleMap {
            rows,
            cols,
            entries,
            source_degrees: vec![0; cols],
            target_degrees: vec![0; rows],
            graded: false,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn source_degrees(&self) -> &[i64] {
        &self.source_degrees
    }

    pub fn target_degrees(&self) -> &[i64] {
        &self.target_degrees
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn matrix(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c).clone()).collect())
            .collect()
    }

    /// `S^1 <--[g]-- S^1` style rendering of the matrix.
    pub fn bracketed(&self) -> String {
        if self.rows == 1 && self.cols == 1 {
            return format!("[{}]", self.entry(0, 0));
        }
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> =
                    (0..self.cols).map(|c| self.entry(r, c).to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// Product `a * b` of polynomial matrices.
pub fn mat_mul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>], ring: &Ring) -> Vec<Vec<Polynomial>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    (0..inner).fold(ring.zero(), |acc, k| &acc + &(&row[k] * &b[k][c]))
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `maps[k]: modules[k+1] -> modules[k]`
    Chain,
    /// `maps[k]: modules[k] -> modules[k+1]`
    Cochain,
}

/// A free module `S^r` with generator degrees, optionally cut down to the
/// submodule `I * S^r`.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    pub degrees: Vec<i64>,
    pub submodule: Option<IdealBasis>,
}

impl ModuleSpec {
    pub fn free(degrees: Vec<i64>) -> ModuleSpec {
        ModuleSpec {
            degrees,
            submodule: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

#[derive(Debug, Clone)]
pub struct ChainComplex {
    quotient: QuotientRingSpec,
    direction: Direction,
    modules: Vec<ModuleSpec>,
    maps: Vec<FreeModuleMap>,
}

impl ChainComplex {
    pub fn new(
        quotient: QuotientRingSpec,
        direction: Direction,
        modules: Vec<ModuleSpec>,
        maps: Vec<FreeModuleMap>,
    ) -> Result<Self, HomologyError> {
        let c = ChainComplex {
            quotient,
            direction,
            modules,
            maps,
        };
        c.check_shapes()?;
        Ok(c)
    }

    /// Builds modules from the maps' own degree data.
    pub fn from_maps(
        quotient: QuotientRingSpec,
        direction: Direction,
        maps: Vec<FreeModuleMap>,
    ) -> Result<Self, HomologyError> {
        let mut modules = Vec::with_capacity(maps.len() + 1);
        for (k, m) in maps.iter().enumerate() {
            let (lower, upper) = match direction {
                Direction::Chain => (m.target_degrees.clone(), m.source_degrees.clone()),
                Direction::Cochain => (m.source_degrees.clone(), m.target_degrees.clone()),
            };
            if k == 0 {
                modules.push(ModuleSpec::free(lower));
            }
            modules.push(ModuleSpec::free(upper));
        }
        ChainComplex::new(quotient, direction, modules, maps)
    }

    pub fn quotient(&self) -> &QuotientRingSpec {
        &self.quotient
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn modules(&self) -> &[ModuleSpec] {
        &self.modules
    }

    pub fn maps(&self) -> &[FreeModuleMap] {
        &self.maps
    }

    pub fn is_graded(&self) -> bool {
        self.maps.iter().all(FreeModuleMap::is_graded)
    }

    /// (source, target) module indices of map `k`.
    pub fn endpoints(&self, k: usize) -> (usize, usize) {
        match self.direction {
            Direction::Chain => (k + 1, k),
            Direction::Cochain => (k, k + 1),
        }
    }

    fn check_shapes(&self) -> Result<(), HomologyError> {
        if !self.maps.is_empty() && self.modules.len() != self.maps.len() + 1 {
            return Err(HomologyError::RankMismatch {
                position: 0,
                detail: format!(
                    "{} maps need {} modules, got {}",
                    self.maps.len(),
                    self.maps.len() + 1,
                    self.modules.len()
                ),
            });
        }
        for (k, m) in self.maps.iter().enumerate() {
            let (s, t) = self.endpoints(k);
            let (src, tgt) = (&self.modules[s], &self.modules[t]);
            if m.cols != src.rank() || m.rows != tgt.rank() {
                return Err(HomologyError::RankMismatch {
                    position: k,
                    detail: format!(
                        "{}x{} matrix between ranks {} and {}",
                        m.rows,
                        m.cols,
                        src.rank(),
                        tgt.rank()
                    ),
                });
            }
            if m.graded && (m.source_degrees != src.degrees || m.target_degrees != tgt.degrees) {
                return Err(HomologyError::DegreeMismatch {
                    position: k,
                    detail: "module twists disagree with the map".into(),
                });
            }
        }
        Ok(())
    }

    /// One line per map in the `S^r <--[m]-- S^c` transcript format.
    pub fn transcript(&self) -> String {
        let mut out = String::new();
        for m in &self.maps {
            match self.direction {
                Direction::Chain => {
                    let _ = writeln!(out, "S^{} <--{}-- S^{}", m.rows, m.bracketed(), m.cols);
                }
                Direction::Cochain => {
                    let _ = writeln!(out, "S^{} --{}--> S^{}", m.cols, m.bracketed(), m.rows);
                }
            }
        }
        out
    }
}

/// True iff every pair of consecutive maps composes to zero modulo the
/// relations.
pub fn check_complex(c: &ChainComplex) -> Result<bool, HomologyError> {
    c.check_shapes()?;
    Ok(first_failure(c)?.is_none())
}

/// Index of the first consecutive pair that fails to compose to zero.
pub fn first_failure(c: &ChainComplex) -> Result<Option<usize>, HomologyError> {
    c.check_shapes()?;
    let ring = c.quotient.ring();
    for k in 0..c.maps.len().saturating_sub(1) {
        let (first, second) = match c.direction {
            Direction::Chain => (&c.maps[k + 1], &c.maps[k]),
            Direction::Cochain => (&c.maps[k], &c.maps[k + 1]),
        };
        let prod = mat_mul(&second.matrix(), &first.matrix(), ring);
        if prod.iter().flatten().any(|e| !c.quotient.reduce(e).is_zero()) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn s4() -> QuotientRingSpec {
        let r = Ring::new(&["z1", "z2", "z3", "z4"], Field::Rational).unwrap();
        let rel = r.parse("z1*z2*z3*z4").unwrap();
        QuotientRingSpec::new(&r, vec![rel]).unwrap()
    }

    fn one_by_one(q: &QuotientRingSpec, src: &str) -> FreeModuleMap {
        FreeModuleMap::ungraded(q, vec![vec![q.ring().parse(src).unwrap()]]).unwrap()
    }

    #[test]
    fn square_of_a_variable_is_not_a_complex() {
        let q = s4();
        let c = ChainComplex::from_maps(
            q.clone(),
            Direction::Chain,
            vec![one_by_one(&q, "z1"), one_by_one(&q, "z1")],
        )
        .unwrap();
        assert!(!check_complex(&c).unwrap());
    }

    #[test]
    fn zero_maps_form_a_complex() {
        let q = s4();
        let c = ChainComplex::from_maps(
            q.clone(),
            Direction::Chain,
            vec![one_by_one(&q, "0"), one_by_one(&q, "0"), one_by_one(&q, "0")],
        )
        .unwrap();
        assert!(check_complex(&c).unwrap());
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let q = s4();
        let z = q.ring().parse("z1").unwrap();
        let wide = FreeModuleMap::ungraded(&q, vec![vec![z.clone(), z.clone()]]).unwrap();
        let e = ChainComplex::from_maps(q.clone(), Direction::Chain, vec![wide, one_by_one(&q, "z2")]);
        assert!(matches!(e, Err(HomologyError::RankMismatch { .. })));
    }

    #[test]
    fn entries_are_reduced() {
        let q = s4();
        let m = one_by_one(&q, "z1*z2*z3*z4 + z2");
        assert_eq!(m.entry(0, 0).to_string(), "z2");
    }

    #[test]
    fn grading_is_validated() {
        let q = s4();
        let z = q.ring().parse("z1 + z2^2").unwrap();
        let e = FreeModuleMap::new(&q, vec![vec![z]], vec![1], vec![0]);
        assert!(matches!(e, Err(HomologyError::DegreeMismatch { .. })));
    }

    #[test]
    fn standard_monomials_avoid_relation() {
        let q = s4();
        assert_eq!(q.standard_monomials(4).len(), 34);
        assert_eq!(q.standard_monomials(3).len(), 20);
    }
}
