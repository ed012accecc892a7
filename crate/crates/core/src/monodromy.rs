//! 2x2 monodromy matrices around the critical values of the `sl(3)`
//! potential.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::kernel;
use crate::poly::{PolyError, Polynomial};
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonodromyError {
    #[error("matrix has non-constant entries")]
    NotNumeric,
    #[error("determinant of the cleared matrix does not divide the inverse")]
    NotInvertible,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `entries / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistMatrix {
    entries: [[Polynomial; 2]; 2],
    denominator: Polynomial,
}

/// `k[x1, x2, y1, y2]`.
pub fn monodromy_ring() -> Ring {
    Ring::new(&["x1", "x2", "y1", "y2"], Field::Rational).expect("valid names")
}

impl TwistMatrix {
    pub fn new(entries: [[Polynomial; 2]; 2], denominator: Polynomial) -> TwistMatrix {
        assert!(!denominator.is_zero(), "zero denominator");
        TwistMatrix { entries, denominator }
    }

    pub fn from_ints(ring: &Ring, m: [[i64; 2]; 2]) -> TwistMatrix {
        TwistMatrix::new(m.map(|row| row.map(|v| ring.from_i64(v))), ring.one())
    }

    pub fn parse(ring: &Ring, m: [[&str; 2]; 2], den: &str) -> Result<TwistMatrix, crate::parse::ParseError> {
        let mut out: [[Polynomial; 2]; 2] = std::array::from_fn(|_| std::array::from_fn(|_| ring.zero()));
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = ring.parse(m[r][c])?;
            }
        }
        Ok(TwistMatrix::new(out, ring.parse(den)?))
    }

    pub fn ring(&self) -> &Ring {
        self.denominator.ring()
    }

    pub fn entries(&self) -> &[[Polynomial; 2]; 2] {
        &self.entries
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn mul(&self, other: &TwistMatrix) -> TwistMatrix {
        let a = &self.entries;
        let b = &other.entries;
        let e = std::array::from_fn(|r| {
            std::array::from_fn(|c| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]))
        });
        TwistMatrix::new(e, &self.denominator * &other.denominator)
    }

    /// Determinant of the cleared matrix `entries`.
    pub fn cleared_determinant(&self) -> Polynomial {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    /// Trace of the cleared matrix.
    pub fn cleared_trace(&self) -> Polynomial {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn adjugate(&self) -> [[Polynomial; 2]; 2] {
        let e = &self.entries;
        [[e[1][1].clone(), -&e[0][1]], [-&e[1][0], e[0][0].clone()]]
    }

    /// `adj(E) * d / det(E)` when the division is exact.
    pub fn inverse(&self) -> Result<TwistMatrix, MonodromyError> {
        let det = self.cleared_determinant();
        let adj = self.adjugate();
        if let Some(q) = self.denominator.div_exact(&det) {
            return Ok(TwistMatrix::new(adj.map(|row| row.map(|p| &p * &q)), self.ring().one()));
        }
        if self.denominator.is_constant() {
            return Ok(TwistMatrix::new(
                adj.map(|row| row.map(|p| &p * &self.denominator)),
                det,
            ));
        }
        Err(MonodromyError::NotInvertible)
    }

    /// True when `entries = denominator * I`.
    pub fn is_identity(&self) -> bool {
        let d = &self.denominator;
        let z = self.ring().zero();
        self.entries[0][0] == *d && self.entries[1][1] == *d && self.entries[0][1] == z && self.entries[1][0] == z
    }

    /// The matrix as exact rationals, if every entry is constant.
    pub fn to_scalars(&self) -> Result<[[Scalar; 2]; 2], MonodromyError> {
        if !self.denominator.is_constant() || self.entries.iter().flatten().any(|p| !p.is_constant()) {
            return Err(MonodromyError::NotNumeric);
        }
        let inv = self.denominator.constant_term().inv().expect("nonzero");
        Ok(self.entries.clone().map(|row| row.map(|p| &p.constant_term() * &inv)))
    }

    pub fn to_ints(&self) -> Option<[[i64; 2]; 2]> {
        let s = self.to_scalars().ok()?;
        let mut out = [[0i64; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                let q = s[r][c].as_rational()?;
                if !q.is_integer() {
                    return None;
                }
                out[r][c] = i64::try_from(q.to_integer()).ok()?;
            }
        }
        Some(out)
    }

    pub fn determinant(&self) -> Result<Scalar, MonodromyError> {
        let s = self.to_scalars()?;
        Ok(&(&s[0][0] * &s[1][1]) - &(&s[0][1] * &s[1][0]))
    }

    pub fn trace(&self) -> Result<Scalar, MonodromyError> {
        let s = self.to_scalars()?;
        Ok(&s[0][0] + &s[1][1])
    }

    fn bracketed(&self) -> String {
        let row = |r: &[Polynomial; 2]| format!("[{}, {}]", r[0], r[1]);
        format!("[{}, {}]", row(&self.entries[0]), row(&self.entries[1]))
    }
}

impl fmt::Display for TwistMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_constant() && self.denominator.constant_term().is_one() {
            return write!(f, "{}", self.bracketed());
        }
        if let Some(ints) = self.to_ints() {
            return write!(f, "{ints:?}");
        }
        write!(f, "(1/({}))*{}", self.denominator, self.bracketed())
    }
}

/// `T1 = [[1, x1], [0, y1]]`, `T2 = [[x2, 0], [y2, 1]]` and
/// `T3 = (T2 T1)^-1 = adj(T2 T1) / det(T2 T1)`.
pub fn symbolic_triple() -> (TwistMatrix, TwistMatrix, TwistMatrix) {
    let r = monodromy_ring();
    let t1 = TwistMatrix::parse(&r, [["1", "x1"], ["0", "y1"]], "1").expect("valid");
    let t2 = TwistMatrix::parse(&r, [["x2", "0"], ["y2", "1"]], "1").expect("valid");
    let p = t2.mul(&t1);
    let t3 = TwistMatrix::new(p.adjugate(), p.cleared_determinant());
    (t1, t2, t3)
}

/// The displayed closed form `(1/(x2 y1)) [[x1 y2 + y1, -x1 x2], [-y2, x2]]`.
pub fn symbolic_t3_closed_form() -> TwistMatrix {
    let r = monodromy_ring();
    TwistMatrix::parse(&r, [["x1*y2 + y1", "-x1*x2"], ["-y2", "x2"]], "x2*y1").expect("valid")
}

/// `T1 = [[1, 1], [0, 1]]`, `T2 = [[1, 0], [1, 1]]`, `T3 = (T2 T1)^-1`.
pub fn concrete_triple() -> (TwistMatrix, TwistMatrix, TwistMatrix) {
    let r = monodromy_ring();
    let t1 = TwistMatrix::from_ints(&r, [[1, 1], [0, 1]]);
    let t2 = TwistMatrix::from_ints(&r, [[1, 0], [1, 1]]);
    let t3 = t2.mul(&t1).inverse().expect("unimodular");
    (t1, t2, t3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedSpace {
    pub basis: Vec<[String; 2]>,
    pub dimension: usize,
    #[serde(skip)]
    pub vectors: Vec<[Scalar; 2]>,
}

/// Kernel of `M - I` over the rationals.
pub fn fixed_space(m: &TwistMatrix) -> Result<FixedSpace, MonodromyError> {
    let s = m.to_scalars()?;
    let one = Field::Rational.one();
    let rows: Vec<Vec<Scalar>> = (0..2)
        .map(|r| {
            (0..2)
                .map(|c| if r == c { &s[r][c] - &one } else { s[r][c].clone() })
                .collect()
        })
        .collect();
    let vectors: Vec<[Scalar; 2]> = kernel(&rows)
        .into_iter()
        .map(|v| [v[0].clone(), v[1].clone()])
        .collect();
    Ok(FixedSpace {
        basis: vectors
            .iter()
            .map(|v| [v[0].to_string(), v[1].to_string()])
            .collect(),
        dimension: vectors.len(),
        vectors,
    })
}

/// Some `P` in `GL(2, Z)` with entries in `-2..=2` and `M P = P [[1, 1], [0, 1]]`.
pub fn dehn_conjugator(m: &TwistMatrix) -> Option<[[i64; 2]; 2]> {
    let a = m.to_ints()?;
    let u = [[1i64, 1], [0, 1]];
    let mul = |x: [[i64; 2]; 2], y: [[i64; 2]; 2]| -> [[i64; 2]; 2] {
        std::array::from_fn(|r| std::array::from_fn(|c| x[r][0] * y[0][c] + x[r][1] * y[1][c]))
    };
    let range = -2i64..=2;
    for p00 in range.clone() {
        for p01 in range.clone() {
            for p10 in range.clone() {
                for p11 in range.clone() {
                    let p = [[p00, p01], [p10, p11]];
                    let det = p00 * p11 - p01 * p10;
                    if det.abs() == 1 && mul(a, p) == mul(p, u) {
                        return Some(p);
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedCheck {
    pub vector: [String; 2],
    /// `(T3^-1 - I) v`.
    #[serde(serialize_with = "pair_as_strings")]
    pub inverse_form: [Polynomial; 2],
    /// `(E - d I) v` for `T3 = E / d`.
    #[serde(serialize_with = "pair_as_strings")]
    pub cleared_form: [Polynomial; 2],
    pub inverse_form_vanishes: [bool; 2],
    pub cleared_form_vanishes: [bool; 2],
}

fn pair_as_strings<S: serde::Serializer>(p: &[Polynomial; 2], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&p[0].to_string())?;
    seq.serialize_element(&p[1].to_string())?;
    seq.end()
}

/// Expands both residuals of the fixed-point equation `T3 v = v`.
pub fn candidate_fixed_check(t3: &TwistMatrix, v: &[Polynomial; 2]) -> Result<FixedCheck, MonodromyError> {
    let apply = |m: &[[Polynomial; 2]; 2], d: &Polynomial| -> [Polynomial; 2] {
        std::array::from_fn(|r| &(&(&m[r][0] * &v[0]) + &(&m[r][1] * &v[1])) - &(d * &v[r]))
    };
    let inv = t3.inverse()?;
    let inverse_form = apply(inv.entries(), inv.denominator());
    let cleared_form = apply(t3.entries(), t3.denominator());
    Ok(FixedCheck {
        vector: [v[0].to_string(), v[1].to_string()],
        inverse_form_vanishes: [inverse_form[0].is_zero(), inverse_form[1].is_zero()],
        cleared_form_vanishes: [cleared_form[0].is_zero(), cleared_form[1].is_zero()],
        inverse_form,
        cleared_form,
    })
}

/// `(x1 x2, 1 - x2)` in the monodromy ring.
pub fn candidate_vector() -> [Polynomial; 2] {
    let r = monodromy_ring();
    [r.parse("x1*x2").expect("valid"), r.parse("1 - x2").expect("valid")]
}
