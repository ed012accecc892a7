//! The mirror family `Y_n`: defining equation, potential fraction and the
//! homogeneous pencil.

use std::fmt;

use serde::Serialize;

use super::{MirrorError, RationalFunction};
use crate::ideal::IdealBasis;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};

/// A coupling constant: a ring variable or a fixed number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TParam {
    Symbolic,
    Value(Scalar),
}

impl TParam {
    pub fn one() -> TParam {
        TParam::Value(Field::Rational.one())
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, TParam::Symbolic)
    }
}

impl fmt::Display for TParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TParam::Symbolic => write!(f, "symbolic"),
            TParam::Value(v) => write!(f, "{v}"),
        }
    }
}

/// `f`, `g` and the base ideal `(f, g)`.
#[derive(Debug, Clone)]
pub struct Pencil {
    pub f: Polynomial,
    pub g: Polynomial,
    pub indeterminacy: IdealBasis,
    pub degree: u32,
}

#[derive(Debug, Clone)]
pub struct MirrorModel {
    n: usize,
    t1: TParam,
    t2: TParam,
    ring: Ring,
    defining: Polynomial,
    expanded: Polynomial,
    potential_num: Polynomial,
    potential_den: Polynomial,
}

fn product(ring: &Ring, names: &[String]) -> Polynomial {
    names
        .iter()
        .fold(ring.one(), |acc, v| &acc * &ring.var(v).expect("registered"))
}

impl MirrorModel {
    pub fn new(n: usize, t1: TParam, t2: TParam) -> Result<MirrorModel, MirrorError> {
        if n < 2 {
            return Err(MirrorError::NTooSmall(n));
        }
        let mut names: Vec<String> = ["x1", "x2", "y1", "y2"].iter().map(|s| s.to_string()).collect();
        names.extend((1..n).map(|i| format!("z{i}")));
        names.extend((1..n).map(|i| format!("w{i}")));
        if t1.is_symbolic() {
            names.push("t1".into());
        }
        if t2.is_symbolic() {
            names.push("t2".into());
        }
        let ring = Ring::new(&names, Field::Rational)?;
        let tval = |p: &TParam, name: &str| match p {
            TParam::Symbolic => ring.var(name).expect("registered"),
            TParam::Value(v) => ring.constant(v.clone()),
        };
        let (t1p, t2p) = (tval(&t1, "t1"), tval(&t2, "t2"));
        let zs: Vec<String> = (1..n).map(|i| format!("z{i}")).collect();
        let ws: Vec<String> = (1..n).map(|i| format!("w{i}")).collect();
        let pz = product(&ring, &zs);
        let pw = product(&ring, &ws);
        let pwz = &pw * &pz;
        let y1 = ring.var("y1")?;
        let x1 = ring.var("x1")?;
        let x2 = ring.var("x2")?;
        let potential_num = &(&y1 + &(&t1p * &pw)) * &(&y1 + &(&t2p * &pz));
        let potential_den = &(&y1 * &x1) * &pwz;
        let defining = &potential_num - &(&x2 * &potential_den);
        let expanded = &(&(&y1 * &y1)
            + &(&y1 * &(&(&(&t1p * &pw) + &(&t2p * &pz)) - &(&(&x1 * &x2) * &pwz))))
            + &(&(&t1p * &t2p) * &pwz);
        Ok(MirrorModel {
            n,
            t1,
            t2,
            ring,
            defining,
            expanded,
            potential_num,
            potential_den,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t1(&self) -> &TParam {
        &self.t1
    }

    pub fn t2(&self) -> &TParam {
        &self.t2
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `(y1 + t1*prod w)(y1 + t2*prod z) - y1*x1*x2*prod(w z)`.
    pub fn defining(&self) -> &Polynomial {
        &self.defining
    }

    /// The same polynomial collected by powers of `y1`.
    pub fn expanded(&self) -> &Polynomial {
        &self.expanded
    }

    pub fn potential_num(&self) -> &Polynomial {
        &self.potential_num
    }

    pub fn potential_den(&self) -> &Polynomial {
        &self.potential_den
    }

    /// `x2 = num / den`.
    pub fn potential(&self) -> RationalFunction {
        RationalFunction {
            num: self.potential_num.clone(),
            den: self.potential_den.clone(),
        }
    }

    pub fn z_names(&self) -> Vec<String> {
        (1..self.n).map(|i| format!("z{i}")).collect()
    }

    pub fn w_names(&self) -> Vec<String> {
        (1..self.n).map(|i| format!("w{i}")).collect()
    }

    /// Factored display `lhs = (..)*(..)`.
    pub fn equation_text(&self) -> String {
        let lhs = &self.ring.var("x2").expect("registered") * &self.potential_den;
        let (a, b) = self.factors();
        format!("{lhs} = ({a})*({b})")
    }

    /// `(y1 + t1*prod w, y1 + t2*prod z)`.
    pub fn factors(&self) -> (Polynomial, Polynomial) {
        let y1 = self.ring.var("y1").expect("registered");
        let tz = |p: &TParam, name: &str| match p {
            TParam::Symbolic => self.ring.var(name).expect("registered"),
            TParam::Value(v) => self.ring.constant(v.clone()),
        };
        let pw = product(&self.ring, &self.w_names());
        let pz = product(&self.ring, &self.z_names());
        (
            &y1 + &(&tz(&self.t1, "t1") * &pw),
            &y1 + &(&tz(&self.t2, "t2") * &pz),
        )
    }

    /// `defining - expanded` is zero and `num - x2*den` reduces to zero
    /// modulo the defining ideal.
    pub fn identities_hold(&self) -> Result<bool, MirrorError> {
        if self.defining != self.expanded {
            return Ok(false);
        }
        let ideal = IdealBasis::new(&self.ring, vec![self.defining.clone()])?.ensure_groebner()?;
        let x2 = self.ring.var("x2")?;
        let diff = &self.potential_num - &(&x2 * &self.potential_den);
        Ok(ideal.normal_form(&diff)?.is_zero())
    }

    /// Homogenizes both factors in `y2` over the geometric variables
    /// `y1, z, w`, giving `f = F_w F_z y2` and `g = y1 prod(w z)`.
    pub fn pencil(&self) -> Result<Pencil, MirrorError> {
        let mut over = vec!["y1".to_string()];
        over.extend(self.z_names());
        over.extend(self.w_names());
        let over_ref: Vec<&str> = over.iter().map(String::as_str).collect();
        let (a, b) = self.factors();
        let ha = a.homogenize_in("y2", &over_ref)?;
        let hb = b.homogenize_in("y2", &over_ref)?;
        let y2 = self.ring.var("y2")?;
        let f = &(&ha * &hb) * &y2;
        let g = &self.ring.var("y1")? * &product(&self.ring, &[self.w_names(), self.z_names()].concat());
        over.push("y2".into());
        let idxs: Vec<usize> = over
            .iter()
            .map(|v| self.ring.index_of(v).expect("registered"))
            .collect();
        let (df, dg) = (f.degree_in(&idxs), g.degree_in(&idxs));
        if !f.is_homogeneous_in(&idxs) || !g.is_homogeneous_in(&idxs) || df != dg {
            return Err(MirrorError::NotHomogeneous);
        }
        let indeterminacy = IdealBasis::new(&self.ring, vec![f.clone(), g.clone()])?;
        Ok(Pencil {
            f,
            g,
            indeterminacy,
            degree: df.unwrap_or(0),
        })
    }

    /// Setting `y2 = 1` in `f` and multiplying `g` by `x1` recovers the
    /// potential fraction.
    pub fn pencil_dehomogenizes(&self, pencil: &Pencil) -> Result<bool, MirrorError> {
        let one = self.ring.one();
        let f1 = pencil.f.substitute(&[("y2", one)])?;
        let x1 = self.ring.var("x1")?;
        Ok(f1 == self.potential_num && &pencil.g * &x1 == self.potential_den)
    }

    /// The involution exchanging `z_i` and `w_i`. With symbolic couplings it
    /// also swaps `t1` and `t2`; with numeric ones the first pair is
    /// rescaled by `t2/t1` so each factor maps to the other.
    pub fn swap(&self, p: &Polynomial) -> Result<Polynomial, MirrorError> {
        let r = &self.ring;
        let mut assign: Vec<(String, Polynomial)> = Vec::new();
        for (z, w) in self.z_names().into_iter().zip(self.w_names()) {
            let zv = r.var(&z)?;
            let wv = r.var(&w)?;
            assign.push((z, wv));
            assign.push((w, zv));
        }
        match (&self.t1, &self.t2) {
            (TParam::Symbolic, TParam::Symbolic) => {
                assign.push(("t1".into(), r.var("t2")?));
                assign.push(("t2".into(), r.var("t1")?));
            }
            (TParam::Value(a), TParam::Value(b)) => {
                let ai = a.inv().ok_or(MirrorError::ZeroCoefficient("t1"))?;
                let bi = b.inv().ok_or(MirrorError::ZeroCoefficient("t2"))?;
                // w1 -> (t2/t1) z1, z1 -> (t1/t2) w1
                assign[0].1 = assign[0].1.scale(&(a * &bi));
                assign[1].1 = assign[1].1.scale(&(b * &ai));
            }
            _ => return Err(MirrorError::MixedCouplings),
        }
        let refs: Vec<(&str, Polynomial)> = assign.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        Ok(p.substitute(&refs)?)
    }

    /// The defining polynomial is invariant under `swap`.
    pub fn symmetry_holds(&self) -> Result<bool, MirrorError> {
        Ok(self.swap(&self.defining)? == self.defining)
    }

    fn lg3_target(&self, unit: bool) -> Result<(Ring, Vec<(&'static str, Polynomial)>), MirrorError> {
        if self.n != 2 {
            return Err(MirrorError::IndexOutOfRange { index: self.n, n: 2 });
        }
        if unit {
            let target = Ring::new(&["x1", "x2", "y1", "z", "w"], Field::Rational)?;
            let mut assign = vec![("w1", target.var("w")?), ("z1", target.var("z")?)];
            for (t, p) in [("t1", &self.t1), ("t2", &self.t2)] {
                if p.is_symbolic() {
                    assign.push((t, target.one()));
                }
            }
            return Ok((target, assign));
        }
        let mut names: Vec<&str> = vec!["x1", "x2", "x3", "x4", "y1"];
        if self.t1.is_symbolic() {
            names.push("t1");
        }
        if self.t2.is_symbolic() {
            names.push("t2");
        }
        let target = Ring::new(&names, Field::Rational)?;
        let assign = vec![("w1", target.var("x4")?), ("z1", target.var("x3")?)];
        Ok((target, assign))
    }

    fn lg3_map(&self, p: &Polynomial, unit: bool) -> Result<Polynomial, MirrorError> {
        let (target, assign) = self.lg3_target(unit)?;
        Ok(p.substitute_into(&target, &assign)?)
    }

    fn lg3_text(&self, unit: bool) -> Result<String, MirrorError> {
        let lhs = &self.ring.var("x2")? * &self.potential_den;
        let (a, b) = self.factors();
        Ok(format!(
            "{} = ({})*({})",
            self.lg3_map(&lhs, unit)?,
            self.lg3_map(&a, unit)?,
            self.lg3_map(&b, unit)?
        ))
    }

    /// For `n = 2`: the defining polynomial over `x1, x2, x3, x4, y1` (and
    /// the symbolic couplings) with `w1 = x4`, `z1 = x3`.
    pub fn lg3_form(&self) -> Result<Polynomial, MirrorError> {
        self.lg3_map(&self.defining, false)
    }

    pub fn lg3_equation_text(&self) -> Result<String, MirrorError> {
        self.lg3_text(false)
    }

    /// For `n = 2` with couplings set to one: the defining polynomial over
    /// `x1, x2, y1, z, w`.
    pub fn lg3_unit_form(&self) -> Result<Polynomial, MirrorError> {
        self.lg3_map(&self.defining, true)
    }

    pub fn lg3_unit_equation_text(&self) -> Result<String, MirrorError> {
        self.lg3_text(true)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModelReport {
    pub n: usize,
    pub t1: String,
    pub t2: String,
    pub equation: String,
    pub defining: String,
    pub expanded_matches: bool,
    pub potential: String,
    pub pencil_f: String,
    pub pencil_g: String,
    pub pencil_degree: u32,
    pub indeterminacy: Vec<String>,
    pub pencil_recovers_potential: bool,
    pub symmetric: bool,
}

impl MirrorModel {
    pub fn report(&self) -> Result<ModelReport, MirrorError> {
        let pencil = self.pencil()?;
        Ok(ModelReport {
            n: self.n,
            t1: self.t1.to_string(),
            t2: self.t2.to_string(),
            equation: self.equation_text(),
            defining: self.defining.to_string(),
            expanded_matches: self.identities_hold()?,
            potential: format!("x2 = {}", self.potential()),
            pencil_f: pencil.f.to_string(),
            pencil_g: pencil.g.to_string(),
            pencil_degree: pencil.degree,
            indeterminacy: pencil.indeterminacy.generators().iter().map(|g| g.to_string()).collect(),
            pencil_recovers_potential: self.pencil_dehomogenizes(&pencil)?,
            symmetric: self.symmetry_holds()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> MirrorModel {
        MirrorModel::new(n, TParam::Symbolic, TParam::Symbolic).unwrap()
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(
            MirrorModel::new(1, TParam::one(), TParam::one()).unwrap_err(),
            MirrorError::NTooSmall(1)
        );
    }

    #[test]
    fn lg3_equation() {
        let m = sym(2);
        let p = m.lg3_form().unwrap();
        let want = p
            .ring()
            .parse("(y1 + t1*x4)*(y1 + t2*x3) - x1*x2*x3*x4*y1")
            .unwrap();
        assert_eq!(p, want);
        let u = MirrorModel::new(2, TParam::one(), TParam::one()).unwrap();
        let p = u.lg3_unit_form().unwrap();
        assert_eq!(p, p.ring().parse("(y1+z)*(y1+w) - x1*x2*y1*z*w").unwrap());
        assert_eq!(
            m.lg3_equation_text().unwrap(),
            "x1*x2*x3*x4*y1 = (x4*t1 + y1)*(x3*t2 + y1)"
        );
        assert_eq!(u.lg3_unit_equation_text().unwrap(), "x1*x2*y1*z*w = (y1 + w)*(y1 + z)");
    }

    #[test]
    fn identities_and_symmetry() {
        for n in 2..=5 {
            let m = sym(n);
            assert!(m.identities_hold().unwrap(), "n = {n}");
            assert!(m.symmetry_holds().unwrap(), "n = {n}");
        }
        let f = Field::Rational;
        let m = MirrorModel::new(3, TParam::Value(f.from_i64(2)), TParam::Value(f.from_i64(-5))).unwrap();
        assert!(m.symmetry_holds().unwrap());
    }

    #[test]
    fn n3_unit_instance() {
        let m = MirrorModel::new(3, TParam::one(), TParam::one()).unwrap();
        let want = m
            .ring()
            .parse("(y1 + w1*w2)*(y1 + z1*z2) - y1*x1*x2*w1*w2*z1*z2")
            .unwrap();
        assert_eq!(m.defining(), &want);
    }

    #[test]
    fn pencil_degrees() {
        for n in 2..=5 {
            let m = sym(n);
            let p = m.pencil().unwrap();
            assert_eq!(p.degree as usize, 2 * n - 1);
            assert!(m.pencil_dehomogenizes(&p).unwrap());
            assert!(p.indeterminacy.clone().ensure_groebner().unwrap().contains(&p.f).unwrap());
        }
        let m = MirrorModel::new(2, TParam::one(), TParam::one()).unwrap();
        let p = m.pencil().unwrap();
        let r = m.ring();
        assert_eq!(p.f, r.parse("(y1 + z1)*(y1 + w1)*y2").unwrap());
        assert_eq!(p.g, r.parse("y1*z1*w1").unwrap());
    }

    #[test]
    fn potential_text() {
        let m = MirrorModel::new(2, TParam::one(), TParam::one()).unwrap();
        assert_eq!(m.equation_text(), "x1*x2*y1*z1*w1 = (y1 + w1)*(y1 + z1)");
    }
}
