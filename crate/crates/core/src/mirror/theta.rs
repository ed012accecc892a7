//! Theta-function equations of the rank-one mirror and the surface they cut
//! out once `th3` is eliminated.

use serde::Serialize;

use super::{Component, MirrorError, RationalFunction};
use crate::ideal::{eliminate, ideal_intersection, IdealBasis};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};

/// `th2*th4 = a + b + c*th1 + d*th3` and `c*d*th1*th3 = a*b`, with the unit
/// theta function already set to 1.
#[derive(Debug, Clone)]
pub struct ThetaSystem {
    pub ring: Ring,
    /// `th2*th4 - (a + b + c*th1 + d*th3)`
    pub eq1: Polynomial,
    /// `c*d*th1*th3 - a*b`
    pub eq2: Polynomial,
}

const NAMES: [&str; 8] = ["th1", "th2", "th3", "th4", "a", "b", "c", "d"];

fn theta_ring() -> Ring {
    Ring::new(&NAMES, Field::Rational).expect("valid names")
}

pub fn theta_equations() -> ThetaSystem {
    let ring = theta_ring();
    ThetaSystem {
        eq1: ring.parse("th2*th4 - a - b - c*th1 - d*th3").expect("valid"),
        eq2: ring.parse("c*d*th1*th3 - a*b").expect("valid"),
        ring,
    }
}

impl ThetaSystem {
    /// Substitutes numbers for the curve-class coefficients.
    pub fn specialize(&self, a: i64, b: i64, c: i64, d: i64) -> Result<ThetaSystem, MirrorError> {
        let r = &self.ring;
        let assign = [
            ("a", r.from_i64(a)),
            ("b", r.from_i64(b)),
            ("c", r.from_i64(c)),
            ("d", r.from_i64(d)),
        ];
        Ok(ThetaSystem {
            ring: r.clone(),
            eq1: self.eq1.substitute(&assign)?,
            eq2: self.eq2.substitute(&assign)?,
        })
    }

    fn coefficient(&self, name: &'static str) -> Result<Polynomial, MirrorError> {
        // c and d are read off the equations themselves
        let p = match name {
            "c" => -self.eq1.coefficient_in(&["th1"], &[1])?,
            _ => -self.eq1.coefficient_in(&["th3"], &[1])?,
        };
        Ok(p)
    }

    /// `(lhs, rhs)` display of the two equations.
    pub fn display(&self) -> [String; 2] {
        let r = &self.ring;
        let th24 = r.parse("th2*th4").expect("valid");
        let rhs1 = &th24 - &self.eq1;
        let th13 = r.parse("th1*th3").expect("valid");
        let cd = self.eq2.coefficient_in(&["th1", "th3"], &[1, 1]).expect("registered");
        let ab = -&self.eq2.coefficient_in(&["th1", "th3"], &[0, 0]).expect("registered");
        let rhs2 = RationalFunction { num: ab, den: cd };
        [
            format!("{th24} = {rhs1}"),
            format!("{th13} = {rhs2}"),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaElimination {
    /// `c*th1*th2*th4 - c^2*th1^2 - c*(a+b)*th1 - a*b`, scaled so the
    /// `th1*th2*th4` coefficient is `c`.
    #[serde(serialize_with = "as_string")]
    pub cleared: Polynomial,
    #[serde(serialize_with = "as_string")]
    pub alpha: Polynomial,
    #[serde(serialize_with = "as_string")]
    pub gamma: Polynomial,
    pub beta: RationalFunction,
    pub excluded: Vec<String>,
    pub laurent: String,
}

fn as_string<S: serde::Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Eliminates `th3` with a Groebner basis and reads off the coefficients of
/// `th2*th4 = alpha*th1 + gamma + beta/th1`.
pub fn theta_eliminate(t: &ThetaSystem) -> Result<ThetaElimination, MirrorError> {
    let c = t.coefficient("c")?;
    let d = t.coefficient("d")?;
    if c.is_zero() {
        return Err(MirrorError::ZeroCoefficient("c"));
    }
    if d.is_zero() {
        return Err(MirrorError::ZeroCoefficient("d"));
    }
    let ideal = IdealBasis::new(&t.ring, vec![t.eq1.clone(), t.eq2.clone()])?;
    let elim = eliminate(&ideal, &["th3"])?;
    let key = ["th1", "th2", "th4"];
    let g = elim
        .generators()
        .iter()
        .filter(|p| {
            !p.coefficient_in(&key, &[1, 1, 1])
                .map(|q| q.is_zero())
                .unwrap_or(true)
        })
        .min_by_key(|p| p.num_terms())
        .ok_or(MirrorError::NoRelation)?
        .clone();
    let lead = g.coefficient_in(&key, &[1, 1, 1])?;
    // rescale so the th1*th2*th4 coefficient becomes c
    let g = if lead == c {
        g
    } else if let Some(q) = c.div_exact(&lead) {
        &g * &q
    } else {
        let q = lead.div_exact(&c).ok_or(MirrorError::NoRelation)?;
        g.div_exact(&q).ok_or(MirrorError::NoRelation)?
    };
    let sq = g.coefficient_in(&key, &[2, 0, 0])?;
    let lin = g.coefficient_in(&key, &[1, 0, 0])?;
    let cst = g.coefficient_in(&key, &[0, 0, 0])?;
    let alpha = (-&sq).div_exact(&c).ok_or(MirrorError::NoRelation)?;
    let gamma = (-&lin).div_exact(&c).ok_or(MirrorError::NoRelation)?;
    let beta = match (-&cst).div_exact(&c) {
        Some(b) => RationalFunction {
            num: b,
            den: t.ring.one(),
        },
        None => RationalFunction { num: -&cst, den: c.clone() },
    };
    let laurent = format!(
        "th2*th4 = {} + {} + {}",
        show_times(&gamma, None),
        show_times(&alpha, Some("th1")),
        show_fraction(&beta, "th1^-1")
    );
    Ok(ThetaElimination {
        cleared: g,
        alpha,
        gamma,
        beta,
        excluded: vec!["th1".into(), "c".into()],
        laurent,
    })
}

fn show_times(p: &Polynomial, var: Option<&str>) -> String {
    let base = if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    };
    match var {
        None => base,
        Some(v) if p.is_constant() && p.constant_term().is_one() => v.to_string(),
        Some(v) => format!("{base}*{v}"),
    }
}

fn show_fraction(r: &RationalFunction, var: &str) -> String {
    if r.den.is_constant() {
        return show_times(&r.num, Some(var));
    }
    format!("({r})*{var}")
}

/// Substitutes `th3 = a*b/(c*d*th1)` into the first equation, clears
/// `c*d*th1` and divides by `d`.
pub fn substitution_cross_check(t: &ThetaSystem) -> Result<Polynomial, MirrorError> {
    let r = &t.ring;
    let num = -&t.eq2.coefficient_in(&["th1", "th3"], &[0, 0])?;
    let cd = t.eq2.coefficient_in(&["th1", "th3"], &[1, 1])?;
    let den = &cd * &r.var("th1")?;
    // den * eq1(th3 -> num/den), linear in th3
    let cleared = t.eq1.substitute_fraction("th3", &num, &den)?;
    // cleared = c*d*th1*(th2 th4 - a - b - c th1) - d*a*b; divide by d
    let d = t.coefficient("d")?;
    cleared.div_exact(&d).ok_or(MirrorError::NoRelation)
}

/// `th1*th2*th4 - alpha*th1^2 - gamma*th1 - beta` over
/// `th1, th2, th4, alpha, beta, gamma`.
pub fn mir_equation() -> Polynomial {
    let r = Ring::new(&["th1", "th2", "th4", "alpha", "beta", "gamma"], Field::Rational)
        .expect("valid names");
    r.parse("th1*th2*th4 - alpha*th1^2 - gamma*th1 - beta")
        .expect("valid")
}

#[derive(Debug, Clone, Serialize)]
pub struct Lg2Surface {
    #[serde(serialize_with = "as_string")]
    pub surface: Polynomial,
    pub excluded: Vec<String>,
    pub potential: String,
    /// Critical locus of the potential in the chart `u = 1`.
    pub critical: Vec<String>,
    pub components: Vec<Component>,
    pub branes: Vec<String>,
    pub objects: Vec<String>,
    /// `(y, P) = (y, v) ∩ (y, x^2 + x + 1)` in the chart `u = 1`.
    pub fibre_decomposition_verified: bool,
    /// Whether `x -> 1/x` preserves the double-point ideal, swapping roots.
    pub root_swap_inversion: bool,
    /// Whether `x -> -x` preserves it.
    pub root_swap_negation: bool,
}

/// The surface `u*y*x = v*(x^2 + x + 1)` with potential `y`.
pub fn lg2_surface() -> Result<Lg2Surface, MirrorError> {
    let mir = mir_equation();
    let one = mir.ring().one();
    let unit = mir.substitute(&[
        ("alpha", one.clone()),
        ("beta", one.clone()),
        ("gamma", one.clone()),
    ])?;
    let ring = Ring::new(&["x", "y", "u", "v"], Field::Rational)?;
    let renamed = unit
        .rename(&[("th1", "x"), ("th2", "y")])?;
    let with_uv = renamed.ring().extend(&["u", "v"])?;
    let lifted = renamed.embed(&with_uv)?;
    let u = with_uv.var("u")?;
    let v = with_uv.var("v")?;
    let surface = lifted
        .substitute_fraction("th4", &u, &v)?
        .embed(&ring)?;

    let chart = Ring::new(&["x", "y", "v"], Field::Rational)?;
    let affine = surface
        .substitute_into(&chart, &[("u", chart.one())])?;
    let crit = IdealBasis::new(
        &chart,
        vec![
            affine.clone(),
            affine.partial_derivative("x")?,
            affine.partial_derivative("v")?,
        ],
    )?
    .with_groebner(MonomialOrder::Grevlex)?;

    let node = chart.parse("x^2 + x + 1").expect("valid");
    let fibre_y0 = IdealBasis::parse(&chart, &["y", "v"]).expect("valid");
    let fibre_roots = IdealBasis::parse(&chart, &["y", "x^2 + x + 1"]).expect("valid");
    let split = ideal_intersection(&fibre_y0, &fibre_roots)?;
    let fibre = IdealBasis::new(&chart, vec![chart.var("y")?, affine.clone()])?;
    let fibre_decomposition_verified = split.same_ideal(&fibre)?;
    let components = vec![
        Component {
            label: "Y0".into(),
            generators: fibre_y0.generators().iter().map(|g| g.to_string()).collect(),
        },
        Component {
            label: "Y1".into(),
            generators: vec!["y".into(), "x - x1".into()],
        },
        Component {
            label: "Y2".into(),
            generators: vec!["y".into(), "x - x2".into()],
        },
    ];

    // x -> 1/x sends x^2 + x + 1 to (1 + x + x^2)/x^2
    let inv = node.substitute_fraction("x", &chart.one(), &chart.var("x")?)?;
    let neg = node.substitute(&[("x", -&chart.var("x")?)])?;
    let node_ideal = IdealBasis::new(&chart, vec![node.clone()])?.with_groebner(MonomialOrder::Grevlex)?;
    let root_swap_inversion = node_ideal.contains(&inv)?;
    let root_swap_negation = node_ideal.contains(&neg)?;

    Ok(Lg2Surface {
        surface,
        excluded: vec!["x".into()],
        potential: "y".into(),
        critical: crit
            .groebner()
            .expect("computed")
            .elements()
            .iter()
            .map(|g| g.to_string())
            .collect(),
        components,
        branes: vec!["D0".into(), "D1".into(), "D2".into()],
        objects: vec!["D0".into(), "D1".into()],
        fibre_decomposition_verified,
        root_swap_inversion,
        root_swap_negation,
    })
}

/// `alpha`, `beta`, `gamma` for numeric `a, b, c` as exact rationals.
pub fn reduced_coefficients(a: i64, b: i64, c: i64) -> Result<[Scalar; 3], MirrorError> {
    if c == 0 {
        return Err(MirrorError::ZeroCoefficient("c"));
    }
    let f = Field::Rational;
    let alpha = f.from_i64(c);
    let beta = &f.from_i64(a * b) * &f.from_i64(c).inv().expect("nonzero");
    let gamma = f.from_i64(a + b);
    Ok([alpha, beta, gamma])
}
