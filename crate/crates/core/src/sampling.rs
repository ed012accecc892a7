//! Random smooth-point sampling over prime fields and singular-locus reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::ideal::{jacobian_ideal, vanishes_on_component, IdealBasis, IdealError, IdealReport};
use crate::poly::{PolyError, Polynomial};
use crate::scalar::{Field, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplingError {
    #[error("only {found} usable points after {attempts} attempts (need {needed})")]
    Degenerate {
        found: usize,
        attempts: usize,
        needed: usize,
    },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessSample {
    pub usable: usize,
    pub smooth: usize,
    pub attempts: usize,
    pub skipped_on_components: usize,
}

impl SmoothnessSample {
    pub fn fraction(&self) -> BigRational {
        BigRational::new(BigInt::from(self.smooth), BigInt::from(self.usable.max(1)))
    }

    pub fn fraction_f64(&self) -> f64 {
        self.smooth as f64 / self.usable.max(1) as f64
    }
}

/// Draws points of `V(P)` over `Z/p`, skipping points on `excluded`
/// components, and counts those where some partial derivative is nonzero.
pub fn sample_smoothness(
    p: &Polynomial,
    excluded: &[IdealBasis],
    trials: usize,
    prime: u64,
    seed: u64,
) -> Result<SmoothnessSample, SamplingError> {
    if trials == 0 {
        return Err(SamplingError::NoTrials);
    }
    let field = Field::prime(prime)?;
    let poly = p.to_field(field)?;
    let ring = poly.ring().clone();
    let n = ring.nvars();
    let partials: Vec<Polynomial> = (0..n).map(|i| poly.derivative_at(i)).collect();
    let excl: Vec<Vec<Polynomial>> = excluded
        .iter()
        .map(|c| {
            c.generators()
                .iter()
                .map(|g| g.to_field(field).and_then(|g| g.embed(&ring)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;

    let solve_var = (0..n).find(|&i| poly.degree_in(&[i]) == Some(1));
    let split = solve_var.map(|v| {
        let a = poly.derivative_at(v);
        let b = &poly - &(&a * &Polynomial::variable(&ring, v));
        (v, a, b)
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_attempts = trials.saturating_mul(100);
    let mut out = SmoothnessSample {
        usable: 0,
        smooth: 0,
        attempts: 0,
        skipped_on_components: 0,
    };
    while out.usable < trials && out.attempts < max_attempts {
        out.attempts += 1;
        let mut pt: Vec<Scalar> = (0..n)
            .map(|_| field.from_i64(rng.gen_range(0..prime) as i64))
            .collect();
        match &split {
            Some((v, a, b)) => {
                pt[*v] = field.zero();
                let av = a.evaluate_at(&pt);
                let Some(inv) = av.inv() else { continue };
                pt[*v] = -&(&b.evaluate_at(&pt) * &inv);
            }
            None => {
                if !poly.evaluate_at(&pt).is_zero() {
                    continue;
                }
            }
        }
        debug_assert!(poly.evaluate_at(&pt).is_zero());
        if excl
            .iter()
            .any(|gens| gens.iter().all(|g| g.evaluate_at(&pt).is_zero()))
        {
            out.skipped_on_components += 1;
            continue;
        }
        out.usable += 1;
        if partials.iter().any(|d| !d.evaluate_at(&pt).is_zero()) {
            out.smooth += 1;
        }
    }
    let needed = trials.div_ceil(10);
    if out.usable < needed {
        return Err(SamplingError::Degenerate {
            found: out.usable,
            attempts: out.attempts,
            needed,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularReport {
    pub polynomial: String,
    pub claimed_components: Vec<IdealReport>,
    pub containment_verified: Vec<bool>,
    pub sampled_smooth_fraction: Option<String>,
    pub sampled_points: Option<usize>,
}

/// Checks that `P` and its partials in `vars` vanish on each component,
/// optionally adding a sampling estimate.
pub fn singular_report(
    p: &Polynomial,
    vars: &[&str],
    components: &[IdealBasis],
    sample: Option<&SmoothnessSample>,
) -> Result<SingularReport, IdealError> {
    let jac = jacobian_ideal(p, vars)?;
    let mut verified = Vec::new();
    let mut reports = Vec::new();
    for c in components {
        let c = c.clone().ensure_groebner()?;
        let ok = vanishes_on_component(jac.generators(), &c)?;
        verified.push(ok);
        reports.push(c.report(ok));
    }
    Ok(SingularReport {
        polynomial: p.to_string(),
        claimed_components: reports,
        containment_verified: verified,
        sampled_smooth_fraction: sample.map(|s| s.fraction().to_string()),
        sampled_points: sample.map(|s| s.usable),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn hyperplane_is_smooth() {
        let r = Ring::new(&["x", "y"], Field::Rational).unwrap();
        let s = sample_smoothness(&r.parse("x").unwrap(), &[], 50, 101, 1).unwrap();
        assert_eq!(s.usable, 50);
        assert_eq!(s.smooth, 50);
    }

    #[test]
    fn doubled_hyperplane_is_singular() {
        let r = Ring::new(&["x"], Field::Rational).unwrap();
        let s = sample_smoothness(&r.parse("x^2").unwrap(), &[], 20, 101, 3).unwrap();
        assert!(s.usable >= 2);
        assert_eq!(s.smooth, 0);
    }

    #[test]
    fn unsatisfiable_is_degenerate() {
        let r = Ring::new(&["x"], Field::Rational).unwrap();
        let e = sample_smoothness(&r.parse("x^2 + 1").unwrap(), &[], 10, 7, 0);
        assert!(matches!(e, Err(SamplingError::Degenerate { .. })));
    }

    #[test]
    fn deterministic_given_seed() {
        let r = Ring::new(&["x", "y", "z"], Field::Rational).unwrap();
        let p = r.parse("x*y - z^2").unwrap();
        let a = sample_smoothness(&p, &[], 40, 101, 9).unwrap();
        let b = sample_smoothness(&p, &[], 40, 101, 9).unwrap();
        assert_eq!(a, b);
    }
}
