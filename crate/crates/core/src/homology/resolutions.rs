//! The explicit periodic resolutions: monomial hypersurfaces `z1...zn = 0`
//! and the node `y^2 = xw`.

use super::{mat_mul, ChainComplex, Direction, FreeModuleMap, HomologyError, ModuleSpec, QuotientRingSpec};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::Field;

/// `k[z1..zn]` and the quotient by `z1*...*zn`.
pub fn monomial_hypersurface(n: usize, field: Field) -> Result<QuotientRingSpec, HomologyError> {
    if n < 2 {
        return Err(HomologyError::TooFewVariables { n, min: 2 });
    }
    let names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    let ring = Ring::new(&names, field).expect("valid names");
    let prod = (0..n).fold(ring.one(), |acc, i| &acc * &Polynomial::variable(&ring, i));
    QuotientRingSpec::new(&ring, vec![prod])
}

/// Product of all `z_l` with `l != i` (1-based).
pub fn complement_product(ring: &Ring, i: usize) -> Polynomial {
    (0..ring.nvars())
        .filter(|&l| l + 1 != i)
        .fold(ring.one(), |acc, l| &acc * &Polynomial::variable(ring, l))
}

/// `... -> S -f-> S -z_i-> S`, with `maps[0] = z_i` and the complement
/// product `f` at odd positions. Generator degrees start at 0 and grow by
/// the degree of each map.
pub fn build_periodic_resolution(
    n: usize,
    i: usize,
    len: usize,
    field: Field,
) -> Result<ChainComplex, HomologyError> {
    if i == 0 || i > n {
        return Err(HomologyError::IndexOutOfRange { index: i, n });
    }
    if len < 2 {
        return Err(HomologyError::LengthTooShort(len));
    }
    let q = monomial_hypersurface(n, field)?;
    let ring = q.ring().clone();
    let zi = Polynomial::variable(&ring, i - 1);
    let f = complement_product(&ring, i);
    let mut maps = Vec::with_capacity(len);
    let mut deg = 0i64;
    for k in 0..len {
        let entry = if k % 2 == 0 { zi.clone() } else { f.clone() };
        let next = deg + entry.degree().expect("nonzero") as i64;
        maps.push(FreeModuleMap::new(&q, vec![vec![entry]], vec![next], vec![deg])?);
        deg = next;
    }
    ChainComplex::from_maps(q, Direction::Chain, maps)
}

/// The matrix `[[y, w], [-x, -y]]` over `k[x, y, w]`.
pub fn odp_matrix(ring: &Ring) -> Vec<Vec<Polynomial>> {
    let v = |s: &str| ring.parse(s).expect("node variables");
    vec![vec![v("y"), v("w")], vec![v("-x"), v("-y")]]
}

/// `k[x, y, w] / (y^2 - xw)`.
pub fn odp_quotient(field: Field) -> Result<QuotientRingSpec, HomologyError> {
    let ring = Ring::new(&["x", "y", "w"], field).expect("valid names");
    let rel = ring.parse("y^2 - x*w").expect("valid source");
    QuotientRingSpec::new(&ring, vec![rel])
}

/// Every differential is `[[y, w], [-x, -y]]`; `F_k` has both generators in
/// degree `k`.
pub fn build_odp_resolution(len: usize, field: Field) -> Result<ChainComplex, HomologyError> {
    if len < 2 {
        return Err(HomologyError::LengthTooShort(len));
    }
    let q = odp_quotient(field)?;
    let a = odp_matrix(q.ring());
    let maps = (0..len)
        .map(|k| {
            let k = k as i64;
            FreeModuleMap::new(&q, a.clone(), vec![k + 1, k + 1], vec![k, k])
        })
        .collect::<Result<Vec<_>, _>>()?;
    ChainComplex::from_maps(q, Direction::Chain, maps)
}

/// True iff `A*B = B*A = p*I` as polynomial identities.
pub fn matrix_factorization_check(
    a: &[Vec<Polynomial>],
    b: &[Vec<Polynomial>],
    p: &Polynomial,
) -> Result<bool, HomologyError> {
    let r = a.len();
    let square = |m: &[Vec<Polynomial>]| m.iter().all(|row| row.len() == m.len());
    if !square(a) || !square(b) || b.len() != r {
        return Err(HomologyError::RankMismatch {
            position: 0,
            detail: format!("need equal square matrices, got {}x? and {}x?", a.len(), b.len()),
        });
    }
    let ring = p.ring();
    let target = |row: usize, col: usize| {
        if row == col {
            p.clone()
        } else {
            ring.zero()
        }
    };
    for prod in [mat_mul(a, b, ring), mat_mul(b, a, ring)] {
        for (row, entries) in prod.iter().enumerate() {
            for (col, e) in entries.iter().enumerate() {
                if *e != target(row, col) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Alternating `A, B, A, ...` over `ambient / (p)`, without grading data.
pub fn two_periodic_complex(
    a: &[Vec<Polynomial>],
    b: &[Vec<Polynomial>],
    p: &Polynomial,
    len: usize,
) -> Result<ChainComplex, HomologyError> {
    let q = QuotientRingSpec::new(p.ring(), vec![p.clone()])?;
    let rank = a.len();
    let maps = (0..len)
        .map(|k| FreeModuleMap::ungraded(&q, if k % 2 == 0 { a.to_vec() } else { b.to_vec() }))
        .collect::<Result<Vec<_>, _>>()?;
    let modules = (0..=len).map(|_| ModuleSpec::free(vec![0; rank])).collect();
    ChainComplex::new(q, Direction::Chain, modules, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{check_complex, truncated_homology};

    #[test]
    fn transcript_of_monomial_resolution() {
        let c = build_periodic_resolution(4, 1, 5, Field::Prime(101)).unwrap();
        assert_eq!(
            c.transcript(),
            "S^1 <--[z1]-- S^1\n\
             S^1 <--[z2*z3*z4]-- S^1\n\
             S^1 <--[z1]-- S^1\n\
             S^1 <--[z2*z3*z4]-- S^1\n\
             S^1 <--[z1]-- S^1\n"
        );
        assert!(check_complex(&c).unwrap());
    }

    #[test]
    fn other_indices() {
        let c = build_periodic_resolution(2, 1, 2, Field::Rational).unwrap();
        assert_eq!(c.transcript(), "S^1 <--[z1]-- S^1\nS^1 <--[z2]-- S^1\n");
        let c = build_periodic_resolution(4, 2, 4, Field::Rational).unwrap();
        let t = c.transcript();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "S^1 <--[z2]-- S^1");
        assert_eq!(lines[1], "S^1 <--[z1*z3*z4]-- S^1");
        assert!(matches!(
            build_periodic_resolution(4, 9, 3, Field::Rational),
            Err(HomologyError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            build_periodic_resolution(4, 1, 1, Field::Rational),
            Err(HomologyError::LengthTooShort(1))
        ));
    }

    #[test]
    fn monomial_resolution_is_exact_inside() {
        let c = build_periodic_resolution(4, 1, 5, Field::Prime(101)).unwrap();
        for pos in 1..5 {
            let h = truncated_homology(&c, pos, 6, Field::Prime(101)).unwrap();
            assert_eq!(h.total, 0, "position {pos}: {h:?}");
        }
        // position 0 sees the cokernel S/(z1)
        let h0 = truncated_homology(&c, 0, 6, Field::Prime(101)).unwrap();
        assert!(h0.total > 0);
    }

    #[test]
    fn node_factorization() {
        let q = odp_quotient(Field::Rational).unwrap();
        let a = odp_matrix(q.ring());
        let p = q.ring().parse("y^2 - x*w").unwrap();
        assert!(matrix_factorization_check(&a, &a, &p).unwrap());
        let wrong = q.ring().parse("y^2 + x*w").unwrap();
        assert!(!matrix_factorization_check(&a, &a, &wrong).unwrap());
        let id = vec![
            vec![q.ring().one(), q.ring().zero()],
            vec![q.ring().zero(), q.ring().one()],
        ];
        assert!(matrix_factorization_check(&id, &id, &q.ring().one()).unwrap());
    }

    #[test]
    fn node_resolution_is_exact_inside() {
        let c = build_odp_resolution(3, Field::Rational).unwrap();
        assert!(check_complex(&c).unwrap());
        assert_eq!(
            c.transcript().lines().next().unwrap(),
            "S^2 <--[[y, w], [-x, -y]]-- S^2"
        );
        for pos in 1..3 {
            let h = truncated_homology(&c, pos, 5, Field::Prime(101)).unwrap();
            assert_eq!(h.total, 0);
        }
    }

    #[test]
    fn zero_map_homology_is_everything() {
        let q = monomial_hypersurface(2, Field::Rational).unwrap();
        let zero = FreeModuleMap::new(&q, vec![vec![q.ring().zero()]], vec![0], vec![0]).unwrap();
        let c = ChainComplex::from_maps(q.clone(), Direction::Chain, vec![zero]).unwrap();
        let h = truncated_homology(&c, 0, 3, Field::Rational).unwrap();
        // k[z1,z2]/(z1 z2) has dims 1,2,2,2 in degrees 0..3
        assert_eq!(h.by_degree, vec![(0, 1), (1, 2), (2, 2), (3, 2)]);
    }
}
