use std::collections::HashMap;

use lgmirror::homology::{
    build_periodic_resolution, check_complex, ext_groups, matrix_factorization_check, two_periodic_complex,
};
use lgmirror::ideal::ideal_quotient;
use lgmirror::{Field, IdealBasis, Monomial, Polynomial, Ring, Scalar};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn ring(field: Field) -> Ring {
    Ring::new(&VARS, field).unwrap()
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(101))]
}

fn terms(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec(([0..=max_exp, 0..=max_exp, 0..=max_exp], -6i64..=6), 0..=max_terms)
}

fn build(r: &Ring, t: &[([u32; 3], i64)]) -> Polynomial {
    let f = r.field();
    Polynomial::from_terms(
        r,
        t.iter().map(|(e, c)| (Monomial::from_exps(e.to_vec()), f.from_i64(*c))),
    )
}

fn point(f: Field, v: &[i64; 3]) -> HashMap<String, Scalar> {
    VARS.iter().zip(v).map(|(n, x)| (n.to_string(), f.from_i64(*x))).collect()
}

proptest! {
    #[test]
    fn ring_axioms(f in field_strategy(), a in terms(3, 5), b in terms(3, 5), c in terms(3, 5)) {
        let r = ring(f);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &r.one(), a.clone());
        prop_assert_eq!(&a + &(-&a), r.zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in field_strategy(), a in terms(3, 5), b in terms(3, 5), v in [-4i64..=4, -4i64..=4, -4i64..=4]) {
        let r = ring(f);
        let (a, b) = (build(&r, &a), build(&r, &b));
        let p = point(f, &v);
        let ea = a.evaluate(&p).unwrap();
        let eb = b.evaluate(&p).unwrap();
        prop_assert_eq!((&a * &b).evaluate(&p).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(&p).unwrap(), &ea + &eb);
    }

    #[test]
    fn partial_derivatives_commute(f in field_strategy(), a in terms(4, 6), b in terms(3, 4)) {
        let r = ring(f);
        let (a, b) = (build(&r, &a), build(&r, &b));
        let dxy = a.partial_derivative("x").unwrap().partial_derivative("y").unwrap();
        let dyx = a.partial_derivative("y").unwrap().partial_derivative("x").unwrap();
        prop_assert_eq!(dxy, dyx);
        let lhs = (&a * &b).partial_derivative("z").unwrap();
        let rhs = &(&a.partial_derivative("z").unwrap() * &b) + &(&a * &b.partial_derivative("z").unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_then_evaluate(f in field_strategy(), a in terms(3, 5), sx in terms(2, 3), sy in terms(2, 3), v in [-3i64..=3, -3i64..=3, -3i64..=3]) {
        let r = ring(f);
        let a = build(&r, &a);
        let (sx, sy) = (build(&r, &sx), build(&r, &sy));
        let p = point(f, &v);
        let substituted = a.substitute(&[("x", sx.clone()), ("y", sy.clone())]).unwrap();
        let mut q = p.clone();
        q.insert("x".into(), sx.evaluate(&p).unwrap());
        q.insert("y".into(), sy.evaluate(&p).unwrap());
        prop_assert_eq!(substituted.evaluate(&p).unwrap(), a.evaluate(&q).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(f in field_strategy(), gens in prop::collection::vec(terms(2, 3), 1..=3), p in terms(3, 5), m in terms(2, 3)) {
        let r = ring(f);
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = IdealBasis::new(&r, gens.clone()).unwrap().ensure_groebner().unwrap();
        let p = build(&r, &p);
        let nf = ideal.normal_form(&p).unwrap();
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(ideal.contains(&(&p - &nf)).unwrap());
        let m = build(&r, &m);
        for g in &gens {
            prop_assert!(ideal.contains(&(&m * g)).unwrap());
        }
    }

    #[test]
    fn groebner_basis_generates_the_same_ideal(f in field_strategy(), gens in prop::collection::vec(terms(2, 3), 1..=3)) {
        let r = ring(f);
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = IdealBasis::new(&r, gens.clone()).unwrap().ensure_groebner().unwrap();
        let gb = ideal.groebner().unwrap().elements().to_vec();
        let from_gb = IdealBasis::new(&r, gb.clone()).unwrap().ensure_groebner().unwrap();
        for g in &gens {
            prop_assert!(from_gb.contains(g).unwrap());
        }
        for g in &gb {
            prop_assert!(ideal.contains(g).unwrap());
        }
    }

    #[test]
    fn monomial_quotient_matches_divisibility(gens in prop::collection::vec([0u32..=3, 0u32..=3, 0u32..=3], 1..=3), f in [0u32..=3, 0u32..=3, 0u32..=3]) {
        let r = ring(Field::Rational);
        let one = Field::Rational.one();
        let gens: Vec<Monomial> = gens.iter().map(|e| Monomial::from_exps(e.to_vec())).collect();
        let f = Monomial::from_exps(f.to_vec());
        let ideal = IdealBasis::new(&r, gens.iter().map(|m| Polynomial::monomial(&r, m.clone(), one.clone())).collect()).unwrap();
        let quot = ideal_quotient(&ideal, &Polynomial::monomial(&r, f.clone(), one.clone())).unwrap().ensure_groebner().unwrap();
        for d in 0..=4 {
            for u in Monomial::all_of_degree(3, d) {
                let want = gens.iter().any(|g| g.divides(&u.mul(&f)));
                let got = quot.contains(&Polynomial::monomial(&r, u, one.clone())).unwrap();
                prop_assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn monomial_factorizations_give_complexes(a in [0u32..=2, 0u32..=2, 0u32..=2], b in [0u32..=2, 0u32..=2, 0u32..=2], len in 2usize..=5) {
        let r = ring(Field::Rational);
        let one = Field::Rational.one();
        let a = Polynomial::monomial(&r, Monomial::from_exps(a.to_vec()), one.clone());
        let b = Polynomial::monomial(&r, Monomial::from_exps(b.to_vec()), one);
        prop_assume!(!(&a * &b).is_constant());
        let p = &a * &b;
        let (ma, mb) = (vec![vec![a]], vec![vec![b]]);
        prop_assert!(matrix_factorization_check(&ma, &mb, &p).unwrap());
        let c = two_periodic_complex(&ma, &mb, &p, len).unwrap();
        prop_assert!(check_complex(&c).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_display_round_trip(f in field_strategy(), t in terms(4, 6)) {
        let r = ring(f);
        let p = build(&r, &t);
        let back = r.parse(&p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn periodic_resolution_is_two_periodic(n in 3usize..=5, i in 1usize..=5, len in 3usize..=6) {
        prop_assume!(i <= n);
        let c = build_periodic_resolution(n, i, len, Field::Prime(101)).unwrap();
        prop_assert!(check_complex(&c).unwrap());
        let maps = c.maps();
        for k in 2..maps.len() {
            prop_assert_eq!(maps[k].matrix(), maps[k - 2].matrix());
        }
        prop_assert_ne!(maps[0].matrix(), maps[1].matrix());
    }

    #[test]
    fn ext_is_symmetric_under_relabelling(n in 3usize..=4, i in 1usize..=4, j in 1usize..=4, shift in 1usize..=3) {
        prop_assume!(i < j && j <= n);
        let rot = |v: usize| (v - 1 + shift) % n + 1;
        let (a, b) = (rot(i), rot(j));
        prop_assume!(a != b);
        let base = ext_groups(n, i, j, 3, n as u32 + 2, Field::Prime(101)).unwrap();
        let moved = ext_groups(n, a.min(b), a.max(b), 3, n as u32 + 2, Field::Prime(101)).unwrap();
        for (x, y) in base.iter().zip(&moved) {
            prop_assert_eq!(x.k, y.k);
            prop_assert_eq!(&x.hilbert, &y.hilbert);
        }
    }
}
