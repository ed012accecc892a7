use lgmirror::mirror::{
    fibre_report, hom_sheaves, lg2_surface, mir_equation, theta_eliminate, theta_equations, Fibre, GroupDescriptor,
    MirrorModel, TParam,
};
use lgmirror::monodromy::{candidate_fixed_check, candidate_vector, symbolic_triple};
use lgmirror::verify::{run_suite, Status, Suite, VerifyOptions};
use lgmirror::Field;

#[test]
fn model_identities_for_small_n() {
    for n in 2..=5 {
        let m = MirrorModel::new(n, TParam::Symbolic, TParam::Symbolic).unwrap();
        assert!(m.identities_hold().unwrap());
        assert!(m.symmetry_holds().unwrap());
        let pencil = m.pencil().unwrap();
        assert!(m.pencil_dehomogenizes(&pencil).unwrap());
    }
}

#[test]
fn numeric_couplings_keep_the_symmetry() {
    let t = TParam::Value(Field::Rational.from_i64(3));
    let m = MirrorModel::new(3, t, TParam::one()).unwrap();
    assert!(m.identities_hold().unwrap());
    assert!(m.symmetry_holds().unwrap());
}

#[test]
fn zero_fibre_product_matches_equation() {
    let m = MirrorModel::new(4, TParam::Symbolic, TParam::Symbolic).unwrap();
    let r = fibre_report(&m, Fibre::Zero).unwrap();
    assert!(r.product_verified);
}

#[test]
fn theta_relation_specializes() {
    let t = theta_equations().specialize(1, 2, 3, 4).unwrap();
    let e = theta_eliminate(&t).unwrap();
    assert!(!e.cleared.is_zero());
    assert!(!mir_equation().is_zero());
}

#[test]
fn lg2_surface_decomposes() {
    let s = lg2_surface().unwrap();
    assert!(s.fibre_decomposition_verified);
    assert!(s.root_swap_inversion);
    assert!(!s.root_swap_negation);
}

#[test]
fn candidate_vector_is_not_fixed() {
    let (_, _, t3) = symbolic_triple();
    let check = candidate_fixed_check(&t3, &candidate_vector()).unwrap();
    assert_eq!(check.inverse_form_vanishes, [true, false]);
}

#[test]
fn hom_sheaves_off_diagonal() {
    let h = hom_sheaves(4, 1, 2, 3).unwrap();
    assert!(h.computed);
    assert!(matches!(h.group, GroupDescriptor::Modules { .. }));
    assert!(hom_sheaves(4, 2, 2, 3).is_err());
}

#[test]
fn verify_suites_have_no_failures() {
    let opts = VerifyOptions::default();
    for suite in Suite::EACH.iter() {
        let r = run_suite(*suite, &opts).unwrap();
        assert_eq!(r.failed, 0, "{}", r.to_text());
        assert!(r.checks.iter().all(|c| c.status != Status::Fail));
    }
}
