mod common;

use coh::classifier::{
    delta_eval, qmor_equal, theta_flat_component, zeta, zeta_constraint, zeta_flat, zeta_flat_obj, zeta_obj,
    zeta_unit, QMor,
};
use coh::free::{fmor_equal, Flavor, FreeMor, FreeMor2, Tuple, Tuple2};
use common::*;
use proptest::prelude::*;

const GENS: [&str; 2] = ["a", "b"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_after_zeta_is_identity(seed in arb_seed(), flavor in arb_flavor()) {
        let mut r = rng(seed);
        let u = random_fmor(&mut r, flavor, &GENS, 6);
        prop_assert!(fmor_equal(&delta_eval(&zeta(&u)).unwrap(), &u).unwrap());
        prop_assert!(fmor_equal(&delta_eval(&zeta_flat(&u)).unwrap(), &u).unwrap());
        let (z, zf) = (zeta(&u), zeta_flat(&u));
        prop_assert_eq!(z.source(), &zeta_obj(u.source()));
        prop_assert_eq!(zf.source(), &zeta_flat_obj(u.source()));
    }

    #[test]
    fn q_is_invertible(seed in arb_seed(), flavor in arb_flavor()) {
        let mut r = rng(seed);
        let w = random_tuple2(&mut r, &GENS, 4, 3);
        let q = QMor::q(flavor, w.clone());
        let qi = QMor::q_inv(flavor, w.clone());
        let round = qi.clone().compose(q.clone()).unwrap();
        prop_assert!(qmor_equal(&round, &QMor::id(flavor, w.clone())).unwrap());
        let other = q.compose(qi).unwrap();
        prop_assert!(qmor_equal(&other, &QMor::id(flavor, Tuple2(vec![w.flatten()]))).unwrap());
    }

    #[test]
    fn q_is_natural(seed in arb_seed(), flavor in arb_flavor()) {
        // q_{w'} ∘ U = ζ(δU) ∘ q_w for U: w → w'
        let mut r = rng(seed);
        let w = random_tuple2(&mut r, &GENS, 3, 3);
        let u = random_fmor2_from(&mut r, flavor, &w);
        let lhs = QMor::q(flavor, u.target().clone()).compose(QMor::free(u.clone())).unwrap();
        let rhs = zeta(&u.flatten().unwrap()).compose(QMor::q(flavor, w)).unwrap();
        prop_assert!(qmor_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn theta_flat_is_natural(seed in arb_seed(), flavor in arb_flavor()) {
        let mut r = rng(seed);
        let w = random_tuple2(&mut r, &GENS, 3, 3);
        let u = random_fmor2_from(&mut r, flavor, &w);
        let lhs = QMor::free(u.clone()).compose(theta_flat_component(flavor, &w)).unwrap();
        let rhs = theta_flat_component(flavor, u.target())
            .compose(zeta_flat(&u.flatten().unwrap()))
            .unwrap();
        prop_assert_eq!(lhs.source(), rhs.source());
        prop_assert_eq!(lhs.target(), rhs.target());
        prop_assert!(qmor_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn delta_is_monoidal(seed in arb_seed(), flavor in arb_flavor()) {
        let mut r = rng(seed);
        let w1 = random_tuple2(&mut r, &GENS, 3, 2);
        let w2 = random_tuple2(&mut r, &GENS, 3, 2);
        let s = QMor::q(flavor, w1.clone()).compose(QMor::free(FreeMor2::identity(flavor, w1))).unwrap();
        let t = QMor::free(random_fmor2_from(&mut r, flavor, &w2));
        let both = s.clone().tensor(t.clone()).unwrap();
        let expect = delta_eval(&s).unwrap().tensor(&delta_eval(&t).unwrap()).unwrap();
        prop_assert!(fmor_equal(&delta_eval(&both).unwrap(), &expect).unwrap());
    }
}

#[test]
fn zeta_constraints_are_identities_after_delta() {
    for flavor in flavors() {
        let x = Tuple::from(["a", "b"]);
        let y = Tuple::from(["b"]);
        let c = zeta_constraint(flavor, &x, &y);
        assert_eq!(c.source(), &Tuple2(vec![x.clone(), y.clone()]));
        assert_eq!(c.target(), &Tuple2(vec![x.concat(&y)]));
        assert!(delta_eval(&c).unwrap().is_identity());
        let unit = zeta_unit(flavor);
        assert!(unit.source().is_empty());
        assert_eq!(unit.target(), &Tuple2(vec![Tuple::empty()]));
    }
}

#[test]
fn adjoined_isomorphisms_are_not_free() {
    // q on ((a), (b)) and the identity on ((a b)) have different sources,
    // so they cannot be compared
    let w = Tuple2(vec![Tuple::from(["a"]), Tuple::from(["b"])]);
    let q = QMor::q(Flavor::Braided, w);
    let id = QMor::id(Flavor::Braided, Tuple2(vec![Tuple::from(["a", "b"])]));
    assert!(qmor_equal(&q, &id).is_err());
}

#[test]
fn mismatched_composition_is_rejected() {
    let a = QMor::q(Flavor::Symmetric, Tuple2(vec![Tuple::from(["a"])]));
    let b = QMor::q(Flavor::Symmetric, Tuple2(vec![Tuple::from(["b"])]));
    assert!(a.compose(b).is_err());
    let s = QMor::id(Flavor::Symmetric, Tuple2::empty());
    let t = QMor::id(Flavor::Braided, Tuple2::empty());
    assert!(s.tensor(t).is_err());
    let u = FreeMor::identity(Flavor::Braided, Tuple::from(["a"]));
    assert!(delta_eval(&zeta(&u)).unwrap().is_identity());
}
