mod common;

use std::collections::BTreeSet;

use common::{arb_gens, arb_perm, closure, cyc, naive_orbit, perm};
use proptest::prelude::*;
use quandles::perm::{compose, conjugate, group_from_generators, groups_equal};
use quandles::{Error, Perm, PermGroup};

#[test]
fn composition_is_left_to_right() {
    // (1 2) then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
    let p = compose(&cyc(3, &[&[0, 1]]), &cyc(3, &[&[1, 2]])).unwrap();
    assert_eq!(p, perm(&[2, 0, 1]));
    let q = perm(&[2, 0, 1, 3]);
    assert_eq!(q.compose(&Perm::identity(4)), q);
    assert!(q.compose(&q.inverse()).is_identity());
    assert!(matches!(
        compose(&Perm::identity(2), &Perm::identity(3)),
        Err(Error::DegreeMismatch { .. })
    ));
}

#[test]
fn conjugation_examples() {
    let c = conjugate(&cyc(3, &[&[0, 1]]), &cyc(3, &[&[0, 2]])).unwrap();
    assert_eq!(c, cyc(3, &[&[1, 2]]));
    let p = perm(&[1, 2, 0]);
    assert_eq!(p.conjugate(&Perm::identity(3)), p);
    assert!(Perm::identity(3).conjugate(&p).is_identity());
}

#[test]
fn group_orders() {
    let s3 = group_from_generators(vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
    assert_eq!(s3.order(), 6);
    assert_eq!(
        group_from_generators(vec![Perm::identity(4)])
            .unwrap()
            .order(),
        1
    );
    assert_eq!(
        group_from_generators(vec![cyc(5, &[&[0, 1, 2, 3, 4]])])
            .unwrap()
            .order(),
        5
    );
    assert!(matches!(
        group_from_generators(vec![]),
        Err(Error::EmptyGenerators)
    ));
    assert!(group_from_generators(vec![Perm::identity(2), Perm::identity(3)]).is_err());
}

#[test]
fn orbit_examples() {
    let g = PermGroup::new(vec![cyc(4, &[&[0, 1, 2]])]).unwrap();
    assert_eq!(g.orbit(0).unwrap().sorted_points(), vec![0, 1, 2]);
    assert_eq!(
        PermGroup::trivial(3).orbit(1).unwrap().sorted_points(),
        vec![1]
    );
    assert_eq!(PermGroup::symmetric(3).orbit(2).unwrap().len(), 3);
    assert!(matches!(g.orbit(4), Err(Error::PointOutOfRange { .. })));
    assert!(PermGroup::symmetric(3).is_transitive());
    assert!(!PermGroup::new(vec![cyc(3, &[&[0, 1]])])
        .unwrap()
        .is_transitive());
}

#[test]
fn symmetric_and_alternating_orders() {
    for n in 1..=7 {
        let f: u128 = (1..=n as u128).product();
        assert_eq!(PermGroup::symmetric(n).order(), f);
        assert_eq!(
            PermGroup::alternating(n).order(),
            if n < 2 { 1 } else { f / 2 }
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compose_applies_left_then_right(p in arb_perm(7), q in arb_perm(7), x in 0usize..7) {
        prop_assert_eq!(p.compose(&q).apply(x), q.apply(p.apply(x)));
    }

    #[test]
    fn conjugate_is_g_inverse_p_g(p in arb_perm(6), g in arb_perm(6)) {
        let c = p.conjugate(&g);
        prop_assert_eq!(&c, &g.inverse().compose(&p).compose(&g));
        prop_assert_eq!(c.cycle_type(), p.cycle_type());
        prop_assert_eq!(p.commutator(&g), p.inverse().compose(&g.inverse()).compose(&p).compose(&g));
    }

    #[test]
    fn order_and_power(p in arb_perm(8)) {
        let k = p.order();
        prop_assert!(p.pow(k).is_identity());
        for d in 1..k {
            prop_assert!(!p.pow(d).is_identity());
        }
        prop_assert_eq!(Perm::parse_images(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(Perm::parse_cycles(8, &p.to_cycle_string()).unwrap(), p);
    }

    #[test]
    fn order_and_elements_match_closure((n, gens) in arb_gens(1, 6, 3)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let naive = closure(n, &gens);
        prop_assert_eq!(g.order(), naive.len() as u128);
        let elems: BTreeSet<Perm> = g.elements().collect();
        prop_assert_eq!(&elems, &naive);
        for p in PermGroup::symmetric(n).elements().take(200) {
            prop_assert_eq!(g.contains(&p), naive.contains(&p));
        }
    }

    #[test]
    fn orbit_stabilizer((n, gens) in arb_gens(1, 6, 3), x in 0usize..6) {
        let x = x % n;
        let g = PermGroup::new(gens.clone()).unwrap();
        let orbit = g.orbit(x).unwrap();
        let pts: BTreeSet<usize> = orbit.sorted_points().into_iter().collect();
        prop_assert_eq!(&pts, &naive_orbit(x, &gens));
        for &y in &pts {
            prop_assert_eq!(orbit.witness(y).unwrap().apply(x), y);
        }
        let stab = g.stabilizer(x).unwrap();
        prop_assert_eq!(g.order(), orbit.len() as u128 * stab.order());
        prop_assert!(stab.generators().iter().all(|s| s.apply(x) == x && g.contains(s)));
        prop_assert_eq!(g.is_transitive(), pts.len() == n);
    }

    #[test]
    fn derived_subgroup_is_normal_and_correct((n, gens) in arb_gens(2, 6, 2)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let d = g.derived_subgroup();
        for a in d.generators() {
            for s in &gens {
                prop_assert!(d.contains(&a.conjugate(s)));
            }
        }
        let elems: Vec<Perm> = closure(n, &gens).into_iter().collect();
        let comms: Vec<Perm> = elems
            .iter()
            .flat_map(|a| elems.iter().map(move |b| a.commutator(b)))
            .collect::<BTreeSet<Perm>>()
            .into_iter()
            .collect();
        prop_assert_eq!(d.order(), closure(n, &comms).len() as u128);
        prop_assert_eq!(g.is_abelian(), d.order() == 1);
    }

    #[test]
    fn normal_closure_contains_and_is_invariant((n, gens) in arb_gens(2, 6, 2), pick in 0usize..1000) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let elems: Vec<Perm> = g.elements().collect();
        let s = elems[pick % elems.len()].clone();
        let nc = g.normal_closure(std::slice::from_ref(&s)).unwrap();
        prop_assert!(nc.contains(&s));
        for a in nc.generators() {
            for h in &gens {
                prop_assert!(nc.contains(&a.conjugate(h)));
            }
        }
        let conjugates: Vec<Perm> = elems
            .iter()
            .map(|h| s.conjugate(h))
            .collect::<BTreeSet<Perm>>()
            .into_iter()
            .collect();
        prop_assert_eq!(nc.order(), closure(n, &conjugates).len() as u128);
    }

    #[test]
    fn center_commutes_with_everything((n, gens) in arb_gens(1, 6, 2)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let center = g.center_elements(10_000).unwrap();
        let elems: Vec<Perm> = g.elements().collect();
        let naive: Vec<Perm> = {
            let mut v: Vec<Perm> = elems
                .iter()
                .filter(|z| elems.iter().all(|h| z.commutes_with(h)))
                .cloned()
                .collect();
            v.sort();
            v
        };
        prop_assert_eq!(&center, &naive);
        // Below the group order the centralizer in S_n is used instead.
        if g.order() > 1 {
            match g.center_elements(g.order() - 1) {
                Ok(c) => prop_assert_eq!(&c, &naive),
                Err(e) => {
                    let too_large = matches!(e, Error::TooLarge { .. });
                    prop_assert!(too_large);
                }
            }
        }
        let _ = n;
    }

    #[test]
    fn equality_ignores_generating_sets((n, gens) in arb_gens(2, 6, 3)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let mut elems: Vec<Perm> = g.elements().collect();
        elems.reverse();
        let h = PermGroup::new(elems).unwrap();
        prop_assert!(groups_equal(&g, &h).unwrap());
        prop_assert!(g.is_subgroup_of(&PermGroup::symmetric(n)));
    }
}
