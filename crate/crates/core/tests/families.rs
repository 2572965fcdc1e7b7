use std::collections::BTreeSet;

use proptest::prelude::*;
use quandles::families::{
    affine_isomorphic, affine_quandle, automorphisms, enumerate_connected_affine, galkin,
    image_of_one_minus, is_connected_affine, ncycles_envelope, platonic_envelope, psl3_2_envelope,
    sl2_envelope, tuple_envelope_alt, tuple_envelope_sym, two_subsets_envelope, AbelianGroup,
    AutMap, PlatonicOutcome, SmallField, Solid,
};
use quandles::{Error, Quandle};

const AFFINE_COUNTS: [usize; 16] = [1, 0, 1, 1, 3, 0, 5, 2, 8, 0, 9, 1, 11, 0, 3, 9];

fn phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Connected affine tables on every group of order `n`, deduplicated by
/// table isomorphism rather than by conjugacy.
fn affine_by_tables(n: usize) -> Vec<Quandle> {
    let mut out: Vec<Quandle> = Vec::new();
    for a in AbelianGroup::all_of_order(n) {
        for f in automorphisms(&a).unwrap() {
            let q = affine_quandle(&a, &f);
            if q.is_connected() && out.iter().all(|r| r.are_isomorphic(&q).is_none()) {
                out.push(q);
            }
        }
    }
    out
}

fn rmlt_order(q: &Quandle) -> u128 {
    q.rmlt().order()
}

#[test]
fn affine_counts_up_to_sixteen() {
    for n in 1..=16 {
        assert_eq!(
            enumerate_connected_affine(n).unwrap().len(),
            AFFINE_COUNTS[n - 1],
            "n = {n}"
        );
    }
}

#[test]
fn affine_counts_agree_with_table_dedup() {
    for n in 1..=9 {
        let reps = enumerate_connected_affine(n).unwrap();
        let tables = affine_by_tables(n);
        assert_eq!(reps.len(), tables.len(), "n = {n}");
        for r in &reps {
            let q = r.quandle();
            assert!(q.is_connected() && q.is_medial());
            assert_eq!(
                tables
                    .iter()
                    .filter(|t| t.are_isomorphic(&q).is_some())
                    .count(),
                1
            );
        }
    }
}

#[test]
fn prime_and_prime_square_counts() {
    for p in [3usize, 5, 7, 11, 13] {
        assert_eq!(enumerate_connected_affine(p).unwrap().len(), p - 2);
    }
    for p in [2usize, 3] {
        assert_eq!(
            enumerate_connected_affine(p * p).unwrap().len(),
            2 * p * p - 3 * p - 1
        );
    }
    let nine = enumerate_connected_affine(9).unwrap();
    let cyclic = nine.iter().filter(|r| r.group.factors() == [9]).count();
    let square = nine.iter().filter(|r| r.group.factors() == [3, 3]).count();
    assert_eq!((cyclic, square), (3, 5));
}

#[test]
fn automorphism_group_orders() {
    for n in 1..=16 {
        assert_eq!(
            automorphisms(&AbelianGroup::cyclic(n)).unwrap().len(),
            phi(n)
        );
    }
    for p in [2usize, 3] {
        let g = AbelianGroup::new(vec![p, p]).unwrap();
        assert_eq!(automorphisms(&g).unwrap().len(), (p * p - 1) * (p * p - p));
    }
    let g = AbelianGroup::new(vec![2, 2, 2]).unwrap();
    assert_eq!(automorphisms(&g).unwrap().len(), 168);
    let g = AbelianGroup::new(vec![2, 4]).unwrap();
    assert_eq!(automorphisms(&g).unwrap().len(), 8);
}

#[test]
fn isomorphism_criterion_matches_tables() {
    for shape in ["5", "7", "8", "2x4", "3x3", "2x2x2"] {
        let a = AbelianGroup::parse(shape).unwrap();
        let connected: Vec<AutMap> = automorphisms(&a)
            .unwrap()
            .into_iter()
            .filter(|f| is_connected_affine(&a, f))
            .collect();
        for f in connected.iter().take(12) {
            for g in connected.iter().take(12) {
                let by_tables = affine_quandle(&a, f)
                    .are_isomorphic(&affine_quandle(&a, g))
                    .is_some();
                assert_eq!(affine_isomorphic(&a, f, g).unwrap(), by_tables, "{shape}");
            }
        }
    }
    let z4 = AbelianGroup::cyclic(4);
    let id = AutMap::identity(&z4);
    assert_eq!(affine_isomorphic(&z4, &id, &id), Err(Error::NotConnected));
}

#[test]
fn galkin_properties() {
    for shape in ["1", "2", "3", "4", "2x2", "5", "6", "7", "3x3"] {
        let a = AbelianGroup::parse(shape).unwrap();
        let triple_zero = (0..a.order()).all(|x| a.scale(3, x) == 0);
        for u in 0..a.order() {
            let q = galkin(&a, u).unwrap();
            assert_eq!(q.order(), 3 * a.order());
            assert!(q.is_connected(), "{shape} {u}");
            assert_eq!(q.is_latin(), a.order() % 2 == 1, "{shape} {u}");
            assert_eq!(q.is_medial(), triple_zero, "{shape} {u}");
        }
    }
    assert!(galkin(&AbelianGroup::cyclic(3), 3).is_err());
}

#[test]
fn galkin_isomorphism_follows_pointed_groups() {
    for n in 1..=5 {
        for a in AbelianGroup::all_of_order(n) {
            let auts = automorphisms(&a).unwrap();
            let qs: Vec<Quandle> = (0..n).map(|u| galkin(&a, u).unwrap()).collect();
            for u in 0..n {
                for v in 0..n {
                    let pointed = auts.iter().any(|f| f.apply(u) == v);
                    assert_eq!(
                        qs[u].are_isomorphic(&qs[v]).is_some(),
                        pointed,
                        "{:?} {u} {v}",
                        a.factors()
                    );
                }
            }
        }
    }
}

#[test]
fn construction_orders() {
    for n in 2..=6 {
        let q = two_subsets_envelope(n).unwrap().quandle().unwrap();
        assert_eq!(q.order(), n * (n - 1) / 2);
    }
    assert_eq!(ncycles_envelope(4).unwrap().degree(), 6);
    assert_eq!(ncycles_envelope(6).unwrap().degree(), 120);
    assert!(ncycles_envelope(5).is_err());
    for n in 3..=5 {
        let f: usize = (1..=n).product();
        assert_eq!(tuple_envelope_sym(n).unwrap().degree(), f / 2);
    }
    for n in 4..=6 {
        let f: usize = (1..=n).product();
        assert_eq!(tuple_envelope_alt(n).unwrap().degree(), f / 6);
    }
    for q in [2usize, 3, 4, 5, 7, 9] {
        let e = sl2_envelope(q).unwrap();
        assert_eq!(e.degree(), q * q - 1);
        assert_eq!(e.group().order() as usize, q * (q * q - 1));
    }
    assert!(sl2_envelope(6).is_err());
    assert_eq!(psl3_2_envelope().unwrap().degree(), 21);
}

#[test]
fn platonic_solids() {
    for s in Solid::ALL {
        match platonic_envelope(s).unwrap() {
            PlatonicOutcome::Envelope(e) => {
                assert_ne!(s, Solid::Octahedron);
                assert_eq!(e.degree(), s.faces());
                assert_eq!(e.group().order(), s.rotation_group_order());
                assert!(e.quandle().unwrap().is_connected());
            }
            PlatonicOutcome::Obstruction { .. } => assert_eq!(s, Solid::Octahedron),
        }
    }
    let tetra = platonic_envelope(Solid::Tetrahedron).unwrap();
    assert!(tetra.envelope().unwrap().quandle().unwrap().is_medial());
}

#[test]
fn non_affine_quandles_of_order_six() {
    let subsets = two_subsets_envelope(4).unwrap().quandle().unwrap();
    let cycles = ncycles_envelope(4).unwrap().quandle().unwrap();
    assert_eq!(rmlt_order(&subsets), 24);
    assert_eq!(rmlt_order(&cycles), 24);
    assert!(subsets.are_isomorphic(&cycles).is_none());
    let z2 = AbelianGroup::cyclic(2);
    assert!(subsets.are_isomorphic(&galkin(&z2, 0).unwrap()).is_some());
    assert!(cycles.are_isomorphic(&galkin(&z2, 1).unwrap()).is_some());
    let cube = platonic_envelope(Solid::Cube).unwrap();
    assert!(cycles
        .are_isomorphic(&cube.envelope().unwrap().quandle().unwrap())
        .is_some());
}

#[test]
fn geometric_constructions() {
    let sl3 = sl2_envelope(3).unwrap().quandle().unwrap();
    assert_eq!((sl3.order(), rmlt_order(&sl3)), (8, 24));
    let sl4 = sl2_envelope(4).unwrap().quandle().unwrap();
    assert_eq!((sl4.order(), rmlt_order(&sl4)), (15, 60));
    let psl = psl3_2_envelope().unwrap().quandle().unwrap();
    assert_eq!((psl.order(), rmlt_order(&psl)), (21, 168));
    let ten = two_subsets_envelope(5).unwrap().quandle().unwrap();
    assert_eq!(rmlt_order(&ten), 120);
}

#[test]
fn non_affine_quandles_of_order_twelve() {
    let mut qs = Vec::new();
    let z4 = AbelianGroup::cyclic(4);
    for u in 0..3 {
        qs.push(galkin(&z4, u).unwrap());
    }
    let v4 = AbelianGroup::parse("2x2").unwrap();
    qs.push(galkin(&v4, 0).unwrap());
    qs.push(galkin(&v4, v4.parse_element("1x1").unwrap()).unwrap());
    for q in &qs {
        assert_eq!((q.order(), rmlt_order(q)), (12, 96));
        assert!(!q.is_medial());
    }
    let tuples = tuple_envelope_sym(4).unwrap().quandle().unwrap();
    assert_eq!(rmlt_order(&tuples), 24);
    qs.push(tuples);
    let dodeca = platonic_envelope(Solid::Dodecahedron).unwrap();
    let dodeca = dodeca.envelope().unwrap().quandle().unwrap();
    assert_eq!(rmlt_order(&dodeca), 60);
    qs.push(dodeca);
    for i in 0..qs.len() {
        for j in 0..i {
            assert!(qs[i].are_isomorphic(&qs[j]).is_none(), "{i} {j}");
        }
    }
}

#[test]
fn latin_galkin_quandles_of_orders_fifteen_and_twenty_one() {
    for p in [5usize, 7] {
        let a = AbelianGroup::cyclic(p);
        let q0 = galkin(&a, 0).unwrap();
        let q1 = galkin(&a, 1).unwrap();
        assert!(q0.is_latin() && q1.is_latin());
        assert_eq!(rmlt_order(&q0), (6 * p * p) as u128);
        assert!(q0.are_isomorphic(&q1).is_none());
    }
    let s6 = two_subsets_envelope(6).unwrap().quandle().unwrap();
    assert_eq!(rmlt_order(&s6), 720);
}

#[test]
fn small_fields() {
    for q in [2usize, 3, 4, 5, 7, 9, 11, 13, 25, 49] {
        let f = SmallField::new(q).unwrap();
        for a in 1..q {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
        // The multiplicative group is cyclic: some element has order q − 1.
        let has_generator = (1..q).any(|g| {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = f.mul(x, g);
                k += 1;
            }
            k == q - 1
        });
        assert!(has_generator, "GF({q})");
    }
    for q in [6usize, 8, 27, 64] {
        assert!(SmallField::new(q).is_err());
    }
}

fn arb_group_and_map() -> impl Strategy<Value = (AbelianGroup, AutMap)> {
    let shapes: Vec<AbelianGroup> = (1..=16)
        .flat_map(AbelianGroup::all_of_order)
        .filter(|a| a.order() != 16 || a.rank() <= 2)
        .collect();
    prop::sample::select(shapes).prop_flat_map(|a| {
        let auts = automorphisms(&a).unwrap();
        prop::sample::select(auts).prop_map(move |f| (a.clone(), f))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn affine_structure((a, f) in arb_group_and_map()) {
        let t = affine_quandle(&a, &f);
        prop_assert!(t.is_medial());
        prop_assert_eq!(t.dis().order() as usize, image_of_one_minus(&a, &f));
        prop_assert_eq!(t.is_connected(), is_connected_affine(&a, &f));
        let image: BTreeSet<usize> = f.one_minus(&a).into_iter().collect();
        prop_assert_eq!(image.len() == a.order(), t.is_connected());
        if t.is_connected() {
            prop_assert!(t.is_latin());
        }
    }

    #[test]
    fn field_axioms(q in prop::sample::select(vec![4usize, 9, 25, 49]), a in 0usize..49, b in 0usize..49, c in 0usize..49) {
        let f = SmallField::new(q).unwrap();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
    }
}
