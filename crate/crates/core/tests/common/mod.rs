#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use proptest::prelude::*;
use quandles::families::{automorphisms, AbelianGroup};
use quandles::{Perm, Quandle};

pub fn perm(images: &[usize]) -> Perm {
    Perm::from_images(images.to_vec()).unwrap()
}

pub fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cycles).unwrap()
}

/// Every element of the group generated by `gens`, by breadth-first closure.
pub fn closure(n: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id = Perm::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.compose(g);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

pub fn naive_orbit(x: usize, gens: &[Perm]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([x]);
    let mut queue = vec![x];
    while let Some(y) = queue.pop() {
        for g in gens {
            if seen.insert(g.apply(y)) {
                queue.push(g.apply(y));
            }
        }
    }
    seen
}

/// Table of the quandle `x·y = y⁻¹xy` on the conjugacy class of the
/// `pick`-th element of `⟨gens⟩`.
pub fn conjugation_quandle(n: usize, gens: &[Perm], pick: usize) -> Quandle {
    let group: Vec<Perm> = closure(n, gens).into_iter().collect();
    let seed = &group[pick % group.len()];
    let class: BTreeSet<Perm> = group.iter().map(|g| seed.conjugate(g)).collect();
    let class: Vec<Perm> = class.into_iter().collect();
    let index: BTreeMap<&Perm, usize> = class.iter().enumerate().map(|(i, p)| (p, i)).collect();
    Quandle::from_fn(class.len(), |x, y| index[&class[x].conjugate(&class[y])]).unwrap()
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

/// Degree in `lo..=hi` and `1..=k` generators of that degree.
pub fn arb_gens(lo: usize, hi: usize, k: usize) -> impl Strategy<Value = (usize, Vec<Perm>)> {
    (lo..=hi).prop_flat_map(move |n| (Just(n), prop::collection::vec(arb_perm(n), 1..=k)))
}

/// Affine quandles of order at most 16 with an arbitrary automorphism.
pub fn arb_affine() -> impl Strategy<Value = Quandle> {
    let shapes: Vec<AbelianGroup> = (1..=16)
        .flat_map(AbelianGroup::all_of_order)
        .filter(|a| a.order() != 16 || a.rank() <= 2)
        .collect();
    prop::sample::select(shapes).prop_flat_map(|a| {
        let auts = automorphisms(&a).unwrap();
        prop::sample::select(auts).prop_map(move |f| quandles::families::affine_quandle(&a, &f))
    })
}

/// Conjugation quandles of subgroups of `S_n`, `n ≤ 5`.
pub fn arb_conjugation() -> impl Strategy<Value = Quandle> {
    arb_gens(2, 5, 2).prop_flat_map(|(n, gens)| {
        any::<usize>().prop_map(move |pick| conjugation_quandle(n, &gens, pick))
    })
}

/// A relabeled quandle from either family.
pub fn arb_quandle() -> impl Strategy<Value = Quandle> {
    prop_oneof![arb_affine(), arb_conjugation()].prop_flat_map(|q| {
        let n = q.order();
        arb_perm(n).prop_map(move |phi| q.relabel(&phi).unwrap())
    })
}

/// Connected quandles from the oracle (orders 1 to 7) and a few larger families.
pub fn known_connected() -> &'static [Quandle] {
    static CACHE: OnceLock<Vec<Quandle>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut v: Vec<Quandle> = (1..=7)
            .flat_map(|n| {
                quandles::enumerate::brute_force_quandles(n)
                    .unwrap()
                    .quandles()
                    .cloned()
                    .collect::<Vec<_>>()
            })
            .collect();
        let z2 = AbelianGroup::cyclic(2);
        v.push(quandles::families::galkin(&z2, 1).unwrap());
        v.push(
            quandles::families::sl2_envelope(3)
                .unwrap()
                .quandle()
                .unwrap(),
        );
        v.push(
            quandles::families::two_subsets_envelope(5)
                .unwrap()
                .quandle()
                .unwrap(),
        );
        for r in quandles::families::enumerate_connected_affine(9).unwrap() {
            v.push(r.quandle());
        }
        v
    })
}

/// A known connected quandle with a random relabeling.
pub fn arb_connected() -> impl Strategy<Value = Quandle> {
    prop::sample::select(known_connected().to_vec()).prop_flat_map(|q| {
        let n = q.order();
        arb_perm(n).prop_map(move |phi| q.relabel(&phi).unwrap())
    })
}
