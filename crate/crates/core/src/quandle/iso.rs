//! Backtracking search for quandle homomorphisms that are bijections.

use std::collections::HashMap;

use super::Quandle;
use crate::perm::Perm;

/// Per-element data preserved by every isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Invariant {
    /// Cycle type of `R_x`, decreasing.
    pub cycle_type: Vec<usize>,
    /// Size of the orbit containing `x`.
    pub orbit_size: usize,
    /// `|{y : x·y = x}|`.
    pub row_fixed: usize,
}

pub(crate) fn invariants(q: &Quandle) -> Vec<Invariant> {
    let n = q.order();
    let mut orbit_size = vec![0; n];
    for orb in q.orbits() {
        for &x in &orb {
            orbit_size[x] = orb.len();
        }
    }
    (0..n)
        .map(|x| Invariant {
            cycle_type: q.right_translation(x).cycle_type(),
            orbit_size: orbit_size[x],
            row_fixed: (0..n).filter(|&y| q.op(x, y) == x).count(),
        })
        .collect()
}

const NONE: u32 = u32::MAX;

struct Search<'a> {
    a: &'a Quandle,
    b: &'a Quandle,
    class_a: Vec<u32>,
    class_b: Vec<u32>,
    phi: Vec<u32>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl<'a> Search<'a> {
    /// `None` when the invariant multisets differ.
    fn new(a: &'a Quandle, b: &'a Quandle) -> Option<Search<'a>> {
        if a.order() != b.order() {
            return None;
        }
        let ia = invariants(a);
        let ib = if std::ptr::eq(a, b) {
            ia.clone()
        } else {
            invariants(b)
        };
        let mut sa = ia.clone();
        let mut sb = ib.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        let mut ids: HashMap<Invariant, u32> = HashMap::new();
        for inv in &sa {
            let next = ids.len() as u32;
            ids.entry(inv.clone()).or_insert(next);
        }
        let n = a.order();
        Some(Search {
            a,
            b,
            class_a: ia.iter().map(|i| ids[i]).collect(),
            class_b: ib.iter().map(|i| ids[i]).collect(),
            phi: vec![NONE; n],
            used: vec![false; n],
            trail: Vec::with_capacity(n),
        })
    }

    /// Sets `φ(x) = y` and closes under `φ(s·t) = φ(s)·φ(t)`. On conflict
    /// returns false; the caller undoes to its mark.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            let cur = self.phi[x];
            if cur != NONE {
                if cur as usize != y {
                    return false;
                }
                continue;
            }
            if self.used[y] || self.class_a[x] != self.class_b[y] {
                return false;
            }
            self.phi[x] = y as u32;
            self.used[y] = true;
            self.trail.push(x);
            for i in 0..self.trail.len() - 1 {
                let z = self.trail[i];
                let fz = self.phi[z] as usize;
                queue.push((self.a.op(x, z), self.b.op(y, fz)));
                queue.push((self.a.op(z, x), self.b.op(fz, y)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("nonempty trail");
            self.used[self.phi[x] as usize] = false;
            self.phi[x] = NONE;
        }
    }

    fn next_unassigned(&self) -> Option<usize> {
        self.phi.iter().position(|&v| v == NONE)
    }

    fn current(&self) -> Perm {
        Perm::from_images_unchecked(self.phi.clone())
    }

    fn first(&mut self) -> Option<Perm> {
        let Some(x) = self.next_unassigned() else {
            return Some(self.current());
        };
        for y in 0..self.phi.len() {
            if self.used[y] || self.class_a[x] != self.class_b[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                if let Some(p) = self.first() {
                    return Some(p);
                }
            }
            self.undo(mark);
        }
        None
    }

    fn count(&mut self) -> u128 {
        let Some(x) = self.next_unassigned() else {
            return 1;
        };
        let mut total = 0;
        for y in 0..self.phi.len() {
            if self.used[y] || self.class_a[x] != self.class_b[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                total += self.count();
            }
            self.undo(mark);
        }
        total
    }
}

pub(crate) fn find_isomorphism(a: &Quandle, b: &Quandle) -> Option<Perm> {
    let mut s = Search::new(a, b)?;
    let phi = s.first()?;
    debug_assert!(a.is_isomorphism(b, &phi));
    Some(phi)
}

pub(crate) fn count_automorphisms_fixing(q: &Quandle, x: usize) -> u128 {
    let mut s = Search::new(q, q).expect("same quandle");
    if !s.assign(x, x) {
        return 0;
    }
    s.count()
}

pub(crate) fn automorphism_mapping(q: &Quandle, x: usize, y: usize) -> Option<Perm> {
    let mut s = Search::new(q, q).expect("same quandle");
    if !s.assign(x, y) {
        return None;
    }
    s.first()
}
