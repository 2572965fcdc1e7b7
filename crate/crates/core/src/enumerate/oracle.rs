//! Brute-force enumeration of connected quandles by their right translations.
//!
//! A quandle is the same thing as a sequence of permutations `R_0 … R_{n−1}`
//! with `R_x(x) = x` and `R_{R_x(a)} = R_x⁻¹ R_a R_x` for all `a, x`. In a
//! connected quandle all `R_x` are conjugate, so after relabeling `R_0` is the
//! canonical permutation of its cycle type. Columns are then assigned one at a
//! time and the constraint is propagated to every column it determines.

use std::collections::HashSet;

use super::algorithm::{Entry, EnumerationResult};
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::quandle::Quandle;

/// Largest order the oracle accepts. Order 10 works but takes minutes.
pub const ORACLE_MAX_ORDER: usize = 10;

/// Orders up to this use a minimal relabeled table as canonical form.
const CANONICAL_TABLE_MAX: usize = 7;

/// Partitions of `m` into non-increasing parts.
fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=m.min(max)).rev() {
            cur.push(p);
            rec(m - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// The permutation fixing 0 whose cycles on `1..n` have the given lengths,
/// laid out on consecutive points.
fn canonical_rep(n: usize, parts: &[usize]) -> Vec<u32> {
    let mut img: Vec<u32> = (0..n as u32).collect();
    let mut start = 1;
    for &l in parts {
        for k in 0..l {
            img[start + k] = (start + (k + 1) % l) as u32;
        }
        start += l;
    }
    img
}

fn cycle_type(img: &[u32]) -> Vec<usize> {
    Perm::from_images_unchecked(img.to_vec()).cycle_type()
}

/// `g⁻¹pg` on raw image lists.
fn conj(p: &[u32], g: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; p.len()];
    for y in 0..p.len() {
        out[g[y] as usize] = g[p[y] as usize];
    }
    out
}

struct Search<'a> {
    n: usize,
    cols: Vec<Option<Vec<u32>>>,
    trail: Vec<usize>,
    candidates: &'a [Vec<Vec<u32>>],
}

impl Search<'_> {
    /// Sets `R_x = p` and everything it forces; false on a contradiction.
    fn assign(&mut self, x: usize, p: Vec<u32>) -> bool {
        let mut stack = vec![(x, p)];
        while let Some((x, p)) = stack.pop() {
            if let Some(cur) = &self.cols[x] {
                if *cur != p {
                    return false;
                }
                continue;
            }
            for &a in &self.trail {
                let ra = self.cols[a].as_ref().expect("assigned");
                stack.push((p[a] as usize, conj(ra, &p)));
                stack.push((ra[x] as usize, conj(&p, ra)));
            }
            self.cols[x] = Some(p);
            self.trail.push(x);
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("nonempty trail");
            self.cols[x] = None;
        }
    }

    fn run(&mut self, visit: &mut impl FnMut(&[Option<Vec<u32>>])) {
        let Some(x) = (0..self.n).find(|&x| self.cols[x].is_none()) else {
            visit(&self.cols);
            return;
        };
        for p in &self.candidates[x] {
            let mark = self.trail.len();
            if self.assign(x, p.clone()) {
                self.run(visit);
            }
            self.undo(mark);
        }
    }
}

/// All permutations of `0..n` with the given cycle type, grouped by a fixed
/// point: `out[x]` lists those fixing `x`, sorted.
fn candidates_by_fixed_point(n: usize, full_type: &[usize]) -> Vec<Vec<Vec<u32>>> {
    let mut out = vec![Vec::new(); n];
    for p in PermGroup::symmetric(n).elements() {
        if p.cycle_type() != full_type {
            continue;
        }
        for (x, bucket) in out.iter_mut().enumerate() {
            if p.apply(x) == x {
                bucket.push(p.raw().to_vec());
            }
        }
    }
    for b in &mut out {
        b.sort();
    }
    out
}

/// The lexicographically least table among all relabelings.
fn canonical_table(q: &Quandle) -> Vec<u32> {
    let n = q.order();
    let t = q.flat();
    let mut best: Option<Vec<u32>> = None;
    let mut phi: Vec<u32> = (0..n as u32).collect();
    let mut cand = vec![0u32; n * n];
    permute_all(&mut phi, 0, &mut |phi| {
        // cand[φx][φy] = φ(t[x][y])
        for x in 0..n {
            for y in 0..n {
                cand[phi[x] as usize * n + phi[y] as usize] = phi[t[x * n + y] as usize];
            }
        }
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand.clone());
        }
    });
    best.expect("at least one relabeling")
}

fn permute_all(items: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Every connected quandle of order `n` up to isomorphism, found without
/// any group theory beyond permutations.
pub fn brute_force_quandles(n: usize) -> Result<EnumerationResult> {
    if n == 0 || n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "oracle order",
            size: n as u128,
            bound: ORACLE_MAX_ORDER as u128,
        });
    }
    if n == 1 {
        let q = Quandle::from_flat(1, vec![0])?;
        return Ok(EnumerationResult::new(1, vec![Entry::new(q, None)]));
    }
    let mut kept: Vec<Quandle> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for parts in partitions(n - 1) {
        if parts.iter().all(|&p| p == 1) {
            continue;
        }
        let r0 = canonical_rep(n, &parts);
        let candidates = candidates_by_fixed_point(n, &cycle_type(&r0));
        let mut search = Search {
            n,
            cols: vec![None; n],
            trail: Vec::new(),
            candidates: &candidates,
        };
        assert!(search.assign(0, r0));
        search.run(&mut |cols| {
            let mut table = vec![0u32; n * n];
            for (y, c) in cols.iter().enumerate() {
                let c = c.as_ref().expect("complete assignment");
                for x in 0..n {
                    table[x * n + y] = c[x];
                }
            }
            let q = Quandle::from_flat_unchecked(n, table);
            if !q.is_connected() {
                return;
            }
            if n <= CANONICAL_TABLE_MAX {
                if seen.insert(canonical_table(&q)) {
                    kept.push(q);
                }
            } else if kept.iter().all(|k| k.are_isomorphic(&q).is_none()) {
                kept.push(q);
            }
        });
    }
    let entries = kept.into_iter().map(|q| Entry::new(q, None)).collect();
    Ok(EnumerationResult::new(n, entries))
}
