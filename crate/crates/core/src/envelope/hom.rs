//! Homogeneous quandles on right cosets `G/H`, with `Hx * Hy = H(xy⁻¹)^f y`.

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::quandle::Quandle;

/// Largest abstract group accepted by [`FiniteGroup`].
pub const FINITE_GROUP_BOUND: usize = 1000;

/// A small group given by its multiplication table. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    size: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    /// Concrete permutations when the group came from a permutation group.
    perms: Option<Vec<Perm>>,
}

impl FiniteGroup {
    /// Checks the group axioms on a full table with identity 0.
    pub fn from_table(size: usize, mul: Vec<u32>) -> Result<FiniteGroup> {
        if size == 0 || size > FINITE_GROUP_BOUND {
            return Err(Error::TooLarge {
                what: "abstract group",
                size: size as u128,
                bound: FINITE_GROUP_BOUND as u128,
            });
        }
        if mul.len() != size * size || mul.iter().any(|&v| v as usize >= size) {
            return Err(Error::Unsupported("malformed multiplication table".into()));
        }
        let m = |a: usize, b: usize| mul[a * size + b] as usize;
        if (0..size).any(|a| m(0, a) != a || m(a, 0) != a) {
            return Err(Error::Unsupported("element 0 is not the identity".into()));
        }
        let mut inv = vec![0u32; size];
        for (a, slot) in inv.iter_mut().enumerate() {
            let Some(b) = (0..size).find(|&b| m(a, b) == 0) else {
                return Err(Error::Unsupported(format!("element {a} has no inverse")));
            };
            *slot = b as u32;
        }
        for a in 0..size {
            for b in 0..size {
                let ab = m(a, b);
                for c in 0..size {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::Unsupported(
                            "multiplication is not associative".into(),
                        ));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            size,
            mul,
            inv,
            perms: None,
        })
    }

    /// The cyclic group `Z_n` written additively.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        FiniteGroup::from_table(n, mul)
    }

    /// Elements of `G` sorted by image list; the identity comes first.
    pub fn from_perm_group(g: &PermGroup) -> Result<FiniteGroup> {
        let mut elems = g.elements_bounded(FINITE_GROUP_BOUND as u128)?;
        elems.sort();
        let size = elems.len();
        let index = |p: &Perm| elems.binary_search(p).expect("closed under products");
        let mut mul = vec![0u32; size * size];
        let mut inv = vec![0u32; size];
        for (a, pa) in elems.iter().enumerate() {
            inv[a] = index(&pa.inverse()) as u32;
            for (b, pb) in elems.iter().enumerate() {
                mul[a * size + b] = index(&pa.compose(pb)) as u32;
            }
        }
        Ok(FiniteGroup {
            size,
            mul,
            inv,
            perms: Some(elems),
        })
    }

    pub fn order(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// The permutation behind element `a`, for groups built from permutations.
    pub fn perm(&self, a: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[a])
    }

    /// Index of a permutation in a group built from permutations.
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.perms.as_ref()?.binary_search(p).ok()
    }

    /// The bijection induced by conjugating with `t`, `a ↦ t⁻¹ a t`, where `t`
    /// normalizes the underlying permutation group.
    pub fn conjugation_map(&self, t: &Perm) -> Result<Vec<usize>> {
        let perms = self
            .perms
            .as_ref()
            .ok_or_else(|| Error::Unsupported("group has no permutation form".into()))?;
        perms
            .iter()
            .map(|p| {
                self.index_of(&p.try_conjugate(t)?)
                    .ok_or(Error::NotAnAutomorphism)
            })
            .collect()
    }
}

/// A triple `(G, H, f)` with `f ∈ Aut(G)` and `H ≤ C_G(f)`.
#[derive(Clone, Debug)]
pub struct HomTriple {
    group: FiniteGroup,
    subgroup: Vec<usize>,
    auto: Vec<usize>,
}

impl HomTriple {
    /// `subgroup` lists the members of `H`; `auto[a]` is the image of `a`.
    pub fn new(group: FiniteGroup, subgroup: Vec<usize>, auto: Vec<usize>) -> Result<HomTriple> {
        let m = group.order();
        if auto.len() != m || auto.iter().any(|&v| v >= m) {
            return Err(Error::NotAnAutomorphism);
        }
        let mut seen = vec![false; m];
        for &v in &auto {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAnAutomorphism);
            }
        }
        for a in 0..m {
            for b in 0..m {
                if auto[group.mul(a, b)] != group.mul(auto[a], auto[b]) {
                    return Err(Error::NotAnAutomorphism);
                }
            }
        }
        let mut member = vec![false; m];
        for &h in &subgroup {
            if h >= m {
                return Err(Error::NotASubgroup);
            }
            member[h] = true;
        }
        if !member[0] {
            return Err(Error::NotASubgroup);
        }
        for &a in &subgroup {
            for &b in &subgroup {
                if !member[group.mul(a, b)] {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        if subgroup.iter().any(|&h| auto[h] != h) {
            return Err(Error::SubgroupNotCentralized);
        }
        let mut subgroup: Vec<usize> = (0..m).filter(|&a| member[a]).collect();
        subgroup.dedup();
        Ok(HomTriple {
            group,
            subgroup,
            auto,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn automorphism(&self) -> &[usize] {
        &self.auto
    }

    /// Coset index of every element; cosets are numbered by their least element.
    pub fn coset_labels(&self) -> (Vec<usize>, Vec<usize>) {
        let g = &self.group;
        let m = g.order();
        let mut label = vec![usize::MAX; m];
        let mut reps = Vec::new();
        for x in 0..m {
            if label[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for &h in &self.subgroup {
                label[g.mul(h, x)] = idx;
            }
        }
        (label, reps)
    }

    /// Condition for the quandle to be latin: `(u⁻¹)^f u ∈ a⁻¹Ha` implies `u ∈ H`.
    pub fn latin_criterion(&self) -> bool {
        let g = &self.group;
        let m = g.order();
        let mut in_h = vec![false; m];
        for &h in &self.subgroup {
            in_h[h] = true;
        }
        (0..m).filter(|&u| !in_h[u]).all(|u| {
            let w = g.mul(self.auto[g.inv(u)], u);
            // w ∈ a⁻¹Ha iff a w a⁻¹ ∈ H.
            (0..m).all(|a| !in_h[g.mul(g.mul(a, w), g.inv(a))])
        })
    }
}

pub fn hom_quandle(t: &HomTriple) -> Quandle {
    let g = &t.group;
    let (label, reps) = t.coset_labels();
    let k = reps.len();
    let mut table = vec![0u32; k * k];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            let xy = g.mul(x, g.inv(y));
            table[i * k + j] = label[g.mul(t.auto[xy], y)] as u32;
        }
    }
    Quandle::from_flat(k, table).expect("coset construction always yields a quandle")
}

/// `(Dis Q, stabilizer of 0 in Dis Q, conjugation by R_0)`.
pub fn minimal_representation(q: &Quandle) -> Result<HomTriple> {
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    let dis = q.dis();
    let fg = FiniteGroup::from_perm_group(&dis)?;
    let stab: Vec<usize> = (0..fg.order())
        .filter(|&a| fg.perm(a).expect("perm form").apply(0) == 0)
        .collect();
    let auto = fg.conjugation_map(&q.right_translation(0))?;
    HomTriple::new(fg, stab, auto)
}
