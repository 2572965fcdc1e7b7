use crate::error::{Error, Result};

use super::Perm;

/// Default cap on how many elements the brute-force routines (center,
/// cyclic-quotient test, ...) may iterate over.
pub const DEFAULT_ELEMENT_BOUND: u128 = 1_000_000;

/// One level of a stabilizer chain: a base point, the strong generators that
/// fix all earlier base points, and a transversal of the base point's orbit
/// under those generators (built breadth-first in generator order).
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, gens: Vec<Perm>, degree: usize) -> Level {
        let mut level = Level {
            base,
            gens,
            orbit: Vec::new(),
            transversal: Vec::new(),
        };
        level.recompute(degree);
        level
    }

    fn recompute(&mut self, degree: usize) {
        let (orbit, transversal) = schreier_tree(self.base, &self.gens, degree);
        self.orbit = orbit;
        self.transversal = transversal;
    }

    fn rep(&self, point: usize) -> Option<&Perm> {
        self.transversal[point].as_ref()
    }
}

fn schreier_tree(root: usize, gens: &[Perm], degree: usize) -> (Vec<usize>, Vec<Option<Perm>>) {
    let mut transversal: Vec<Option<Perm>> = vec![None; degree];
    transversal[root] = Some(Perm::identity(degree));
    let mut orbit = vec![root];
    let mut k = 0;
    while k < orbit.len() {
        let b = orbit[k];
        k += 1;
        for s in gens {
            let c = s.apply(b);
            if transversal[c].is_none() {
                let w = transversal[b]
                    .as_ref()
                    .expect("orbit point has a witness")
                    .compose(s);
                transversal[c] = Some(w);
                orbit.push(c);
            }
        }
    }
    (orbit, transversal)
}

/// An orbit together with witnesses: `witness[y]` maps the root to `y`.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub root: usize,
    /// Orbit points in breadth-first discovery order.
    pub points: Vec<usize>,
    witness: Vec<Option<Perm>>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, y: usize) -> bool {
        self.witness.get(y).is_some_and(Option::is_some)
    }

    /// A group element mapping the root to `y`.
    pub fn witness(&self, y: usize) -> Option<&Perm> {
        self.witness.get(y).and_then(Option::as_ref)
    }

    pub fn sorted_points(&self) -> Vec<usize> {
        let mut p = self.points.clone();
        p.sort_unstable();
        p
    }
}

/// A finitely generated permutation group with a stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    levels: Vec<Level>,
    order: u128,
}

/// Builds the group generated by `gens`.
pub fn group_from_generators(gens: Vec<Perm>) -> Result<PermGroup> {
    PermGroup::new(gens)
}

/// Same order and mutual generator membership.
pub fn groups_equal(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    a.equals(b)
}

impl PermGroup {
    pub fn new(gens: Vec<Perm>) -> Result<PermGroup> {
        PermGroup::with_base(gens, &[])
    }

    /// Builds the group with a chain whose base starts with `prefix`.
    pub fn with_base(gens: Vec<Perm>, prefix: &[usize]) -> Result<PermGroup> {
        let degree = gens.first().ok_or(Error::EmptyGenerators)?.degree();
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
        let mut strong: Vec<Perm> = Vec::new();
        for g in &gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let level_gens = strong
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(b, level_gens, degree));
        }
        if !levels.is_empty() {
            let start = levels.len() - 1;
            schreier_sims(&mut levels, degree, start);
        }
        let order = chain_order(&levels)?;
        Ok(PermGroup {
            degree,
            gens,
            levels,
            order,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            gens: vec![Perm::identity(degree)],
            levels: Vec::new(),
            order: 1,
        }
    }

    /// Builds a group from possibly-empty generators.
    pub(crate) fn generated_or_trivial(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        if gens.is_empty() {
            Ok(PermGroup::trivial(degree))
        } else {
            PermGroup::new(gens)
        }
    }

    pub fn symmetric(n: usize) -> PermGroup {
        if n < 2 {
            return PermGroup::trivial(n.max(1));
        }
        let cycle: Vec<usize> = (0..n).collect();
        let gens = vec![
            Perm::from_cycles(n, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(n, &[&cycle]).unwrap(),
        ];
        PermGroup::new(gens).expect("valid generators")
    }

    pub fn alternating(n: usize) -> PermGroup {
        if n < 3 {
            return PermGroup::trivial(n.max(1));
        }
        let gens = (2..n)
            .map(|k| Perm::from_cycles(n, &[&[0, 1, k]]).unwrap())
            .collect();
        PermGroup::new(gens).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Generators with identities removed; empty for the trivial group.
    pub fn nontrivial_generators(&self) -> Vec<Perm> {
        self.gens
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect()
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        self.levels
            .first()
            .map(|l| l.gens.as_slice())
            .unwrap_or(&[])
    }

    /// Lengths of the fundamental orbits along the chain.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Sifts `g` through the chain; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, g: &Perm) -> (Perm, usize) {
        strip_from(&self.levels, g.clone(), 0)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (r, _) = self.strip(g);
        r.is_identity()
    }

    /// The group generated by `self` and `g`; reuses the existing chain.
    pub fn extended(&self, g: &Perm) -> PermGroup {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        let mut gens = self.nontrivial_generators();
        gens.push(g.clone());
        if self.contains(g) {
            let mut same = self.clone();
            same.gens = gens;
            return same;
        }
        let mut levels = self.levels.clone();
        if levels.is_empty() {
            let b = g.first_moved_point().expect("non-identity");
            levels.push(Level::new(b, vec![g.clone()], self.degree));
        } else {
            levels[0].gens.push(g.clone());
            levels[0].recompute(self.degree);
        }
        schreier_sims(&mut levels, self.degree, 0);
        let order = chain_order(&levels).expect("order fits once the parent fit");
        PermGroup {
            degree: self.degree,
            gens,
            levels,
            order,
        }
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.degree {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// The orbit of `x` under the defining generators, with a Schreier tree
    /// built breadth-first in generator order.
    pub fn orbit(&self, x: usize) -> Result<Orbit> {
        self.check_point(x)?;
        let (points, witness) = schreier_tree(x, &self.gens, self.degree);
        Ok(Orbit {
            root: x,
            points,
            witness,
        })
    }

    /// All orbits, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if seen[x] {
                continue;
            }
            let mut orb = vec![x];
            seen[x] = true;
            let mut k = 0;
            while k < orb.len() {
                let b = orb[k];
                k += 1;
                for g in &self.gens {
                    let c = g.apply(b);
                    if !seen[c] {
                        seen[c] = true;
                        orb.push(c);
                    }
                }
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0)
            .map(|o| o.len() == self.degree)
            .unwrap_or(false)
    }

    /// The point stabilizer `G_x`.
    pub fn stabilizer(&self, x: usize) -> Result<PermGroup> {
        self.check_point(x)?;
        let rebased;
        let chain = if self.levels.first().map(|l| l.base) == Some(x) {
            self
        } else {
            rebased = PermGroup::with_base(self.strong_or_gens(), &[x])?;
            &rebased
        };
        Ok(chain.tail())
    }

    /// The stabilizer of the first base point, sharing the rest of the chain.
    fn tail(&self) -> PermGroup {
        if self.levels.len() < 2 {
            return PermGroup::trivial(self.degree);
        }
        let levels: Vec<Level> = self.levels[1..].to_vec();
        let gens = levels[0].gens.clone();
        let order = chain_order(&levels).expect("sub-order fits");
        PermGroup {
            degree: self.degree,
            gens,
            levels,
            order,
        }
    }

    fn strong_or_gens(&self) -> Vec<Perm> {
        let s = self.strong_generators();
        if s.is_empty() {
            vec![Perm::identity(self.degree)]
        } else {
            s.to_vec()
        }
    }

    /// Iterates over all elements as products of transversal representatives.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            group: self,
            idx: vec![0; self.levels.len()],
            done: false,
        }
    }

    /// All elements, or an error if the order exceeds `bound`.
    pub fn elements_bounded(&self, bound: u128) -> Result<Vec<Perm>> {
        self.check_bound("element iteration", bound)?;
        Ok(self.elements().collect())
    }

    fn check_bound(&self, what: &'static str, bound: u128) -> Result<()> {
        if self.order > bound {
            return Err(Error::TooLarge {
                what,
                size: self.order,
                bound,
            });
        }
        Ok(())
    }

    /// Elements commuting with every generator, sorted by image list.
    ///
    /// Groups of order at most `bound` are filtered element by element.
    /// Larger groups go through their centralizer in the symmetric group,
    /// which must itself have at most `bound` elements.
    pub fn center_elements(&self, bound: u128) -> Result<Vec<Perm>> {
        let gens = self.nontrivial_generators();
        let mut out: Vec<Perm> = if self.order <= bound {
            self.elements()
                .filter(|z| gens.iter().all(|g| z.commutes_with(g)))
                .collect()
        } else {
            self.symmetric_centralizer(bound)?
                .into_iter()
                .filter(|z| self.contains(z))
                .collect()
        };
        out.sort();
        Ok(out)
    }

    /// `C_{S_n}(G)` by backtracking: a centralizing permutation is fixed on
    /// each orbit by the image of one point.
    fn symmetric_centralizer(&self, bound: u128) -> Result<Vec<Perm>> {
        let gens = self.nontrivial_generators();
        let orbits: Vec<Orbit> = self
            .orbits()
            .iter()
            .map(|o| self.orbit(o[0]).expect("point in range"))
            .collect();
        let mut sigma = vec![u32::MAX; self.degree];
        let mut used = vec![false; orbits.len()];
        let mut out = Vec::new();
        centralizer_rec(0, &orbits, &gens, &mut sigma, &mut used, &mut out, bound)?;
        Ok(out)
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.center_bounded(DEFAULT_ELEMENT_BOUND)
    }

    pub fn center_bounded(&self, bound: u128) -> Result<PermGroup> {
        let elems = self.center_elements(bound)?;
        Ok(PermGroup::from_element_set(self.degree, &elems))
    }

    /// A group generated greedily by the given members: each element not yet
    /// in the group built so far is added as a generator.
    pub(crate) fn from_element_set(degree: usize, elems: &[Perm]) -> PermGroup {
        let mut g = PermGroup::trivial(degree);
        for e in elems {
            if !g.contains(e) {
                g = g.extended(e);
            }
        }
        g
    }

    /// The smallest normal subgroup containing `elems`.
    pub fn normal_closure(&self, elems: &[Perm]) -> Result<PermGroup> {
        for e in elems {
            if e.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    left: self.degree,
                    right: e.degree(),
                });
            }
            if !self.contains(e) {
                return Err(Error::NotInGroup);
            }
        }
        Ok(self.normal_closure_unchecked(elems))
    }

    fn normal_closure_unchecked(&self, elems: &[Perm]) -> PermGroup {
        let gens = self.nontrivial_generators();
        let mut n = PermGroup::trivial(self.degree);
        let mut queue: Vec<Perm> = Vec::new();
        for e in elems {
            if !n.contains(e) {
                n = n.extended(e);
                queue.push(e.clone());
            }
        }
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k].clone();
            k += 1;
            for g in &gens {
                let c = x.conjugate(g);
                if !n.contains(&c) {
                    n = n.extended(&c);
                    queue.push(c);
                }
            }
        }
        n
    }

    /// `G'`: normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = self.nontrivial_generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_unchecked(&comms)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.nontrivial_generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_metabelian(&self) -> bool {
        self.derived_subgroup().is_abelian()
    }

    /// Whether `G/G'` is cyclic: for each prime `p` dividing `|G/G'|`,
    /// `G'` and the `p`-th powers of the generators have index `p`.
    pub fn has_cyclic_derived_quotient(&self) -> bool {
        let d = self.derived_subgroup();
        let mut m = self.order / d.order;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                while m.is_multiple_of(p) {
                    m /= p;
                }
                let mut h = d.clone();
                for g in &self.gens {
                    let gp = g.pow(p as u64);
                    if !h.contains(&gp) {
                        h = h.extended(&gp);
                    }
                }
                if self.order / h.order != p {
                    return false;
                }
            }
            p += 1;
        }
        true
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(self.order == other.order && self.is_subgroup_of(other) && other.is_subgroup_of(self))
    }

    /// Whether conjugation by every generator of `self` keeps `sub` inside itself.
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        self.gens
            .iter()
            .all(|g| sub.gens.iter().all(|s| sub.contains(&s.conjugate(g))))
    }
}

fn centralizer_rec(
    i: usize,
    orbits: &[Orbit],
    gens: &[Perm],
    sigma: &mut Vec<u32>,
    used: &mut [bool],
    out: &mut Vec<Perm>,
    bound: u128,
) -> Result<()> {
    if i == orbits.len() {
        if out.len() as u128 >= bound {
            return Err(Error::TooLarge {
                what: "centralizer",
                size: bound + 1,
                bound,
            });
        }
        out.push(Perm::from_images_unchecked(sigma.clone()));
        return Ok(());
    }
    let src = &orbits[i];
    for (j, dst) in orbits.iter().enumerate() {
        if used[j] || dst.len() != src.len() {
            continue;
        }
        for &y in &dst.points {
            for &p in &src.points {
                sigma[p] = src.witness(p).expect("orbit point").apply(y) as u32;
            }
            let commutes = src.points.iter().all(|&p| {
                gens.iter()
                    .all(|g| sigma[g.apply(p)] as usize == g.apply(sigma[p] as usize))
            });
            if commutes {
                used[j] = true;
                centralizer_rec(i + 1, orbits, gens, sigma, used, out, bound)?;
                used[j] = false;
            }
        }
    }
    for &p in &src.points {
        sigma[p] = u32::MAX;
    }
    Ok(())
}

fn strip_from(levels: &[Level], mut g: Perm, start: usize) -> (Perm, usize) {
    for (l, level) in levels.iter().enumerate().skip(start) {
        let b = g.apply(level.base);
        match level.rep(b) {
            None => return (g, l),
            Some(u) => {
                // g u⁻¹ fixes the base point.
                g = g.compose(&u.inverse());
            }
        }
    }
    (g, levels.len())
}

/// Deterministic Schreier–Sims: verify levels bottom-up, and whenever a
/// Schreier generator fails to sift, add the residue as a strong generator
/// at the failing level and resume verification from there.
fn schreier_sims(levels: &mut Vec<Level>, degree: usize, start: usize) {
    let mut i = start as isize;
    while i >= 0 {
        let iu = i as usize;
        match failing_schreier_generator(levels, iu) {
            Some((r, j)) => {
                if j == levels.len() {
                    let b = r.first_moved_point().expect("non-identity residue");
                    levels.push(Level::new(b, Vec::new(), degree));
                }
                for level in &mut levels[iu + 1..=j] {
                    level.gens.push(r.clone());
                    level.recompute(degree);
                }
                i = j as isize;
            }
            None => i -= 1,
        }
    }
}

fn failing_schreier_generator(levels: &[Level], i: usize) -> Option<(Perm, usize)> {
    let level = &levels[i];
    for &b in &level.orbit {
        let ub = level.rep(b).expect("orbit point");
        for s in &level.gens {
            let bs = s.apply(b);
            let ubs = level.rep(bs).expect("orbit closed");
            let h = ub.compose(s).compose(&ubs.inverse());
            if h.is_identity() {
                continue;
            }
            let (r, j) = strip_from(levels, h, i + 1);
            if !r.is_identity() {
                return Some((r, j));
            }
        }
    }
    None
}

fn chain_order(levels: &[Level]) -> Result<u128> {
    let mut order: u128 = 1;
    for l in levels {
        order = order
            .checked_mul(l.orbit.len() as u128)
            .ok_or(Error::TooLarge {
                what: "group order",
                size: u128::MAX,
                bound: u128::MAX,
            })?;
    }
    Ok(order)
}

/// Iterator over group elements, odometer-style over the chain's transversals.
pub struct Elements<'a> {
    group: &'a PermGroup,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        if self.done {
            return None;
        }
        let levels = &self.group.levels;
        // g = u_{m-1} ... u_1 u_0, deepest level applied first.
        let mut acc = Perm::identity(self.group.degree);
        for l in (0..levels.len()).rev() {
            let p = levels[l].orbit[self.idx[l]];
            acc = acc.compose(levels[l].rep(p).expect("orbit point"));
        }
        let mut l = levels.len();
        loop {
            if l == 0 {
                self.done = true;
                break;
            }
            l -= 1;
            self.idx[l] += 1;
            if self.idx[l] < levels[l].orbit.len() {
                break;
            }
            self.idx[l] = 0;
        }
        Some(acc)
    }
}
