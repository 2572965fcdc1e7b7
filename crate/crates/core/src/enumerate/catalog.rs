//! Transitive permutation groups up to conjugacy in `S_n`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Largest degree the built-in generator handles.
pub const BUILTIN_MAX_DEGREE: usize = 8;

/// Transitive groups of one degree, pairwise non-conjugate, in canonical order.
#[derive(Clone, Debug)]
pub struct Catalog {
    degree: usize,
    groups: Vec<PermGroup>,
}

impl Catalog {
    /// Checks degrees and transitivity; ids in errors are 1-based.
    pub fn new(degree: usize, groups: Vec<PermGroup>) -> Result<Catalog> {
        for (i, g) in groups.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if !g.is_transitive() {
                return Err(Error::NonTransitiveGroup(i + 1));
            }
        }
        Ok(Catalog { degree, groups })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn groups(&self) -> &[PermGroup] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("catalog {} {}\n", self.degree, self.groups.len());
        for (i, g) in self.groups.iter().enumerate() {
            let gens = g.generators();
            let _ = writeln!(s, "group {} {}", i + 1, gens.len());
            for p in gens {
                let _ = writeln!(s, "{p}");
            }
        }
        s
    }

    /// Parses and validates a catalog. Conjugate duplicates are an error up
    /// to the built-in degree; above it, groups sharing all cheap invariants
    /// are reported as warnings.
    pub fn parse(text: &str) -> Result<(Catalog, Vec<String>)> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let (ln, header) = lines
            .next()
            .ok_or_else(|| perr(1, "empty catalog".into()))?;
        let w: Vec<&str> = header.split_whitespace().collect();
        if w.len() != 3 || w[0] != "catalog" {
            return Err(perr(ln, "expected `catalog <degree> <count>`".into()));
        }
        let num = |s: &str, line: usize| {
            s.parse::<usize>()
                .map_err(|_| perr(line, format!("bad number `{s}`")))
        };
        let degree = num(w[1], ln)?;
        let count = num(w[2], ln)?;
        if degree == 0 {
            return Err(perr(ln, "degree must be positive".into()));
        }
        let mut groups = Vec::with_capacity(count);
        for id in 1..=count {
            let (ln, head) = lines
                .next()
                .ok_or_else(|| perr(text.lines().count() + 1, format!("missing group {id}")))?;
            let w: Vec<&str> = head.split_whitespace().collect();
            if w.len() != 3 || w[0] != "group" {
                return Err(perr(ln, "expected `group <id> <ngens>`".into()));
            }
            if num(w[1], ln)? != id {
                return Err(perr(ln, format!("expected group id {id}")));
            }
            let ngens = num(w[2], ln)?;
            if ngens == 0 {
                return Err(perr(ln, "a group needs at least one generator".into()));
            }
            let mut gens = Vec::with_capacity(ngens);
            for _ in 0..ngens {
                let (ln, line) = lines
                    .next()
                    .ok_or_else(|| perr(text.lines().count() + 1, "missing generator".into()))?;
                let p = Perm::parse_images(line).map_err(|e| perr(ln, e.to_string()))?;
                if p.degree() != degree {
                    return Err(perr(
                        ln,
                        format!("generator has degree {}, expected {degree}", p.degree()),
                    ));
                }
                gens.push(p);
            }
            groups.push(PermGroup::new(gens)?);
        }
        if let Some((ln, extra)) = lines.find(|(_, l)| !l.is_empty()) {
            return Err(perr(ln, format!("unexpected trailing content `{extra}`")));
        }
        let catalog = Catalog::new(degree, groups)?;
        let warnings = catalog.check_duplicates()?;
        Ok((catalog, warnings))
    }

    fn check_duplicates(&self) -> Result<Vec<String>> {
        let mut warnings = Vec::new();
        let mut by_key: HashMap<(u128, Vec<usize>), Vec<usize>> = HashMap::new();
        for (i, g) in self.groups.iter().enumerate() {
            by_key
                .entry((g.order(), stabilizer_orbit_lengths(g)))
                .or_default()
                .push(i);
        }
        let mut buckets: Vec<Vec<usize>> = by_key.into_values().filter(|v| v.len() > 1).collect();
        buckets.sort();
        for bucket in buckets {
            if self.degree <= BUILTIN_MAX_DEGREE {
                let data: Vec<SubgroupData> = bucket
                    .iter()
                    .map(|&i| SubgroupData::new(self.groups[i].clone()))
                    .collect();
                for a in 0..data.len() {
                    for b in a + 1..data.len() {
                        if data[a].key == data[b].key
                            && conjugator(&data[a].group, &data[b]).is_some()
                        {
                            return Err(Error::CatalogDuplicate(bucket[a] + 1, bucket[b] + 1));
                        }
                    }
                }
            } else {
                let ids: Vec<String> = bucket.iter().map(|i| (i + 1).to_string()).collect();
                warnings.push(format!(
                    "groups {} share order and point-stabilizer orbit lengths; conjugacy not checked above degree {}",
                    ids.join(", "),
                    BUILTIN_MAX_DEGREE
                ));
            }
        }
        Ok(warnings)
    }

    pub fn load(path: &Path) -> Result<(Catalog, Vec<String>)> {
        Catalog::parse(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

/// Sorted orbit lengths of the stabilizer of point 0, a conjugacy invariant
/// of transitive groups.
fn stabilizer_orbit_lengths(g: &PermGroup) -> Vec<usize> {
    let stab = g.stabilizer(0).expect("point 0 exists");
    let mut lens: Vec<usize> = stab.orbits().iter().map(Vec::len).collect();
    lens.sort_unstable();
    lens
}

/// Position of `p` in the lexicographic order of `S_n`.
fn rank(p: &Perm) -> usize {
    let img = p.raw();
    let n = img.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = img[i + 1..].iter().filter(|&&v| v < img[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

/// Membership set over `S_n` indexed by [`rank`].
#[derive(Clone)]
struct ElemSet {
    bits: Vec<u64>,
}

impl ElemSet {
    fn new(size: usize) -> ElemSet {
        ElemSet {
            bits: vec![0; size.div_ceil(64)],
        }
    }

    fn insert(&mut self, r: usize) {
        self.bits[r / 64] |= 1 << (r % 64);
    }

    fn contains(&self, r: usize) -> bool {
        self.bits[r / 64] >> (r % 64) & 1 == 1
    }
}

type Key = (u128, Vec<usize>, Vec<(Vec<usize>, usize)>);

/// A subgroup of a small symmetric group with its elements and invariants.
struct SubgroupData {
    group: PermGroup,
    elements: Vec<Perm>,
    set: ElemSet,
    key: Key,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn orbit_lengths(g: &PermGroup) -> Vec<usize> {
    let mut l: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
    l.sort_unstable();
    l
}

impl SubgroupData {
    fn new(group: PermGroup) -> SubgroupData {
        let n = group.degree();
        let elements: Vec<Perm> = group.elements().collect();
        let mut set = ElemSet::new(factorial(n));
        let mut hist: HashMap<Vec<usize>, usize> = HashMap::new();
        for e in &elements {
            set.insert(rank(e));
            *hist.entry(e.cycle_type()).or_default() += 1;
        }
        let mut hist: Vec<(Vec<usize>, usize)> = hist.into_iter().collect();
        hist.sort();
        let key = (group.order(), orbit_lengths(&group), hist);
        SubgroupData {
            group,
            elements,
            set,
            key,
        }
    }

    fn contains(&self, p: &Perm) -> bool {
        self.set.contains(rank(p))
    }
}

/// `|C_{S_n}(p)|` for a permutation of the given cycle type.
fn centralizer_size(cycle_type: &[usize]) -> u128 {
    let mut counts: HashMap<usize, u128> = HashMap::new();
    for &l in cycle_type {
        *counts.entry(l).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(l, m)| (l as u128).pow(m as u32) * (1..=m).product::<u128>())
        .product()
}

/// All cycles of `p`, fixed points included, each starting at its least point.
fn all_cycles(p: &Perm) -> Vec<Vec<usize>> {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut c = vec![s];
        seen[s] = true;
        let mut x = p.apply(s);
        while x != s {
            seen[x] = true;
            c.push(x);
            x = p.apply(x);
        }
        out.push(c);
    }
    out
}

/// Calls `visit` with every `σ` such that `σ⁻¹aσ = b`; stops when it returns false.
fn for_each_conjugator(a: &Perm, b: &Perm, visit: &mut impl FnMut(&Perm) -> bool) {
    let n = a.degree();
    let ca = all_cycles(a);
    let cb = all_cycles(b);
    let mut used = vec![false; cb.len()];
    let mut sigma = vec![0u32; n];
    fn rec(
        i: usize,
        ca: &[Vec<usize>],
        cb: &[Vec<usize>],
        used: &mut [bool],
        sigma: &mut [u32],
        visit: &mut impl FnMut(&Perm) -> bool,
    ) -> bool {
        if i == ca.len() {
            return visit(&Perm::from_images_unchecked(sigma.to_vec()));
        }
        let src = &ca[i];
        for j in 0..cb.len() {
            if used[j] || cb[j].len() != src.len() {
                continue;
            }
            used[j] = true;
            let l = src.len();
            for off in 0..l {
                for k in 0..l {
                    sigma[src[k]] = cb[j][(k + off) % l] as u32;
                }
                if !rec(i + 1, ca, cb, used, sigma, visit) {
                    used[j] = false;
                    return false;
                }
            }
            used[j] = false;
        }
        true
    }
    rec(0, &ca, &cb, &mut used, &mut sigma, visit);
}

/// Picks an element of `h` whose cycle type keeps the conjugator search small.
fn pivot(h: &SubgroupData) -> &Perm {
    let cost = |t: &Vec<usize>| {
        let count = h.key.2.iter().find(|(ct, _)| ct == t).map_or(0, |x| x.1) as u128;
        count * centralizer_size(t)
    };
    h.elements
        .iter()
        .filter(|e| !e.is_identity())
        .min_by_key(|e| (cost(&e.cycle_type()), (*e).clone()))
        .unwrap_or(&h.elements[0])
}

/// Visits every `σ` with `σ⁻¹Hσ = K` (assumes equal keys).
fn for_each_group_conjugator(
    h: &SubgroupData,
    k: &SubgroupData,
    visit: &mut impl FnMut(&Perm) -> bool,
) {
    let a = pivot(h).clone();
    let t = a.cycle_type();
    let gens = h.group.nontrivial_generators();
    for b in k.elements.iter().filter(|b| b.cycle_type() == t) {
        let mut go_on = true;
        for_each_conjugator(&a, b, &mut |s| {
            if gens.iter().all(|g| k.contains(&g.conjugate(s))) {
                go_on = visit(s);
            }
            go_on
        });
        if !go_on {
            return;
        }
    }
}

/// Some `σ` with `σ⁻¹Hσ = K`, using only generators of `H` (`|H| = |K|` assumed).
fn conjugator(h: &PermGroup, k: &SubgroupData) -> Option<Perm> {
    let gens = h.nontrivial_generators();
    let count = |t: &Vec<usize>| k.key.2.iter().find(|(ct, _)| ct == t).map_or(0, |x| x.1) as u128;
    let mut best: Option<(u128, &Perm, Vec<usize>)> = None;
    for g in &gens {
        let t = g.cycle_type();
        let c = count(&t);
        if c == 0 {
            return None;
        }
        let cost = c * centralizer_size(&t);
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, g, t));
        }
    }
    let Some((_, a, t)) = best else {
        return Some(Perm::identity(h.degree()));
    };
    let mut found = None;
    for b in k.elements.iter().filter(|b| b.cycle_type() == t) {
        for_each_conjugator(a, b, &mut |s| {
            if gens.iter().all(|g| k.contains(&g.conjugate(s))) {
                found = Some(s.clone());
            }
            found.is_none()
        });
        if found.is_some() {
            break;
        }
    }
    found
}

fn normalizer(h: &SubgroupData) -> PermGroup {
    let mut n = h.group.clone();
    for_each_group_conjugator(h, h, &mut |s| {
        if !n.contains(s) {
            n = n.extended(s);
        }
        true
    });
    n
}

fn is_prime_power(mut m: usize) -> bool {
    if m < 2 {
        return false;
    }
    let p = (2..=m).find(|d| m.is_multiple_of(*d)).expect("m >= 2");
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Cyclic subgroups of `S_n` of prime-power order, each given by its least
/// generator, with a lookup from element rank to subgroup id.
struct CyclicSubgroups {
    gens: Vec<Perm>,
    id_of_rank: Vec<u32>,
}

impl CyclicSubgroups {
    fn new(n: usize) -> CyclicSubgroups {
        let mut elems: Vec<Perm> = PermGroup::symmetric(n).elements().collect();
        elems.sort();
        let mut id_of_rank = vec![u32::MAX; elems.len()];
        let mut gens = Vec::new();
        for (r, g) in elems.iter().enumerate() {
            debug_assert_eq!(rank(g), r);
            if id_of_rank[r] != u32::MAX {
                continue;
            }
            let m = g.order() as usize;
            if !is_prime_power(m) {
                continue;
            }
            let id = gens.len() as u32;
            for k in (1..m).filter(|k| crate::families::gcd(*k, m) == 1) {
                id_of_rank[rank(&g.pow(k as u64))] = id;
            }
            gens.push(g.clone());
        }
        CyclicSubgroups { gens, id_of_rank }
    }

    fn id(&self, p: &Perm) -> usize {
        self.id_of_rank[rank(p)] as usize
    }
}

/// Representatives of all conjugacy classes of subgroups of `S_n`.
///
/// Starting from the trivial group, each class representative `H` is
/// extended by one cyclic subgroup of prime-power order not in `H`, taking
/// one from each orbit of `N(H)`; every subgroup is generated by its
/// prime-power elements, so every class is reached.
pub fn subgroup_classes(n: usize) -> Result<Vec<PermGroup>> {
    if n == 0 || n > BUILTIN_MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "built-in subgroup classes exist for degrees 1..={BUILTIN_MAX_DEGREE}, not {n}"
        )));
    }
    let cyclic = CyclicSubgroups::new(n);
    let mut classes: Vec<SubgroupData> = vec![SubgroupData::new(PermGroup::trivial(n))];
    let mut buckets: HashMap<(u128, Vec<usize>), Vec<usize>> = HashMap::new();
    buckets.insert((1, vec![1; n]), vec![0]);
    let mut i = 0;
    while i < classes.len() {
        let norm_gens = normalizer(&classes[i]).nontrivial_generators();
        let mut seen = vec![false; cyclic.gens.len()];
        for c in 0..cyclic.gens.len() {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            let mut queue = vec![c];
            let mut k = 0;
            while k < queue.len() {
                let g = &cyclic.gens[queue[k]];
                k += 1;
                for s in &norm_gens {
                    let d = cyclic.id(&g.conjugate(s));
                    if !seen[d] {
                        seen[d] = true;
                        queue.push(d);
                    }
                }
            }
            let g = &cyclic.gens[c];
            if classes[i].contains(g) {
                continue;
            }
            let ext = classes[i].group.extended(g);
            let bucket_key = (ext.order(), orbit_lengths(&ext));
            let bucket = buckets.entry(bucket_key).or_default();
            if bucket
                .iter()
                .any(|&j| conjugator(&ext, &classes[j]).is_some())
            {
                continue;
            }
            bucket.push(classes.len());
            classes.push(SubgroupData::new(ext));
        }
        i += 1;
    }
    Ok(classes
        .into_iter()
        .map(|d| canonical_generators(&d))
        .collect())
}

/// The group regenerated greedily from its lexicographically sorted elements.
fn canonical_generators(d: &SubgroupData) -> PermGroup {
    let n = d.group.degree();
    let mut sorted = d.elements.clone();
    sorted.sort();
    let mut cur = PermGroup::trivial(n);
    let mut gens = Vec::new();
    for e in &sorted {
        if !cur.contains(e) {
            cur = cur.extended(e);
            gens.push(e.clone());
        }
    }
    if gens.is_empty() {
        gens.push(Perm::identity(n));
    }
    PermGroup::new(gens).expect("nonempty generators")
}

/// All transitive subgroups of `S_n` up to conjugacy, sorted by order and
/// then by generator image lists.
///
/// Computed once per degree and cached for the life of the process.
pub fn builtin_catalog(n: usize) -> Result<Catalog> {
    static CACHE: [OnceLock<Catalog>; BUILTIN_MAX_DEGREE + 1] =
        [const { OnceLock::new() }; BUILTIN_MAX_DEGREE + 1];
    if n == 0 || n > BUILTIN_MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "built-in catalogs exist for degrees 1..={BUILTIN_MAX_DEGREE}, not {n}"
        )));
    }
    if let Some(c) = CACHE[n].get() {
        return Ok(c.clone());
    }
    let c = compute_builtin_catalog(n)?;
    Ok(CACHE[n].get_or_init(|| c).clone())
}

fn compute_builtin_catalog(n: usize) -> Result<Catalog> {
    let mut groups: Vec<PermGroup> = subgroup_classes(n)?
        .into_iter()
        .filter(PermGroup::is_transitive)
        .collect();
    groups.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.generators().cmp(b.generators()))
    });
    Catalog::new(n, groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_lexicographic_order() {
        let mut elems: Vec<Perm> = PermGroup::symmetric(4).elements().collect();
        elems.sort();
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(rank(e), i);
        }
    }

    #[test]
    fn conjugators_conjugate() {
        let a = Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        let b = Perm::from_cycles(5, &[&[4, 2], &[1, 3, 0]]).unwrap();
        let mut count = 0;
        for_each_conjugator(&a, &b, &mut |s| {
            assert_eq!(a.conjugate(s), b);
            count += 1;
            true
        });
        assert_eq!(count as u128, centralizer_size(&a.cycle_type()));
    }

    #[test]
    fn small_subgroup_class_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| subgroup_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 19]);
    }

    #[test]
    fn small_transitive_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| builtin_catalog(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 5]);
    }

    #[test]
    fn text_round_trip() {
        let c = builtin_catalog(4).unwrap();
        let (back, warnings) = Catalog::parse(&c.to_text()).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(back.to_text(), c.to_text());
    }

    #[test]
    fn duplicates_and_intransitive_groups_are_rejected() {
        let dup = "catalog 3 2\ngroup 1 1\n2 3 1\ngroup 2 1\n3 1 2\n";
        assert_eq!(
            Catalog::parse(dup).unwrap_err(),
            Error::CatalogDuplicate(1, 2)
        );
        let intrans = "catalog 3 1\ngroup 1 1\n2 1 3\n";
        assert_eq!(
            Catalog::parse(intrans).unwrap_err(),
            Error::NonTransitiveGroup(1)
        );
        let bad = "catalog 3 1\ngroup 1 1\n2 1\n";
        assert!(matches!(
            Catalog::parse(bad),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
