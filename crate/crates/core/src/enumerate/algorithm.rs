//! Connected quandles of order `n` from a catalog of transitive groups.

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use super::catalog::Catalog;
use crate::envelope::Envelope;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup, DEFAULT_ELEMENT_BOUND};
use crate::quandle::Quandle;

/// Where an enumerated quandle came from: 1-based catalog id and `ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Source {
    pub group_id: usize,
    pub zeta: Perm,
}

/// One connected quandle with its annotations.
#[derive(Clone, Debug)]
pub struct Entry {
    pub quandle: Quandle,
    pub rmlt_order: u128,
    pub dis_order: u128,
    pub latin: bool,
    pub affine: bool,
    pub source: Option<Source>,
}

impl Entry {
    pub fn new(quandle: Quandle, source: Option<Source>) -> Entry {
        Entry {
            rmlt_order: quandle.rmlt().order(),
            dis_order: quandle.dis().order(),
            latin: quandle.is_latin(),
            affine: quandle.is_medial(),
            source,
            quandle,
        }
    }
}

/// Pairwise non-isomorphic connected quandles of one order.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    order: usize,
    entries: Vec<Entry>,
}

/// `(q, ℓ, a)`: connected, latin and affine counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub connected: usize,
    pub latin: usize,
    pub affine: usize,
}

impl fmt::Display for Counts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.connected, self.latin, self.affine)
    }
}

impl EnumerationResult {
    pub fn new(order: usize, entries: Vec<Entry>) -> EnumerationResult {
        EnumerationResult { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn quandles(&self) -> impl Iterator<Item = &Quandle> {
        self.entries.iter().map(|e| &e.quandle)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn summary_tsv(&self) -> String {
        let mut s =
            String::from("index\trmlt_order\tdis_order\tlatin\taffine\tsource_group_id\tzeta\n");
        for (i, e) in self.entries.iter().enumerate() {
            let (gid, zeta) = match &e.source {
                Some(src) => (src.group_id.to_string(), src.zeta.to_string()),
                None => ("-".to_string(), "-".to_string()),
            };
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{gid}\t{zeta}",
                i + 1,
                e.rmlt_order,
                e.dis_order,
                u8::from(e.latin),
                u8::from(e.affine)
            );
        }
        s
    }

    /// Writes `q<order>_<index>.qnd` for each quandle and `summary.tsv`.
    pub fn export(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        for (i, e) in self.entries.iter().enumerate() {
            let name = format!("q{}_{}.qnd", self.order, i + 1);
            std::fs::write(dir.join(name), e.quandle.to_text())?;
        }
        std::fs::write(dir.join("summary.tsv"), self.summary_tsv())?;
        Ok(())
    }

    /// A bijection `i ↦ j` with `self[i] ≅ other[j]`, if one exists.
    pub fn matching(&self, other: &EnumerationResult) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let mut used = vec![false; other.len()];
        let mut out = Vec::with_capacity(self.len());
        for q in self.quandles() {
            let j = (0..other.len())
                .find(|&j| !used[j] && q.are_isomorphic(&other.entries[j].quandle).is_some())?;
            used[j] = true;
            out.push(j);
        }
        Some(out)
    }
}

/// `(q, ℓ, a)` with latin from the table and affine from mediality,
/// cross-checked against the right multiplication group being metabelian.
pub fn classify(result: &EnumerationResult) -> Result<Counts> {
    let mut c = Counts {
        connected: result.len(),
        latin: 0,
        affine: 0,
    };
    for (i, e) in result.entries.iter().enumerate() {
        let medial = e.quandle.is_medial();
        if medial != e.quandle.rmlt().is_metabelian() {
            return Err(Error::Inconsistency(format!(
                "quandle {} of order {}: medial = {medial} but metabelian = {}",
                i + 1,
                result.order,
                !medial
            )));
        }
        c.latin += usize::from(e.quandle.is_latin());
        c.affine += usize::from(medial);
    }
    Ok(c)
}

/// Quandles from one group: every `ζ` in the center of the stabilizer of 0
/// whose normal closure is the whole group, up to isomorphism.
fn quandles_from_group(group: &PermGroup) -> Result<Vec<(Quandle, Perm)>> {
    let n = group.degree();
    if !group.derived_subgroup().is_transitive() || !group.has_cyclic_derived_quotient() {
        return Ok(Vec::new());
    }
    let group = PermGroup::with_base(group.generators().to_vec(), &[0])?;
    let center = group
        .stabilizer(0)?
        .center_elements(DEFAULT_ELEMENT_BOUND)?;
    let mut out: Vec<(Quandle, Perm)> = Vec::new();
    for zeta in center {
        if zeta.is_identity() && n > 1 {
            continue;
        }
        if group.normal_closure(std::slice::from_ref(&zeta))?.order() != group.order() {
            continue;
        }
        let q = Envelope::new_unchecked(group.clone(), zeta.clone()).quandle()?;
        if out.iter().all(|(p, _)| p.are_isomorphic(&q).is_none()) {
            out.push((q, zeta));
        }
    }
    Ok(out)
}

/// Runs the envelope enumeration over every group of `catalog` on `threads`
/// worker threads; the result does not depend on the thread count.
pub fn enumerate_connected_quandles_with(
    catalog: &Catalog,
    threads: usize,
) -> Result<EnumerationResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let per_group: Vec<Result<Vec<(Quandle, Perm)>>> = pool.install(|| {
        catalog
            .groups()
            .par_iter()
            .map(quandles_from_group)
            .collect()
    });
    let mut entries: Vec<Entry> = Vec::new();
    for (i, found) in per_group.into_iter().enumerate() {
        for (q, zeta) in found? {
            if let Some(prev) = entries
                .iter()
                .find(|e| e.quandle.are_isomorphic(&q).is_some())
            {
                let prev_id = prev.source.as_ref().map_or(0, |s| s.group_id);
                return Err(Error::Inconsistency(format!(
                    "catalog groups {prev_id} and {} give isomorphic quandles",
                    i + 1
                )));
            }
            entries.push(Entry::new(
                q,
                Some(Source {
                    group_id: i + 1,
                    zeta,
                }),
            ));
        }
    }
    Ok(EnumerationResult::new(catalog.degree(), entries))
}

/// Single-threaded enumeration; `n` must equal the catalog degree.
pub fn enumerate_connected_quandles(n: usize, catalog: &Catalog) -> Result<EnumerationResult> {
    if catalog.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: catalog.degree(),
        });
    }
    enumerate_connected_quandles_with(catalog, 1)
}
