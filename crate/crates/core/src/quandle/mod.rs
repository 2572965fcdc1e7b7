//! Quandles as Cayley tables.
//!
//! Row `x`, column `y` holds `x·y`. Columns are the right translations `R_y`.

mod iso;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

pub use iso::Invariant;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Quandle {
    n: usize,
    table: Vec<u32>,
}

impl Quandle {
    /// Validates a table given as rows of 0-based entries.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Quandle> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for &v in row {
                if v >= n {
                    return Err(Error::PointOutOfRange {
                        point: v,
                        degree: n,
                    });
                }
                table.push(v as u32);
            }
        }
        Quandle::from_flat(n, table)
    }

    /// Like [`Quandle::from_rows`] with 1-based entries, as printed in tables.
    pub fn from_rows_one_based(rows: &[Vec<usize>]) -> Result<Quandle> {
        let n = rows.len();
        let shifted: Vec<Vec<usize>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        if v == 0 || v > n {
                            Err(Error::PointOutOfRange {
                                point: v.wrapping_sub(1),
                                degree: n,
                            })
                        } else {
                            Ok(v - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Quandle::from_rows(&shifted)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Quandle> {
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Quandle::from_rows(&rows)
    }

    /// Builds the table whose column `y` is `cols[y]`.
    pub fn from_columns(cols: &[Perm]) -> Result<Quandle> {
        let n = cols.len();
        let mut table = vec![0u32; n * n];
        for (y, c) in cols.iter().enumerate() {
            if c.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: c.degree(),
                });
            }
            for x in 0..n {
                table[x * n + y] = c.apply(x) as u32;
            }
        }
        Quandle::from_flat(n, table)
    }

    pub fn from_flat(n: usize, table: Vec<u32>) -> Result<Quandle> {
        if table.len() != n * n {
            return Err(Error::DegreeMismatch {
                left: n * n,
                right: table.len(),
            });
        }
        if let Some(&v) = table.iter().find(|&&v| v as usize >= n) {
            return Err(Error::PointOutOfRange {
                point: v as usize,
                degree: n,
            });
        }
        let q = Quandle { n, table };
        q.check_axioms()?;
        Ok(q)
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<u32>) -> Quandle {
        debug_assert_eq!(table.len(), n * n);
        Quandle { n, table }
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.op(x, x) != x {
                return Err(Error::NotIdempotent(x));
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = self.op(x, y);
                if seen[v] {
                    return Err(Error::ColumnNotBijective(y));
                }
                seen[v] = true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let yx = self.op(y, x);
                for z in 0..n {
                    if self.op(self.op(z, x), yx) != self.op(self.op(z, y), x) {
                        return Err(Error::NotRightDistributive { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    /// The table in row-major order.
    pub fn flat(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.op(x, y)).collect())
            .collect()
    }

    /// `R_y`, the `y`-th column.
    pub fn right_translation(&self, y: usize) -> Perm {
        Perm::from_images_unchecked((0..self.n).map(|x| self.table[x * self.n + y]).collect())
    }

    pub fn right_translations(&self) -> Vec<Perm> {
        (0..self.n).map(|y| self.right_translation(y)).collect()
    }

    /// `L_x`, the `x`-th row; not a bijection in general.
    pub fn left_translation_map(&self, x: usize) -> Vec<usize> {
        (0..self.n).map(|y| self.op(x, y)).collect()
    }

    pub fn rmlt(&self) -> PermGroup {
        PermGroup::new(self.right_translations()).expect("columns share the degree")
    }

    /// The displacement group, generated by `R_0⁻¹ R_b`.
    pub fn dis(&self) -> PermGroup {
        let r0inv = self.right_translation(0).inverse();
        let gens: Vec<Perm> = (1..self.n)
            .map(|b| r0inv.compose(&self.right_translation(b)))
            .filter(|g| !g.is_identity())
            .collect();
        PermGroup::generated_or_trivial(self.n, gens).expect("columns share the degree")
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        self.rmlt().orbits()
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn is_latin(&self) -> bool {
        (0..self.n).all(|x| {
            let mut seen = vec![false; self.n];
            (0..self.n).all(|y| !std::mem::replace(&mut seen[self.op(x, y)], true))
        })
    }

    /// Direct scan of `(xy)(uv) = (xu)(yv)`.
    pub fn is_medial(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for u in 0..n {
                    let xu = self.op(x, u);
                    for v in 0..n {
                        if self.op(xy, self.op(u, v)) != self.op(xu, self.op(y, v)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Sizes of the classes of `a ~ b` iff `R_a = R_b`, sorted ascending.
    pub fn translation_class_sizes(&self) -> Vec<usize> {
        let mut counts: HashMap<Perm, usize> = HashMap::new();
        for y in 0..self.n {
            *counts.entry(self.right_translation(y)).or_default() += 1;
        }
        let mut sizes: Vec<usize> = counts.into_values().collect();
        sizes.sort_unstable();
        sizes
    }

    /// The quandle transported along `phi`: `x^φ ∘ y^φ = (x·y)^φ`.
    pub fn relabel(&self, phi: &Perm) -> Result<Quandle> {
        if phi.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: phi.degree(),
            });
        }
        let n = self.n;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[phi.apply(x) * n + phi.apply(y)] = phi.apply(self.op(x, y)) as u32;
            }
        }
        Ok(Quandle::from_flat_unchecked(n, table))
    }

    /// Checks that `phi` is an isomorphism from `self` onto `other`.
    pub fn is_isomorphism(&self, other: &Quandle, phi: &Perm) -> bool {
        self.n == other.n
            && phi.degree() == self.n
            && (0..self.n).all(|x| {
                (0..self.n)
                    .all(|y| phi.apply(self.op(x, y)) == other.op(phi.apply(x), phi.apply(y)))
            })
    }

    /// A bijection `φ` with `(x·y)^φ = x^φ·y^φ`, if one exists.
    pub fn are_isomorphic(&self, other: &Quandle) -> Option<Perm> {
        iso::find_isomorphism(self, other)
    }

    /// `|Aut(Q)|`, computed as `n` times the automorphisms fixing point 0.
    pub fn automorphism_count(&self) -> Result<u128> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(self.n as u128 * iso::count_automorphisms_fixing(self, 0))
    }

    /// Whether `Aut(Q)` acts transitively.
    pub fn is_homogeneous(&self) -> bool {
        (1..self.n).all(|y| iso::automorphism_mapping(self, 0, y).is_some())
    }

    pub fn invariants(&self) -> Vec<Invariant> {
        iso::invariants(self)
    }

    /// Text form: a `quandle <n>` header, then one 1-based row per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("quandle {}\n", self.n);
        for x in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|y| (self.op(x, y) + 1).to_string())
                .collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Quandle> {
        if !text.ends_with('\n') {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                msg: "missing trailing newline".into(),
            });
        }
        let lines: Vec<&str> = text.lines().collect();
        let header = lines.first().copied().unwrap_or("");
        let mut words = header.split_whitespace();
        let n: usize = match (words.next(), words.next(), words.next()) {
            (Some("quandle"), Some(n), None) => n.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad order `{n}`"),
            })?,
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    msg: "expected `quandle <n>`".into(),
                })
            }
        };
        if n == 0 {
            return Err(Error::Parse {
                line: 1,
                msg: "order must be positive".into(),
            });
        }
        if lines.len() != n + 1 {
            return Err(Error::Parse {
                line: lines.len().min(n + 1) + 1,
                msg: format!("expected {n} rows, found {}", lines.len() - 1),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines[1..].iter().enumerate() {
            let row = line
                .split_whitespace()
                .map(|w| {
                    w.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 2,
                        msg: format!("bad entry `{w}`"),
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: i + 2,
                    msg: format!("expected {n} entries, found {}", row.len()),
                });
            }
            if let Some(&bad) = row.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::Parse {
                    line: i + 2,
                    msg: format!("entry {bad} out of range 1..{n}"),
                });
            }
            rows.push(row);
        }
        Quandle::from_rows_one_based(&rows)
    }
}
