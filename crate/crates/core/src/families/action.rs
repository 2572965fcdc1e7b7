//! Envelopes from group actions: symmetric and alternating groups on subsets,
//! cycles and tuples, and matrix groups on vectors.

use super::field::SmallField;
use crate::envelope::Envelope;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Largest point set an action family will build.
pub const ACTION_POINT_BOUND: usize = 5040;

/// Induces a permutation on sorted `points` from a map on labels.
fn induced<T: Ord>(points: &[T], act: impl Fn(&T) -> T) -> Result<Perm> {
    let images = points
        .iter()
        .map(|p| {
            points
                .binary_search(&act(p))
                .map(|i| i as u32)
                .map_err(|_| Error::Inconsistency("action does not preserve the point set".into()))
        })
        .collect::<Result<Vec<u32>>>()?;
    Perm::from_images(images.into_iter().map(|v| v as usize).collect())
}

fn check_points(n: usize) -> Result<()> {
    if n > ACTION_POINT_BOUND {
        return Err(Error::TooLarge {
            what: "action point set",
            size: n as u128,
            bound: ACTION_POINT_BOUND as u128,
        });
    }
    Ok(())
}

/// The envelope on `points` (label 0 is the base point) for the group
/// generated by `gens` acting through `act`, with `zeta` acting likewise.
fn action_envelope<T: Ord, G>(
    points: &[T],
    gens: &[G],
    zeta: &G,
    act: impl Fn(&T, &G) -> T,
) -> Result<Envelope> {
    check_points(points.len())?;
    let perms = gens
        .iter()
        .map(|g| induced(points, |p| act(p, g)))
        .collect::<Result<Vec<_>>>()?;
    let z = induced(points, |p| act(p, zeta))?;
    let group = PermGroup::with_base(perms, &[0])?;
    Envelope::new(group, z)
}

fn symmetric_generators(n: usize) -> Vec<Perm> {
    if n < 2 {
        return vec![Perm::identity(n.max(1))];
    }
    let cycle: Vec<usize> = (0..n).collect();
    vec![
        Perm::from_cycles(n, &[&[0, 1]]).unwrap(),
        Perm::from_cycles(n, &[&cycle]).unwrap(),
    ]
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `S_n` on 2-element subsets with `ζ = (1 2)`; subsets in lexicographic order.
pub fn two_subsets_envelope(n: usize) -> Result<Envelope> {
    if n < 2 {
        return Err(Error::Unsupported("two-subsets needs n >= 2".into()));
    }
    check_points(n * (n - 1) / 2)?;
    let points: Vec<[usize; 2]> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| [i, j]))
        .collect();
    let act = |s: &[usize; 2], g: &Perm| {
        let (a, b) = (g.apply(s[0]), g.apply(s[1]));
        [a.min(b), a.max(b)]
    };
    action_envelope(
        &points,
        &symmetric_generators(n),
        &Perm::from_cycles(n, &[&[0, 1]])?,
        act,
    )
}

/// `S_n` on its `n`-cycles by conjugation with `ζ` the class of `(1 … n)`.
/// Only even `n`: for odd `n` the normal closure of `ζ` is `A_n`.
pub fn ncycles_envelope(n: usize) -> Result<Envelope> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "n-cycles needs an even n >= 2 (got {n}); for odd n the closure is only A_n"
        )));
    }
    let count = factorial(n - 1);
    if count > ACTION_POINT_BOUND as u128 {
        return Err(Error::TooLarge {
            what: "action point set",
            size: count,
            bound: ACTION_POINT_BOUND as u128,
        });
    }
    let mut points = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permutations(&mut rest, 0, &mut |order| {
        let mut images = vec![0u32; n];
        let mut prev = 0;
        for &x in order {
            images[prev] = x as u32;
            prev = x;
        }
        images[prev] = 0;
        points.push(Perm::from_images_unchecked(images));
    });
    points.sort();
    let cycle: Vec<usize> = (0..n).collect();
    let zeta = Perm::from_cycles(n, &[&cycle])?;
    debug_assert_eq!(points[0], zeta);
    action_envelope(&points, &symmetric_generators(n), &zeta, |c, g| {
        c.conjugate(g)
    })
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Tuples of `len` distinct entries of `0..n` in lexicographic order.
fn distinct_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, len, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, len, &mut cur, &mut out);
    out
}

// Matches the `&P` callback shape of `action_envelope`.
#[allow(clippy::ptr_arg)]
fn tuple_act(t: &Vec<usize>, g: &Perm) -> Vec<usize> {
    t.iter().map(|&x| g.apply(x)).collect()
}

/// `S_n` on `(n−2)`-tuples of distinct entries with `ζ = (n−1 n)`.
pub fn tuple_envelope_sym(n: usize) -> Result<Envelope> {
    if n < 3 {
        return Err(Error::Unsupported("sym-tuples needs n >= 3".into()));
    }
    check_points((factorial(n) / 2).min(u128::from(u32::MAX)) as usize)?;
    let points = distinct_tuples(n, n - 2);
    let zeta = Perm::from_cycles(n, &[&[n - 2, n - 1]])?;
    action_envelope(&points, &symmetric_generators(n), &zeta, tuple_act)
}

/// `A_n` on `(n−3)`-tuples of distinct entries with `ζ = (n−2 n−1 n)`.
pub fn tuple_envelope_alt(n: usize) -> Result<Envelope> {
    if n < 4 {
        return Err(Error::Unsupported("alt-tuples needs n >= 4".into()));
    }
    check_points((factorial(n) / 6).min(u128::from(u32::MAX)) as usize)?;
    let points = distinct_tuples(n, n - 3);
    let gens: Vec<Perm> = (2..n)
        .map(|k| Perm::from_cycles(n, &[&[0, 1, k]]).unwrap())
        .collect();
    let zeta = Perm::from_cycles(n, &[&[n - 3, n - 2, n - 1]])?;
    action_envelope(&points, &gens, &zeta, tuple_act)
}

type Mat2 = [[usize; 2]; 2];

/// `SL_2(q)` acting on the right on nonzero row vectors, `ζ = [[1,0],[1,1]]`.
///
/// Vectors `(x, y)` are ordered by `y` first, then `x`, so that the base
/// point `(1, 0)` comes first.
pub fn sl2_envelope(q: usize) -> Result<Envelope> {
    let f = SmallField::new(q)?;
    let points: Vec<(usize, usize)> = (0..q)
        .flat_map(|y| (0..q).map(move |x| (y, x)))
        .filter(|&(y, x)| (x, y) != (0, 0))
        .collect();
    let act = |&(y, x): &(usize, usize), m: &Mat2| {
        let nx = f.add(f.mul(x, m[0][0]), f.mul(y, m[1][0]));
        let ny = f.add(f.mul(x, m[0][1]), f.mul(y, m[1][1]));
        (ny, nx)
    };
    let mut gens: Vec<Mat2> = Vec::new();
    for a in f.additive_basis() {
        gens.push([[1, 0], [a, 1]]);
        gens.push([[1, a], [0, 1]]);
    }
    let zeta: Mat2 = [[1, 0], [1, 1]];
    action_envelope(&points, &gens, &zeta, act)
}

type Mat3 = [[u8; 3]; 3];

/// `GL_3(2) = PSL_3(2)` on 2-subsets of the seven points of the Fano plane.
///
/// Points are nonzero vectors of `F_2³` in lexicographic order; the base pair
/// is `{(0,0,1), (0,1,0)}` and `ζ` fixes both while sending `(1,0,0)` to
/// `(1,1,1)`.
pub fn psl3_2_envelope() -> Result<Envelope> {
    let vectors: Vec<[u8; 3]> = (1u8..8).map(|v| [v >> 2 & 1, v >> 1 & 1, v & 1]).collect();
    let vec_index = |v: [u8; 3]| (v[0] << 2 | v[1] << 1 | v[2]) as usize - 1;
    let points: Vec<[usize; 2]> = (0..7)
        .flat_map(|i| (i + 1..7).map(move |j| [i, j]))
        .collect();
    let apply = |v: [u8; 3], m: &Mat3| -> [u8; 3] {
        let mut out = [0u8; 3];
        for (j, o) in out.iter_mut().enumerate() {
            *o = (0..3).fold(0, |acc, i| acc ^ (v[i] & m[i][j]));
        }
        out
    };
    let act = |s: &[usize; 2], m: &Mat3| {
        let a = vec_index(apply(vectors[s[0]], m));
        let b = vec_index(apply(vectors[s[1]], m));
        [a.min(b), a.max(b)]
    };
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
                m[i][j] = 1;
                gens.push(m);
            }
        }
    }
    // Rows are images of the standard basis (1,0,0), (0,1,0), (0,0,1).
    let zeta: Mat3 = [[1, 1, 1], [0, 1, 0], [0, 0, 1]];
    action_envelope(&points, &gens, &zeta, act)
}
