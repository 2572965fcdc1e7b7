//! Rotation groups of the Platonic solids acting on faces.
//!
//! Faces are represented by their centers (the vertices of the dual solid),
//! sorted lexicographically; face 0 is the base point. Rotations are found by
//! sending one reference pair of centers to every congruent pair and keeping
//! the maps that preserve the center set.

use std::fmt;
use std::str::FromStr;

use crate::envelope::Envelope;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::Octahedron,
        Solid::Dodecahedron,
        Solid::Icosahedron,
    ];

    pub fn faces(self) -> usize {
        match self {
            Solid::Tetrahedron => 4,
            Solid::Cube => 6,
            Solid::Octahedron => 8,
            Solid::Dodecahedron => 12,
            Solid::Icosahedron => 20,
        }
    }

    pub fn rotation_group_order(self) -> u128 {
        match self {
            Solid::Tetrahedron => 12,
            Solid::Cube | Solid::Octahedron => 24,
            Solid::Dodecahedron | Solid::Icosahedron => 60,
        }
    }

    fn face_centers(self) -> Vec<[f64; 3]> {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let mut pts: Vec<[f64; 3]> = Vec::new();
        let signs = [1.0, -1.0];
        match self {
            Solid::Tetrahedron => {
                pts = vec![
                    [-1.0, -1.0, -1.0],
                    [-1.0, 1.0, 1.0],
                    [1.0, -1.0, 1.0],
                    [1.0, 1.0, -1.0],
                ];
            }
            Solid::Cube => {
                for i in 0..3 {
                    for s in signs {
                        let mut v = [0.0; 3];
                        v[i] = s;
                        pts.push(v);
                    }
                }
            }
            Solid::Octahedron => {
                for a in signs {
                    for b in signs {
                        for c in signs {
                            pts.push([a, b, c]);
                        }
                    }
                }
            }
            Solid::Dodecahedron => {
                for i in 0..3 {
                    for a in signs {
                        for b in signs {
                            let mut v = [0.0; 3];
                            v[(i + 1) % 3] = a;
                            v[(i + 2) % 3] = b * phi;
                            pts.push(v);
                        }
                    }
                }
            }
            Solid::Icosahedron => {
                for a in signs {
                    for b in signs {
                        for c in signs {
                            pts.push([a, b, c]);
                        }
                    }
                }
                for i in 0..3 {
                    for a in signs {
                        for b in signs {
                            let mut v = [0.0; 3];
                            v[(i + 1) % 3] = a / phi;
                            v[(i + 2) % 3] = b * phi;
                            pts.push(v);
                        }
                    }
                }
            }
        }
        pts.sort_by(|a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| key(*x).cmp(&key(*y)))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        pts
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
        };
        f.write_str(s)
    }
}

impl FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Solid> {
        Solid::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown solid `{s}`")))
    }
}

const EPS: f64 = 1e-9;

fn key(x: f64) -> i64 {
    (x * 1e6).round() as i64
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn close(a: [f64; 3], b: [f64; 3]) -> bool {
    (0..3).all(|i| (a[i] - b[i]).abs() < 1e-6)
}

/// Coordinates of `v` in the (non-degenerate) frame `(f0, f1, f2)`, by Cramer's rule.
fn solve(frame: [[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    let det = dot(frame[0], cross(frame[1], frame[2]));
    [
        dot(v, cross(frame[1], frame[2])) / det,
        dot(frame[0], cross(v, frame[2])) / det,
        dot(frame[0], cross(frame[1], v)) / det,
    ]
}

/// All rotations preserving the face centers, as face permutations.
fn rotations(centers: &[[f64; 3]]) -> Vec<Perm> {
    let n = centers.len();
    let c0 = centers[0];
    let c1 = *centers[1..]
        .iter()
        .find(|c| cross(c0, **c).iter().any(|x| x.abs() > EPS))
        .expect("two independent centers");
    let src = [c0, c1, cross(c0, c1)];
    let mut out = Vec::new();
    for d0 in centers {
        for d1 in centers {
            if (dot(*d0, *d1) - dot(c0, c1)).abs() > 1e-6 {
                continue;
            }
            let dst = [*d0, *d1, cross(*d0, *d1)];
            let images: Option<Vec<usize>> = centers
                .iter()
                .map(|v| {
                    let w = solve(src, *v);
                    let img = [0, 1, 2].map(|k| (0..3).map(|i| w[i] * dst[i][k]).sum::<f64>());
                    centers.iter().position(|c| close(*c, img))
                })
                .collect();
            if let Some(images) = images {
                out.push(Perm::from_images(images).expect("rotation permutes faces"));
            }
        }
    }
    debug_assert!(out.iter().all(|p| p.degree() == n));
    out
}

/// An envelope, or the folder showing why none exists.
#[derive(Clone, Debug)]
pub enum PlatonicOutcome {
    Envelope(Envelope),
    Obstruction {
        folder: Envelope,
        closure_order: u128,
        reason: String,
    },
}

impl PlatonicOutcome {
    pub fn envelope(&self) -> Option<&Envelope> {
        match self {
            PlatonicOutcome::Envelope(e) => Some(e),
            PlatonicOutcome::Obstruction { .. } => None,
        }
    }
}

/// The rotation group on faces with `ζ` the lexicographically least element
/// of largest order in the (cyclic) face stabilizer.
pub fn platonic_envelope(solid: Solid) -> Result<PlatonicOutcome> {
    let centers = solid.face_centers();
    let rots = rotations(&centers);
    let group = PermGroup::with_base(rots, &[0])?;
    if group.order() != solid.rotation_group_order() {
        return Err(Error::Inconsistency(format!(
            "{solid}: found {} rotations, expected {}",
            group.order(),
            solid.rotation_group_order()
        )));
    }
    let mut stab: Vec<Perm> = group.stabilizer(0)?.elements().collect();
    stab.sort();
    let max_order = stab.iter().map(Perm::order).max().unwrap_or(1);
    let zeta = stab
        .into_iter()
        .find(|p| p.order() == max_order)
        .expect("nonempty stabilizer");
    let folder = Envelope::validate(group, zeta)?;
    if folder.is_envelope() {
        return Ok(PlatonicOutcome::Envelope(folder));
    }
    let closure_order = folder
        .group()
        .normal_closure(std::slice::from_ref(folder.zeta()))?
        .order();
    let reason = format!(
        "the conjugates of a face-stabilizer generator of order {} generate a subgroup of order {} in a group of order {}",
        folder.zeta().order(),
        closure_order,
        folder.group().order()
    );
    Ok(PlatonicOutcome::Obstruction {
        folder,
        closure_order,
        reason,
    })
}
