//! Table-driven finite fields of order `p` or `p²` up to 49.

use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: usize = 49;

/// `F_q` with `q = p` or `q = p²`. For `q = p²` the element `c₁·x + c₀` has
/// index `c₁·p + c₀`, with `x` a root of the lexicographically least monic
/// irreducible `x² + b·x + c` (so `x²+x+1` for 4, `x²+1` for 9 and 49,
/// `x²+2` for 25).
#[derive(Clone, Debug)]
pub struct SmallField {
    q: usize,
    p: usize,
    /// `(b, c)` of the defining polynomial; `None` for prime fields.
    poly: Option<(usize, usize)>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl SmallField {
    pub fn new(q: usize) -> Result<SmallField> {
        let unsupported = || {
            Error::Unsupported(format!(
                "no field of order {q} (need p or p² ≤ {MAX_FIELD_ORDER})"
            ))
        };
        if q > MAX_FIELD_ORDER {
            return Err(unsupported());
        }
        let (p, poly) = if is_prime(q) {
            (q, None)
        } else {
            let p = (2..q)
                .find(|&p| p * p == q && is_prime(p))
                .ok_or_else(unsupported)?;
            let poly = (0..p)
                .flat_map(|b| (1..p).map(move |c| (b, c)))
                .find(|&(b, c)| (0..p).all(|r| (r * r + b * r + c) % p != 0))
                .expect("an irreducible quadratic exists");
            (p, Some(poly))
        };
        let mul_elem = |a: usize, b: usize| -> usize {
            match poly {
                None => a * b % p,
                Some((pb, pc)) => {
                    let (a1, a0, b1, b0) = (a / p, a % p, b / p, b % p);
                    // x² = −b·x − c
                    let x2 = a1 * b1 % p;
                    let c1 = (a1 * b0 + a0 * b1 + x2 * (p - pb)) % p;
                    let c0 = (a0 * b0 + x2 * (p - pc)) % p;
                    c1 * p + c0
                }
            }
        };
        let add_elem = |a: usize, b: usize| -> usize {
            match poly {
                None => (a + b) % p,
                Some(_) => ((a / p + b / p) % p) * p + (a % p + b % p) % p,
            }
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = add_elem(a, b) as u8;
                mul[a * q + b] = mul_elem(a, b) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| add[a * q + b] == 0)
                    .expect("additive inverse") as u8
            })
            .collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).ok_or_else(|| {
                Error::Inconsistency(format!("element {a} of F_{q} has no inverse"))
            })? as u8;
        }
        let f = SmallField {
            q,
            p,
            poly,
            add,
            mul,
            neg,
            inv,
        };
        f.check_axioms()?;
        Ok(f)
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.q;
        let bad = |what: &str| Err(Error::Inconsistency(format!("F_{q}: {what}")));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return bad("identity");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return bad("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return bad("associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return bad("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    /// `(b, c)` of the defining polynomial `x² + b·x + c`, if not prime.
    pub fn polynomial(&self) -> Option<(usize, usize)> {
        self.poly
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        self.inv[a] as usize
    }

    /// Additive generators over the prime field: `{1}` or `{1, x}`.
    pub fn additive_basis(&self) -> Vec<usize> {
        if self.poly.is_some() {
            vec![1, self.p]
        } else {
            vec![1]
        }
    }
}
