//! Envelopes `(G, ζ)`: a transitive group with `ζ` central in the stabilizer of
//! the base point 0 and `⟨ζ^G⟩ = G`. These correspond one-to-one with
//! connected quandles.

mod hom;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup, DEFAULT_ELEMENT_BOUND};
use crate::quandle::Quandle;

pub use hom::{hom_quandle, minimal_representation, FiniteGroup, HomTriple, FINITE_GROUP_BOUND};

/// The base point.
pub const BASE: usize = 0;

#[derive(Clone, Debug)]
pub struct Envelope {
    group: PermGroup,
    zeta: Perm,
    envelope: bool,
}

impl Envelope {
    /// Checks the folder conditions; the closure condition only sets a flag.
    pub fn validate(group: PermGroup, zeta: Perm) -> Result<Envelope> {
        if zeta.degree() != group.degree() {
            return Err(Error::DegreeMismatch {
                left: group.degree(),
                right: zeta.degree(),
            });
        }
        if !group.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if zeta.apply(BASE) != BASE {
            return Err(Error::ZetaMovesBase);
        }
        if !group.contains(&zeta) {
            return Err(Error::ZetaNotInGroup);
        }
        let stab = group.stabilizer(BASE)?;
        if !stab.generators().iter().all(|s| s.commutes_with(&zeta)) {
            return Err(Error::ZetaNotCentral);
        }
        let closure = group.normal_closure(std::slice::from_ref(&zeta))?;
        let envelope = closure.order() == group.order();
        Ok(Envelope {
            group,
            zeta,
            envelope,
        })
    }

    /// Like [`Envelope::validate`] but rejects folders.
    pub fn new(group: PermGroup, zeta: Perm) -> Result<Envelope> {
        let e = Envelope::validate(group, zeta)?;
        e.require_envelope()?;
        Ok(e)
    }

    pub(crate) fn new_unchecked(group: PermGroup, zeta: Perm) -> Envelope {
        Envelope {
            group,
            zeta,
            envelope: true,
        }
    }

    fn require_envelope(&self) -> Result<()> {
        if self.envelope {
            Ok(())
        } else {
            let closure = self
                .group
                .normal_closure(std::slice::from_ref(&self.zeta))?
                .order();
            Err(Error::FolderNotEnvelope {
                closure,
                group: self.group.order(),
            })
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn zeta(&self) -> &Perm {
        &self.zeta
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// False for a folder that fails `⟨ζ^G⟩ = G`.
    pub fn is_envelope(&self) -> bool {
        self.envelope
    }

    /// `x∘y = x^{ζ^ŷ}` with `ŷ` from the breadth-first orbit tree of 0.
    pub fn quandle(&self) -> Result<Quandle> {
        self.require_envelope()?;
        let orbit = self.group.orbit(BASE)?;
        self.quandle_with(|y| orbit.witness(y).expect("transitive").clone())
    }

    /// Builds the table with caller-chosen witnesses `e^{w(y)} = y`.
    pub fn quandle_with(&self, witness: impl Fn(usize) -> Perm) -> Result<Quandle> {
        let cols: Vec<Perm> = (0..self.degree())
            .map(|y| {
                let w = witness(y);
                debug_assert_eq!(w.apply(BASE), y);
                self.zeta.conjugate(&w)
            })
            .collect();
        Quandle::from_columns(&cols)
    }

    /// `(RMlt Q, R_0)`.
    pub fn from_quandle(q: &Quandle) -> Result<Envelope> {
        if !q.is_connected() {
            return Err(Error::NotConnected);
        }
        let group = PermGroup::with_base(q.right_translations(), &[BASE])?;
        Ok(Envelope::new_unchecked(group, q.right_translation(BASE)))
    }

    /// Latin test on the envelope: `[ζ, α]` is fixed-point-free for every `α`
    /// moving the base point.
    pub fn is_latin(&self) -> Result<bool> {
        self.is_latin_bounded(DEFAULT_ELEMENT_BOUND)
    }

    pub fn is_latin_bounded(&self, bound: u128) -> Result<bool> {
        if self.group.order() > bound {
            return Err(Error::TooLarge {
                what: "latin envelope test",
                size: self.group.order(),
                bound,
            });
        }
        Ok(self
            .group
            .elements()
            .filter(|a| a.apply(BASE) != BASE)
            .all(|a| self.zeta.commutator(&a).fixed_points() == 0))
    }

    /// Affine exactly when the group is metabelian.
    pub fn is_affine(&self) -> bool {
        self.group.is_metabelian()
    }
}

pub fn validate_envelope(group: PermGroup, zeta: Perm) -> Result<Envelope> {
    Envelope::validate(group, zeta)
}

pub fn quandle_from_envelope(e: &Envelope) -> Result<Quandle> {
    e.quandle()
}

pub fn envelope_from_quandle(q: &Quandle) -> Result<Envelope> {
    Envelope::from_quandle(q)
}

pub fn is_latin_envelope(e: &Envelope) -> Result<bool> {
    e.is_latin()
}

pub fn is_affine_envelope(e: &Envelope) -> bool {
    e.is_affine()
}

pub fn is_homogeneous(q: &Quandle) -> bool {
    q.is_homogeneous()
}

/// Compares the quandles built from two envelopes. A positive answer must
/// come with equal group orders and equal cycle types of `ζ` and `ξ`.
pub fn envelopes_give_isomorphic_quandles(a: &Envelope, b: &Envelope) -> Result<bool> {
    if a.degree() != b.degree() {
        return Ok(false);
    }
    let found = a.quandle()?.are_isomorphic(&b.quandle()?).is_some();
    if found && (a.group.order() != b.group.order() || a.zeta.cycle_type() != b.zeta.cycle_type()) {
        return Err(Error::Inconsistency(
            "isomorphic quandles from envelopes with different invariants".into(),
        ));
    }
    Ok(found)
}
