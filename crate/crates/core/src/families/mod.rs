//! Named constructions of connected quandles and their envelopes.

mod abelian;
mod action;
mod affine;
mod field;
mod platonic;

pub(crate) use abelian::gcd;
pub use abelian::{automorphisms, AbelianGroup, AutMap, AUT_CANDIDATE_BOUND};
pub use action::{
    ncycles_envelope, psl3_2_envelope, sl2_envelope, tuple_envelope_alt, tuple_envelope_sym,
    two_subsets_envelope, ACTION_POINT_BOUND,
};
pub use affine::{
    affine_isomorphic, affine_quandle, enumerate_connected_affine, galkin, image_of_one_minus,
    is_connected_affine, AffineRep,
};
pub use field::{SmallField, MAX_FIELD_ORDER};
pub use platonic::{platonic_envelope, PlatonicOutcome, Solid};
