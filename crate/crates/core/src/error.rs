use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Points stored in variants are 0-based; the `Display` impls print them
/// 1-based so messages match the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {} is out of range for degree {degree}", .point + 1)]
    PointOutOfRange { point: usize, degree: usize },

    #[error("image list is not a permutation of 1..{0}")]
    NotAPermutation(usize),

    #[error("a group needs at least one generator")]
    EmptyGenerators,

    #[error("{what}: size {size} exceeds the bound {bound}")]
    TooLarge {
        what: &'static str,
        size: u128,
        bound: u128,
    },

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("not idempotent: {x}*{x} != {x}", x = .0 + 1)]
    NotIdempotent(usize),

    #[error("column {} is not a bijection", .0 + 1)]
    ColumnNotBijective(usize),

    #[error("not right distributive at x={}, y={}, z={}", .x + 1, .y + 1, .z + 1)]
    NotRightDistributive { x: usize, y: usize, z: usize },

    #[error("quandle is not connected")]
    NotConnected,

    #[error("group is not transitive")]
    NotTransitive,

    #[error("zeta does not fix the base point")]
    ZetaMovesBase,

    #[error("zeta is not an element of the group")]
    ZetaNotInGroup,

    #[error("zeta is not central in the stabilizer of the base point")]
    ZetaNotCentral,

    #[error("pair is a folder but not an envelope: the normal closure of zeta has order {closure}, the group has order {group}")]
    FolderNotEnvelope { closure: u128, group: u128 },

    #[error("map is not an automorphism of the group")]
    NotAnAutomorphism,

    #[error("subgroup is not closed under the group operation")]
    NotASubgroup,

    #[error("subgroup is not centralized by the automorphism")]
    SubgroupNotCentralized,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("catalog groups {0} and {1} are conjugate in the symmetric group")]
    CatalogDuplicate(usize, usize),

    #[error("catalog group {0} is not transitive")]
    NonTransitiveGroup(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("inconsistency: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
