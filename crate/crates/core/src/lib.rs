pub mod cli;
pub mod enumerate;
pub mod envelope;
pub mod error;
pub mod families;
pub mod perm;
pub mod quandle;

pub use envelope::Envelope;
pub use error::{Error, Result};
pub use perm::{Perm, PermGroup};
pub use quandle::Quandle;
