pub mod cli;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod hshp;
pub mod hypergroup;
pub mod selftest;
pub mod subobjects;

pub use error::{Error, Result};
