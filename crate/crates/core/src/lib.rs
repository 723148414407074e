pub mod cli;
pub mod cohnwords;
pub mod error;
pub mod fenceposet;
pub mod gmtree;
pub mod lattice;
pub mod matrix2;
pub mod rational;
pub mod signseq;
pub mod svg;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
