pub mod algebra;
pub mod engine;
pub mod error;
pub mod cellular;
pub mod cli;
pub mod congruence;
pub mod lattice;
pub mod mesoprimary;
pub mod oracle;

pub use error::{Error, Result};
