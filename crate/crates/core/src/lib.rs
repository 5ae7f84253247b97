pub mod birational;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod implicitize;
pub mod instance;
pub(crate) mod linalg;
pub mod poly;
pub mod rees;
pub mod report;
pub mod syzygies;

pub use error::{Error, Result};
