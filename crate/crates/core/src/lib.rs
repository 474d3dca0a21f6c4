pub mod error;
pub mod poly;
pub mod rootweyl;

pub use error::{Error, Result};
pub mod braid;
pub mod chars;
pub mod cli;
pub mod count;
pub mod coxeter;
pub mod oracle;
pub mod partition;
pub mod unipotent;
