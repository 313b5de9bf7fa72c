pub mod biplanarize;
pub mod bounds;
pub mod cli;
pub mod drawing;
pub mod error;
pub mod graph;
pub mod harness;
pub mod planarity;

pub use error::{Error, Result};
