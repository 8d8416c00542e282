pub mod cli;
pub mod duality;
pub mod error;
pub mod exact;
pub mod nets;
pub mod samples;
pub mod theta;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
