//! Exact symbolic geometry of left-invariant almost complex structures with
//! Norden metrics on Lie algebras.

pub mod classify;
pub mod error;
pub mod exec;
pub mod family;
pub mod geometry;
pub mod liealg;
pub mod linalg;
pub mod norden;
pub mod poly;
pub mod report;
pub mod structfile;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
