pub mod cli;
pub mod curve;
pub mod divpoly;
pub mod error;
pub mod exactmath;
pub mod galois;
pub mod linalg;
pub mod polyring;
pub mod scalar;
pub mod torsionchar;

pub use error::{Error, Result};
