//! Exact computer algebra for the quantum matrix algebra, the Hecke algebra
//! and quantum immanants.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod hecke;
pub mod immanant;
pub mod qmatrix;
pub mod scalar;
pub mod tensorrep;
pub mod verify;

pub use error::{Error, Result};
