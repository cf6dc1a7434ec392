//! Exact spectral invariants of coexact p-forms on fundamental domains of
//! regular tessellations of the d-sphere.

pub mod error;
pub mod eta;
pub mod barnes;
pub mod cli;
pub mod counting;
pub mod coxeter;
pub mod exactnum;
pub mod poincare;
pub mod ratfun;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
