//! Exact computation of toric f- and g-polynomials of cubical complexes,
//! their expansion in the Adin h-basis, and the noncrossing-partition
//! models for the basis-change polynomials.

pub mod cli;
pub mod cubical;
pub mod error;
pub mod ncpart;
pub mod poly;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
pub use poly::Poly;
