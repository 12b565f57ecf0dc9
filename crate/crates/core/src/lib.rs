//! Combinatorics, complexes and verification routines for powers of extremal
//! ideals and their relation to arbitrary square-free monomial ideals.

pub mod combinatorics;
pub mod complexes;
pub mod error;
pub mod extremal;
pub mod formulas;
pub mod homology;
pub mod morse;
pub mod psi;

mod par;

pub use error::{Error, Result};
