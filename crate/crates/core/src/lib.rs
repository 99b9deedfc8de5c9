//! Executable model-category machinery over finite simplicial sets: exact finite
//! colimits, decidable lifting problems, relative cell complexes, the small
//! object argument, and homological weak-equivalence certificates.

pub mod cells;
pub mod cli;
pub mod colimits;
pub mod error;
pub mod format;
pub mod homology;
pub mod lifting;
pub mod simplicial;
pub mod small_object;

pub use error::{Error, Result};
pub use simplicial::{FiniteSimplicialSet, SimplexId, SimplexRef, SimplicialMap};
