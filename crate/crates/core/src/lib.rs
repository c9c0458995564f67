//! Exact rational computations with the symplectic representation of the
//! mapping class group of a closed surface: twist matrices, relation checks,
//! normalization of tuples of rank-one unipotents, the uniqueness lemmas, and
//! a lookup of dimension thresholds.

pub mod classify;
pub mod cli;
pub mod error;
pub mod lemmas;
pub mod linalg;
pub mod normalize;
pub mod relations;
pub mod symplectic;
pub mod word;

pub use error::{Error, Result};
