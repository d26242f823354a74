//! Crystal bases of highest-weight modules realized as integer lattice
//! points, Demazure crystals as truncated polytopes, extremal vectors, and
//! Demazure character checks, all in exact arithmetic.

pub mod character;
pub mod crystal;
mod error;
pub mod extremal;
pub mod polyhedral;
pub mod rank2;
pub mod rootdata;
pub mod sequence;

pub use error::{Error, Result};
