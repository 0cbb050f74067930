//! Lipschitz geometry of Outer space at desk scale.
//!
//! Marked metric graphs with exact rational edge lengths, the asymmetric
//! Lipschitz distance via candidate loops, certified stretch geodesics and
//! automorphism axes, the projection to the primitive loop complex, and
//! calculators for the explicit contraction and progress constants.

pub mod error;
pub mod cli;
pub mod constants;
pub mod graphs;
pub mod metric;
pub mod num;
pub mod paths;
pub mod plgraph;
pub mod words;

pub use error::{Error, Result};
