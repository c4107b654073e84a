//! Square formulations of Schubert problems on Grassmannians and flag
//! manifolds, a total-degree homotopy tracker for desk-scale instances, and
//! a posteriori alpha-theory certification in exact rational arithmetic.

pub mod combinatorics;
pub mod eval;
pub mod error;
pub mod exact;
pub mod matrix;
pub mod patterns;
pub mod solver;
pub mod systems;

pub use error::{Error, Result};
