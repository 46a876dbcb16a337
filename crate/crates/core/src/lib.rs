//! Coinversion LLT polynomials computed from tableaux and from a colored
//! vertex model, the partition-swapping bijection on two-color
//! configurations, and matching-indexed linear relations.

pub mod checks;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod relations;
pub mod shapes;
pub mod swap;
pub mod tableaux;

pub use error::{Error, Result};
pub use lattice::{EdgeState, FaceState, LatticeConfig};
pub use poly::{Monomial, Polynomial};
pub use relations::{ArcShape, MatchingClass, TransferMatrix};
pub use shapes::{Cell, Partition, ShapeTuple, SkewShape, Triple};
pub use swap::{Arc, BeadSequence, BoundaryBead, Color, Matching, Side, Walk};
