//! Exact intersection theory for Fano manifolds and a verifier for their
//! 2-Fano classification.

pub mod algebra;
pub mod catalog;
pub mod chern;
pub mod classifier;
pub mod constructions;
pub mod error;
pub mod ring;
pub mod schubert;

pub use algebra::{AmbientDescriptor, GradedClass, Label, Partition, Rational};
pub use error::{Error, Result};
