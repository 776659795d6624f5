//! Exact computations with modules over the Takiff sl2.

pub mod algebra;
pub mod delta;
pub mod error;
pub mod free;
pub mod functors;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod weight;

pub use error::{Error, Result};
pub use poly::PolyHH;
pub use scalar::Rational;
