//! Computable ordered *-algebras.
//!
//! The crate is `no_std` with `alloc`. Backends implement [`ordered::StarAlgebra`]
//! and [`ordered::OrderedStarAlgebra`]; everything else is generic over them.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod backends;
pub mod dominated;
pub mod error;
pub mod linalg;
pub mod ordered;
pub mod random;
pub mod scalar;
pub mod suops;
pub mod tolerance;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use ordered::{ExtendedNorm, OrderedStarAlgebra, StarAlgebra, Structure};
pub use scalar::Scalar;
pub use tolerance::TolerancePolicy;
