//! Exact verification toolkit for Riemann-Poisson Lie algebras: Lie algebras
//! `(𝔤, ρ)` with a bivector `r` solving the classical Yang-Baxter equation
//! whose Levi-Civita contravariant connection makes the Poisson tensor
//! parallel.

pub mod algebra;
pub mod catalog;
pub mod connection;
pub mod construct;
pub mod error;
pub mod io;
pub mod linalg;
pub mod random;
pub mod rpcheck;
pub mod scalar;
pub mod sl2;

pub use algebra::{Bivector, LieAlgebra, Metric, Trivector, TwoForm};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use scalar::{Approx, Mode, Rational, Scalar};
