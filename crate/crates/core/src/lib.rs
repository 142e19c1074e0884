pub mod catalog;
pub mod exec;
pub mod frontend;
pub mod homology;
pub mod lie;
pub mod linear;
pub mod nonhomogeneous;
pub mod potential;
pub mod quadratic;

pub use exec::Execution;
pub use linear::{Matrix, Scalar, Subspace};
pub use quadratic::{GradedAlgebra, QuadraticAlgebra, Word};
