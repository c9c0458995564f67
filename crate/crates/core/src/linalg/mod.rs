//! Exact dense linear algebra over ℚ.

mod factor;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod subspace;

pub use matrix::Matrix;
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use spectral::{
    char_poly, commutant, fixed_space, fixed_space_dimension, generalized_kernel, invariant_closure, rational_eigen,
    MatrixSolutionSpace, RationalSpectrum, Side,
};
pub use subspace::Subspace;
