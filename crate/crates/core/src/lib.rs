//! Exact computations with finite-dimensional Lie algebras given by structure
//! constants: Cartan class of invariant Pfaffian forms, deformations of
//! Heisenberg brackets, central extensions, contractions, and polynomial
//! differential forms on affine space.
//!
//! All arithmetic is over the Gaussian rationals; nothing here touches floating
//! point.

pub mod algebra;
pub mod catalog;
pub mod contraction;
pub mod deformation;
pub mod error;
pub mod exterior;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod manifold;
pub mod sampling;
pub mod scalar;
pub mod upoly;

pub use algebra::{BilinearMap, LieAlgebra, LinearMap, Subspace, Vector};
pub use catalog::CatalogEntry;
pub use error::{Error, Result};
pub use exterior::{
    cartan_class, ce_differential, interior_product, wedge, ClassResult, DualForm, Multiform, Ring,
};
pub use linalg::Matrix;
pub use scalar::Scalar;
pub use upoly::UPoly;
