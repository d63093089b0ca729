//! Polynomial differential forms on affine space and the concrete
//! computations built on them.

pub mod forms;
pub mod h3;
pub mod poisson;
pub mod poly;
pub mod sl;

pub use forms::{PolyForm, PolyVectorField};
pub use poly::{Poly, Vars};
