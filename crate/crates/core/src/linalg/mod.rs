//! Exact linear algebra over GF(p).

pub mod bilinear;
pub mod field;
pub mod subspace;

pub use bilinear::{BilinearMap, NeumannReport};
pub use field::{is_zero, unit_vector, Fp, Scalar};
pub use subspace::{kernel_of_images, rank, Elements, QuotientMap, SpanBuilder, Subspace};
