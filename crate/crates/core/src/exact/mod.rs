//! Exact arithmetic: fields, forms, linear algebra and projective points.

pub mod elimination;
pub mod field;
pub mod form;
pub mod linalg;
pub mod poly;
pub mod projective;

pub use elimination::{binary_roots, binary_square_root, resultant_eliminate, SquareRoot};
pub use field::{Field, FieldKind, FieldScalar, Fp2, PrimeField, QuadExt, Rationals};
pub use form::{gradient, monomials, Monomial, SparseForm};
pub use linalg::{det_linear_symmetric, rank_and_kernel, Matrix};
pub use poly::UniPoly;
pub use projective::{span_dimension, ProjPoint};
