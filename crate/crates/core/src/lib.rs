//! Exact Auslander–Reiten computations for modules over truncated triangular
//! k-linear categories.
//!
//! The scalar type is generic (any [`Field`]), with two concrete choices:
//! arbitrary-precision [`Rational`] numbers and prime-field residues [`Fp`].
//! Aliases for both instantiations live at the crate root.

pub mod artheory;
pub mod backends;
mod error;
pub mod exactla;
pub mod lincat;
pub mod modrep;
pub mod suites;

pub use error::{Error, Result};
pub use exactla::{Field, FieldSpec, Fp, Matrix, Rational};
pub use lincat::LinCat;

pub type QMatrix = Matrix<Rational>;
pub type FpMatrix = Matrix<Fp>;
pub type QCat = LinCat<Rational>;
pub type FpCat = LinCat<Fp>;
