//! Modules over a [`LinCat`](crate::LinCat): functors to vector spaces,
//! natural transformations and the homological toolkit built on them.

mod construct;
mod cover;
mod decompose;
mod equivariant;
mod fd;
mod hom;
mod induced;
mod json;
mod module;

pub use construct::{cokernel, image, kernel, pushout, submodule};
pub use cover::{
    injective_envelope, kernel_in_radical, minimal_presentation, presentation_from_cover, projective_cover,
    radical_spaces, radical_submodule, syzygy, top, Cover, Envelope, Presentation,
};
pub use decompose::{decompose, end_algebra, find_iso, is_indecomposable, EndAlgebra, IsoVerdict, Piece, Verdict, DEFAULT_BUDGET};
pub use equivariant::{equivariant_lift, equivariant_maps};
pub use fd::{is_fd, FdVerdict};
pub use hom::{hom_by_naturality, hom_from_cover, hom_space, HomSpace};
pub use induced::{InducedProjective, Summand};
pub use module::{DirectSum, Module, ModuleMap};

#[cfg(test)]
mod tests;
