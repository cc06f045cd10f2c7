//! From isogeny data to cones.
//!
//! An [`AbelianVarietyModel`] lists the simple factors of an abelian variety
//! up to isogeny, each with the real form of its endomorphism algebra and
//! its multiplicity. Everything else is derived: the matrix blocks of
//! `End(X) (x) R`, the Neron-Severi space as Hermitian matrices in those
//! blocks, the Picard number, the ample cone as a direct sum of
//! positive-definite cones, and the action `D -> F* D F` of automorphisms.
//!
//! For abelian surfaces of Picard number two the nef cone is explicit, and
//! [`real_mult_fundamental_domain`] builds a rational polyhedral fundamental
//! domain for the unit group of a real quadratic field.

mod model;
mod realmult;
mod surface;

pub use model::{
    ample_cone, aut_action, bauer_rational_polyhedral, endo_real_decomposition, picard_number, rosati_fixed_basis,
    AbelianVarietyModel, AlbertForm, AlbertRealType, BlockDecomposition, EndoBlock, SimpleFactor,
};
pub use realmult::{dirichlet_data, real_mult_fundamental_domain, DirichletData, RealMultDomain};
pub use surface::{surface_nef_data, SurfaceConeData, SurfaceRays};
