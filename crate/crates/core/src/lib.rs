//! Exact computations on the nef cones of abelian varieties.
//!
//! The ample cone of an abelian variety splits as a direct sum of cones of
//! positive-definite Hermitian matrices over `R`, `C` and `H`, and the
//! automorphism group acts on each block by `D -> M* D M`. This crate models
//! those cones with exact rational arithmetic, derives them from isogeny
//! data, and builds and checks rational polyhedral fundamental domains for
//! the two-dimensional cases where everything can be made explicit.
//!
//! Modules, bottom up:
//!
//! * [`scalars`]: rationals, `Q(sqrt d)`, Gaussian rationals, rational
//!   quaternions, continued fractions and fundamental units.
//! * [`hermitian`]: Hermitian matrices, the trace pairing, positive
//!   definiteness via exact LDL*, Lorentz cones and direct sums of cones.
//! * [`polyhedral`]: rational polyhedral cones, membership and intersection
//!   by the double description method.
//! * [`reduction`]: Lagrange-Gauss reduction of binary forms, locating points
//!   in translates of a cone, and fundamental-domain verification.
//! * [`abelian`]: isogeny models, endomorphism blocks, Picard numbers, ample
//!   cones, surface examples and the real-multiplication construction.

pub mod abelian;
pub mod error;
pub mod hermitian;
pub mod polyhedral;
pub mod random;
pub mod reduction;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::Rational;
