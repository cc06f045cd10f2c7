//! Hermitian matrix spaces over `R`, `C` and `H` and their cones.
//!
//! Entries are exact: [`Rational`], [`GaussianRational`] or
//! [`RationalQuaternion`], selected through the [`Scalar`] trait. The open
//! cone of positive-definite matrices is tested by exact LDL* elimination,
//! and the automorphism action is `D -> M* D M`.

mod cone;
mod matrix;

pub use cone::{
    cone_member, lorentz_member, AnyAlgebraMatrix, AnyHermitian, BlockValue, ConeBlock, ConeSpec, LorentzVector,
};
pub use matrix::{
    act, dual_separator, hermitian_basis, is_positive_definite, is_positive_semidefinite, ldl_witness,
    negative_direction, trace_inner_product, AlgebraMatrix, HermitianMatrix,
};

use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalars::{GaussianRational, Rational, RationalQuaternion};

/// Which division algebra the matrix entries come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarKind {
    Real,
    Complex,
    Quaternion,
}

impl ScalarKind {
    /// Real dimension of the space of `r x r` Hermitian matrices.
    pub fn hermitian_dim(self, r: usize) -> usize {
        match self {
            ScalarKind::Real => r * (r + 1) / 2,
            ScalarKind::Complex => r * r,
            ScalarKind::Quaternion => r * (2 * r - 1),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ScalarKind::Real => "R",
            ScalarKind::Complex => "C",
            ScalarKind::Quaternion => "H",
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Entry type of a matrix over one of the three real division algebras,
/// with its canonical involution.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Eq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    const KIND: ScalarKind;

    fn from_rational(q: Rational) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn real_part(&self) -> Rational;
    /// `x * conj(x)`, a nonnegative rational.
    fn norm(&self) -> Rational;
    fn is_real(&self) -> bool;
    /// Imaginary units spanning the purely imaginary part (empty over `R`).
    fn imaginary_units() -> Vec<Self>;
    /// Real coordinates, `[re]`, `[re, im]` or `[w, x, y, z]`.
    fn coords(&self) -> Vec<Rational>;
}

impl Scalar for Rational {
    const KIND: ScalarKind = ScalarKind::Real;

    fn from_rational(q: Rational) -> Self {
        q
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn real_part(&self) -> Rational {
        self.clone()
    }
    fn norm(&self) -> Rational {
        self * self
    }
    fn is_real(&self) -> bool {
        true
    }
    fn imaginary_units() -> Vec<Self> {
        Vec::new()
    }
    fn coords(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
}

impl Scalar for GaussianRational {
    const KIND: ScalarKind = ScalarKind::Complex;

    fn from_rational(q: Rational) -> Self {
        GaussianRational::real(q)
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        GaussianRational::inv(self)
    }
    fn real_part(&self) -> Rational {
        self.re.clone()
    }
    fn norm(&self) -> Rational {
        GaussianRational::norm(self)
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    fn imaginary_units() -> Vec<Self> {
        vec![GaussianRational::i()]
    }
    fn coords(&self) -> Vec<Rational> {
        vec![self.re.clone(), self.im.clone()]
    }
}

impl Scalar for RationalQuaternion {
    const KIND: ScalarKind = ScalarKind::Quaternion;

    fn from_rational(q: Rational) -> Self {
        RationalQuaternion::real(q)
    }
    fn conj(&self) -> Self {
        RationalQuaternion::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        RationalQuaternion::inv(self)
    }
    fn real_part(&self) -> Rational {
        self.w.clone()
    }
    fn norm(&self) -> Rational {
        RationalQuaternion::norm(self)
    }
    fn is_real(&self) -> bool {
        RationalQuaternion::is_real(self)
    }
    fn imaginary_units() -> Vec<Self> {
        vec![RationalQuaternion::i(), RationalQuaternion::j(), RationalQuaternion::k()]
    }
    fn coords(&self) -> Vec<Rational> {
        vec![self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }
}
