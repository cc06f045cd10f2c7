use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{act, is_positive_definite, is_positive_semidefinite};
use super::{AlgebraMatrix, HermitianMatrix, ScalarKind};
use crate::scalars::{GaussianRational, Rational, RationalQuaternion};
use crate::{Error, Result};

/// A point `(x0, x1, ..., xn)` of the ambient space of a Lorentz cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorentzVector(Vec<Rational>);

impl LorentzVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::ShapeMismatch("a Lorentz vector needs x0 and n >= 1 more coordinates".into()));
        }
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// `n`, the number of spatial coordinates.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// `x0^2 - (x1^2 + ... + xn^2)`.
    pub fn minkowski_norm(&self) -> Rational {
        let head = &self.0[0] * &self.0[0];
        self.0[1..].iter().fold(head, |acc, x| acc - x * x)
    }
}

/// `x0 > sqrt(x1^2 + ... + xn^2)`, decided without square roots.
pub fn lorentz_member(v: &LorentzVector) -> bool {
    v.0[0].is_positive() && v.minkowski_norm().is_positive()
}

fn lorentz_closed_member(v: &LorentzVector) -> bool {
    !v.0[0].is_negative() && !v.minkowski_norm().is_negative()
}

/// One indecomposable summand of a [`ConeSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "block")]
pub enum ConeBlock {
    /// Positive-definite `r x r` Hermitian matrices over `kind`.
    PositiveDefinite {
        kind: ScalarKind,
        r: usize,
    },
    Lorentz {
        n: usize,
    },
    /// The exceptional 27-dimensional cone. Representable, never computed on.
    Octonionic,
}

impl ConeBlock {
    pub fn dimension(&self) -> usize {
        match *self {
            ConeBlock::PositiveDefinite { kind, r } => kind.hermitian_dim(r),
            ConeBlock::Lorentz { n } => n + 1,
            ConeBlock::Octonionic => 27,
        }
    }
}

impl fmt::Display for ConeBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeBlock::PositiveDefinite { kind, r } => write!(f, "PD({kind},{r})"),
            ConeBlock::Lorentz { n } => write!(f, "Lorentz({n})"),
            ConeBlock::Octonionic => write!(f, "PD(O,3)"),
        }
    }
}

/// Formal direct sum of indecomposable cones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSpec {
    blocks: Vec<ConeBlock>,
}

impl ConeSpec {
    pub fn new(blocks: Vec<ConeBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidInput("a cone needs at least one block".into()));
        }
        for b in &blocks {
            match *b {
                ConeBlock::PositiveDefinite { r: 0, .. } | ConeBlock::Lorentz { n: 0 } => {
                    return Err(Error::InvalidInput(format!("degenerate block {b:?}")));
                }
                _ => {}
            }
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[ConeBlock] {
        &self.blocks
    }

    /// Ambient dimension: sum of the block dimensions.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(ConeBlock::dimension).sum()
    }

    /// The cone is a simplicial orthant exactly when every block is
    /// one-dimensional.
    pub fn is_orthant(&self) -> bool {
        self.blocks.iter().all(|b| matches!(b, ConeBlock::PositiveDefinite { .. }) && b.dimension() == 1)
    }
}

impl fmt::Display for ConeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// A Hermitian matrix over any of the three scalar kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyHermitian {
    Real(HermitianMatrix<Rational>),
    Complex(HermitianMatrix<GaussianRational>),
    Quaternion(HermitianMatrix<RationalQuaternion>),
}

/// An unconstrained square matrix over any of the three scalar kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebraMatrix {
    Real(AlgebraMatrix<Rational>),
    Complex(AlgebraMatrix<GaussianRational>),
    Quaternion(AlgebraMatrix<RationalQuaternion>),
}

impl AnyHermitian {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyHermitian::Real(_) => ScalarKind::Real,
            AnyHermitian::Complex(_) => ScalarKind::Complex,
            AnyHermitian::Quaternion(_) => ScalarKind::Quaternion,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AnyHermitian::Real(m) => m.size(),
            AnyHermitian::Complex(m) => m.size(),
            AnyHermitian::Quaternion(m) => m.size(),
        }
    }

    pub fn identity(kind: ScalarKind, r: usize) -> Self {
        match kind {
            ScalarKind::Real => AnyHermitian::Real(HermitianMatrix::identity(r)),
            ScalarKind::Complex => AnyHermitian::Complex(HermitianMatrix::identity(r)),
            ScalarKind::Quaternion => AnyHermitian::Quaternion(HermitianMatrix::identity(r)),
        }
    }

    pub fn is_positive_definite(&self) -> bool {
        match self {
            AnyHermitian::Real(m) => is_positive_definite(m),
            AnyHermitian::Complex(m) => is_positive_definite(m),
            AnyHermitian::Quaternion(m) => is_positive_definite(m),
        }
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        match self {
            AnyHermitian::Real(m) => is_positive_semidefinite(m),
            AnyHermitian::Complex(m) => is_positive_semidefinite(m),
            AnyHermitian::Quaternion(m) => is_positive_semidefinite(m),
        }
    }

    pub fn real_coords(&self) -> Vec<Rational> {
        match self {
            AnyHermitian::Real(m) => m.real_coords(),
            AnyHermitian::Complex(m) => m.real_coords(),
            AnyHermitian::Quaternion(m) => m.real_coords(),
        }
    }

    /// `M* D M` when `M` has the same kind and size.
    pub fn act(&self, m: &AnyAlgebraMatrix) -> Result<Self> {
        match (m, self) {
            (AnyAlgebraMatrix::Real(m), AnyHermitian::Real(d)) => Ok(AnyHermitian::Real(act(m, d)?)),
            (AnyAlgebraMatrix::Complex(m), AnyHermitian::Complex(d)) => Ok(AnyHermitian::Complex(act(m, d)?)),
            (AnyAlgebraMatrix::Quaternion(m), AnyHermitian::Quaternion(d)) => Ok(AnyHermitian::Quaternion(act(m, d)?)),
            _ => Err(Error::ShapeMismatch(format!("{} matrix acting on a {} block", m.kind(), self.kind()))),
        }
    }
}

impl AnyAlgebraMatrix {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyAlgebraMatrix::Real(_) => ScalarKind::Real,
            AnyAlgebraMatrix::Complex(_) => ScalarKind::Complex,
            AnyAlgebraMatrix::Quaternion(_) => ScalarKind::Quaternion,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AnyAlgebraMatrix::Real(m) => m.size(),
            AnyAlgebraMatrix::Complex(m) => m.size(),
            AnyAlgebraMatrix::Quaternion(m) => m.size(),
        }
    }

    pub fn identity(kind: ScalarKind, r: usize) -> Self {
        match kind {
            ScalarKind::Real => AnyAlgebraMatrix::Real(AlgebraMatrix::identity(r)),
            ScalarKind::Complex => AnyAlgebraMatrix::Complex(AlgebraMatrix::identity(r)),
            ScalarKind::Quaternion => AnyAlgebraMatrix::Quaternion(AlgebraMatrix::identity(r)),
        }
    }

    pub fn is_invertible(&self) -> bool {
        match self {
            AnyAlgebraMatrix::Real(m) => m.is_invertible(),
            AnyAlgebraMatrix::Complex(m) => m.is_invertible(),
            AnyAlgebraMatrix::Quaternion(m) => m.is_invertible(),
        }
    }
}

/// The component of a point of a [`ConeSpec`] on one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockValue {
    Hermitian(AnyHermitian),
    Lorentz(LorentzVector),
}

/// Membership in a direct sum of cones. With `closed = false` this is the
/// open cone (every Hermitian block positive definite, every Lorentz block
/// strictly inside); with `closed = true` its closure.
pub fn cone_member(spec: &ConeSpec, v: &[BlockValue], closed: bool) -> Result<bool> {
    if spec.blocks.len() != v.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} blocks in the cone, {} in the point",
            spec.blocks.len(),
            v.len()
        )));
    }
    let mut inside = true;
    for (block, value) in spec.blocks.iter().zip(v) {
        let ok = match (block, value) {
            (ConeBlock::PositiveDefinite { kind, r }, BlockValue::Hermitian(m)) => {
                if m.kind() != *kind || m.size() != *r {
                    return Err(Error::ShapeMismatch(format!(
                        "block {block} given a {}x{} {} matrix",
                        m.size(),
                        m.size(),
                        m.kind()
                    )));
                }
                if closed {
                    m.is_positive_semidefinite()
                } else {
                    m.is_positive_definite()
                }
            }
            (ConeBlock::Lorentz { n }, BlockValue::Lorentz(x)) => {
                if x.n() != *n {
                    return Err(Error::ShapeMismatch(format!("block {block} given n = {}", x.n())));
                }
                if closed {
                    lorentz_closed_member(x)
                } else {
                    lorentz_member(x)
                }
            }
            (ConeBlock::Octonionic, _) => {
                return Err(Error::Unsupported("octonionic Hermitian cone".into()));
            }
            _ => return Err(Error::ShapeMismatch(format!("block {block} given the wrong value type"))),
        };
        inside &= ok;
    }
    Ok(inside)
}

impl LorentzVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}
