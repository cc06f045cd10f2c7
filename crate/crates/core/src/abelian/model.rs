use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hermitian::{hermitian_basis, AnyAlgebraMatrix, AnyHermitian, ConeBlock, ConeSpec, ScalarKind};
use crate::scalars::{GaussianRational, Rational, RationalQuaternion};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlbertForm {
    /// `R x ... x R`
    RealSplit,
    /// `C x ... x C`
    ComplexSplit,
    /// `H x ... x H`
    QuaternionSplit,
    /// `M2(R) x ... x M2(R)`
    Mat2Real,
    /// `M2(C) x ... x M2(C)`
    Mat2Complex,
}

/// Real form of the endomorphism algebra of a simple factor: `m` copies of
/// one of the algebras in [`AlbertForm`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlbertRealType {
    pub form: AlbertForm,
    pub m: u32,
}

impl AlbertRealType {
    pub fn new(form: AlbertForm, m: u32) -> Self {
        Self { form, m }
    }

    /// Scalar kind and matrix size of each of the `m` blocks contributed by
    /// a factor of multiplicity `n`.
    fn block_shape(&self, n: u32) -> (ScalarKind, usize) {
        let n = n as usize;
        match self.form {
            AlbertForm::RealSplit => (ScalarKind::Real, n),
            AlbertForm::ComplexSplit => (ScalarKind::Complex, n),
            AlbertForm::QuaternionSplit => (ScalarKind::Quaternion, n),
            AlbertForm::Mat2Real => (ScalarKind::Real, 2 * n),
            AlbertForm::Mat2Complex => (ScalarKind::Complex, 2 * n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleFactor {
    pub id: String,
    pub albert: AlbertRealType,
    pub n: u32,
}

impl SimpleFactor {
    pub fn new(id: impl Into<String>, form: AlbertForm, m: u32, n: u32) -> Self {
        Self { id: id.into(), albert: AlbertRealType::new(form, m), n }
    }

    /// Picard number of the factor itself, `X_i` without multiplicity.
    pub fn own_picard_number(&self) -> usize {
        let (kind, r) = self.albert.block_shape(1);
        self.albert.m as usize * kind.hermitian_dim(r)
    }
}

#[derive(Deserialize)]
struct RawModel {
    factors: Vec<SimpleFactor>,
}

/// An abelian variety up to isogeny: `X ~ X_1^n_1 x ... x X_k^n_k` with
/// pairwise non-isogenous simple `X_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawModel")]
pub struct AbelianVarietyModel {
    factors: Vec<SimpleFactor>,
}

impl TryFrom<RawModel> for AbelianVarietyModel {
    type Error = Error;

    fn try_from(raw: RawModel) -> Result<Self> {
        Self::new(raw.factors)
    }
}

impl AbelianVarietyModel {
    pub fn new(factors: Vec<SimpleFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("a model needs at least one factor".into()));
        }
        let mut seen = HashSet::new();
        for f in &factors {
            if !seen.insert(f.id.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate factor id {:?}", f.id)));
            }
            if f.albert.m == 0 || f.n == 0 {
                return Err(Error::InvalidInput(format!("factor {:?} needs m >= 1 and n >= 1", f.id)));
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoBlock {
    pub kind: ScalarKind,
    pub size: usize,
    pub origin: String,
}

impl EndoBlock {
    pub fn hermitian_dim(&self) -> usize {
        self.kind.hermitian_dim(self.size)
    }
}

/// Simple factors of `End(X) (x) R` as full matrix algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<EndoBlock>,
}

impl fmt::Display for BlockDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| format!("M{}({})", b.size, b.kind)).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Each factor with multiplicity `n` and real form `m` copies of `D`
/// contributes `m` blocks `M_n(D)`; `M2(R)` and `M2(C)` become `M_2n`.
pub fn endo_real_decomposition(model: &AbelianVarietyModel) -> BlockDecomposition {
    let blocks = model
        .factors
        .iter()
        .flat_map(|f| {
            let (kind, size) = f.albert.block_shape(f.n);
            (0..f.albert.m).map(move |_| EndoBlock { kind, size, origin: f.id.clone() })
        })
        .collect();
    BlockDecomposition { blocks }
}

/// Dimension of the Neron-Severi space: sum of the Hermitian dimensions of
/// the blocks.
pub fn picard_number(model: &AbelianVarietyModel) -> usize {
    endo_real_decomposition(model).blocks.iter().map(EndoBlock::hermitian_dim).sum()
}

pub fn ample_cone(model: &AbelianVarietyModel) -> ConeSpec {
    let blocks = endo_real_decomposition(model)
        .blocks
        .iter()
        .map(|b| ConeBlock::PositiveDefinite { kind: b.kind, r: b.size })
        .collect();
    ConeSpec::new(blocks).expect("models have at least one factor")
}

/// Basis of the Rosati-fixed part of each block, i.e. of its Hermitian
/// matrices.
pub fn rosati_fixed_basis(decomp: &BlockDecomposition) -> Vec<Vec<AnyHermitian>> {
    decomp
        .blocks
        .iter()
        .map(|b| match b.kind {
            ScalarKind::Real => hermitian_basis::<Rational>(b.size).into_iter().map(AnyHermitian::Real).collect(),
            ScalarKind::Complex => {
                hermitian_basis::<GaussianRational>(b.size).into_iter().map(AnyHermitian::Complex).collect()
            }
            ScalarKind::Quaternion => {
                hermitian_basis::<RationalQuaternion>(b.size).into_iter().map(AnyHermitian::Quaternion).collect()
            }
        })
        .collect()
}

/// Blockwise `D_b -> M_b* D_b M_b`.
pub fn aut_action(
    decomp: &BlockDecomposition,
    m: &[AnyAlgebraMatrix],
    d: &[AnyHermitian],
) -> Result<Vec<AnyHermitian>> {
    let k = decomp.blocks.len();
    if m.len() != k || d.len() != k {
        return Err(Error::ShapeMismatch(format!("{k} blocks, {} matrices, {} divisor components", m.len(), d.len())));
    }
    decomp
        .blocks
        .iter()
        .zip(m.iter().zip(d))
        .map(|(b, (mb, db))| {
            if mb.kind() != b.kind || mb.size() != b.size || db.kind() != b.kind || db.size() != b.size {
                return Err(Error::ShapeMismatch(format!("block M{}({}) of {}", b.size, b.kind, b.origin)));
            }
            db.act(mb)
        })
        .collect()
}

/// The nef cone is rational polyhedral exactly when `X` is isogenous to a
/// product of pairwise non-isogenous factors of Picard number one.
pub fn bauer_rational_polyhedral(model: &AbelianVarietyModel) -> bool {
    model.factors.iter().all(|f| f.n == 1 && f.own_picard_number() == 1)
}
