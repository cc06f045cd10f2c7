use num_traits::Signed;

use crate::polyhedral::{PolyhedralCone, RayClass};
use crate::reduction::{GroupAction2D, Mat2};
use crate::scalars::{check_radicand, dirichlet_rank, fundamental_unit, Rational, UnitElement};
use crate::{Error, Result};

/// A fundamental domain `Pi = cone{R, g R}` for the unit group acting on
/// the nef cone of an abelian surface with real multiplication by
/// `Q(sqrt d)`, in the basis `{1, sqrt d}` where the form is `x1^2 - d x2^2`.
#[derive(Clone, Debug)]
pub struct RealMultDomain {
    pub d: u64,
    pub pi: PolyhedralCone,
    pub action: GroupAction2D,
    /// The unit whose multiplication matrix is `g`.
    pub unit: UnitElement,
}

/// Builds `Pi = cone{R, g R}` with `g` multiplication by `eps^2`, `eps` the
/// fundamental unit of `Z[sqrt d]`. With `use_unit_directly`, `eps` itself
/// is used when it is already totally positive.
pub fn real_mult_fundamental_domain(d: u64, ray: &RayClass, use_unit_directly: bool) -> Result<RealMultDomain> {
    check_radicand(d)?;
    if ray.dim() != 2 {
        return Err(Error::ShapeMismatch(format!("ray of length {} in the plane", ray.dim())));
    }
    let v = ray.to_rational();
    let dq = Rational::from_integer(d.into());
    if !v[0].is_positive() || !(&v[0] * &v[0] - &dq * &v[1] * &v[1]).is_positive() {
        return Err(Error::NotInCone);
    }
    let eps = fundamental_unit(d)?;
    let unit = if use_unit_directly && eps.is_totally_positive() { eps } else { eps.squared() };
    // columns are the images of 1 and sqrt d under multiplication by a + b sqrt d
    let (a, b) = (unit.value().a().clone(), unit.value().b().clone());
    let g: Mat2 = [[a.clone(), &dq * &b], [b, a]];
    let action = GroupAction2D::new(Rational::from_integer(1.into()), dq, g)?;
    let image = action.apply(&[v[0].clone(), v[1].clone()]);
    let pi = PolyhedralCone::new(vec![ray.clone(), RayClass::new(&image)?])?;
    Ok(RealMultDomain { d, pi, action, unit })
}

/// Signature and unit rank of the real quadratic field `Q(sqrt d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirichletData {
    pub r1: u32,
    pub r2: u32,
    pub rank: u32,
}

pub fn dirichlet_data(d: u64) -> Result<DirichletData> {
    check_radicand(d)?;
    // both embeddings sqrt d -> +-sqrt d are real
    let (r1, r2) = (2, 0);
    Ok(DirichletData { r1, r2, rank: dirichlet_rank(r1, r2)? })
}
