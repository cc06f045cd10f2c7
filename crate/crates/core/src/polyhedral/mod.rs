//! Rational polyhedral cones.
//!
//! A [`PolyhedralCone`] is stored by its generating rays, normalized to
//! primitive integer vectors, together with the inequality description that
//! the double description method computes from them. Membership and
//! intersection are decided on that description, exactly.

mod dd;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::scalars::{is_perfect_square, Rational};
use crate::{Error, Result};

use dd::{dot, double_description, primitive_from_rational, rank, IntVec};

/// Largest ambient dimension accepted by [`cone_intersection`].
pub const MAX_INTERSECTION_DIM: usize = 4;

/// A rational ray, represented by its primitive integer direction.
///
/// Orientation is kept: `v` and `-v` are different rays. Use
/// [`RayClass::unoriented`] when sign should be ignored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RayClass(Vec<BigInt>);

impl RayClass {
    pub fn new(v: &[Rational]) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::ShapeMismatch("empty ray vector".into()));
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("the zero vector does not span a ray".into()));
        }
        Ok(Self(primitive_from_rational(v)))
    }

    pub fn from_ints(v: &[i64]) -> Result<Self> {
        let q: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
        Self::new(&q)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|x| Rational::from_integer(x.clone())).collect()
    }

    /// Representative with first nonzero coordinate positive.
    pub fn unoriented(&self) -> Self {
        let first = self.0.iter().find(|x| !x.is_zero()).expect("nonzero ray");
        if first.is_negative() {
            Self(self.0.iter().map(|x| -x).collect())
        } else {
            self.clone()
        }
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for RayClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A pointed cone generated by finitely many rational rays.
#[derive(Clone, Debug)]
pub struct PolyhedralCone {
    dim: usize,
    rays: Vec<RayClass>,
    /// `f . x >= 0` for each facet normal `f`.
    facets: Vec<IntVec>,
    /// `e . x = 0`, present when the cone is not full-dimensional.
    equalities: Vec<IntVec>,
}

impl PartialEq for PolyhedralCone {
    /// Equal as point sets.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.extreme_rays() == other.extreme_rays()
    }
}

impl Eq for PolyhedralCone {}

impl PolyhedralCone {
    /// Builds the cone spanned by `rays`. Proportional rays are merged; a
    /// generating set whose cone contains a line is rejected.
    pub fn new(rays: Vec<RayClass>) -> Result<Self> {
        let dim = rays
            .first()
            .map(RayClass::dim)
            .ok_or_else(|| Error::InvalidInput("a cone needs at least one ray".into()))?;
        if rays.iter().any(|r| r.dim() != dim) {
            return Err(Error::ShapeMismatch("rays of different lengths".into()));
        }
        let mut unique: Vec<RayClass> = Vec::with_capacity(rays.len());
        for r in rays {
            if !unique.contains(&r) {
                unique.push(r);
            }
        }
        // dual cone {a : a . r >= 0}; the cone is its dual
        let constraints: Vec<IntVec> = unique.iter().map(|r| r.0.clone()).collect();
        let dual = double_description(dim, &constraints);
        let spanning: Vec<&[BigInt]> = dual.lineality.iter().chain(&dual.rays).map(|v| v.as_slice()).collect();
        if rank(&spanning, dim) < dim {
            return Err(Error::InvalidInput("cone contains a line".into()));
        }
        Ok(Self { dim, rays: unique, facets: dual.rays, equalities: dual.lineality })
    }

    pub fn from_int_rays(rays: &[&[i64]]) -> Result<Self> {
        Self::new(rays.iter().map(|r| RayClass::from_ints(r)).collect::<Result<_>>()?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[RayClass] {
        &self.rays
    }

    /// Inward normals `f` with `f . x >= 0` on the cone.
    pub fn facet_normals(&self) -> &[Vec<BigInt>] {
        &self.facets
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_empty()
    }

    /// Dimension of the linear span of the cone.
    pub fn span_dim(&self) -> usize {
        let rays: Vec<&[BigInt]> = self.rays.iter().map(|r| r.0.as_slice()).collect();
        rank(&rays, self.dim)
    }

    /// The generators that are extreme rays, sorted.
    pub fn extreme_rays(&self) -> Vec<RayClass> {
        let mut out: Vec<RayClass> = self
            .rays
            .iter()
            .filter(|r| {
                let tight: Vec<&[BigInt]> = self
                    .facets
                    .iter()
                    .filter(|f| dot(f, &r.0).is_zero())
                    .chain(&self.equalities)
                    .map(|f| f.as_slice())
                    .collect();
                rank(&tight, self.dim) == self.dim - 1
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    /// Drops generators that are not extreme.
    pub fn minimal(&self) -> Self {
        Self {
            dim: self.dim,
            rays: self.extreme_rays(),
            facets: self.facets.clone(),
            equalities: self.equalities.clone(),
        }
    }

    /// Image under the linear map `x -> m x`.
    pub fn linear_image(&self, m: &[Vec<Rational>]) -> Result<Self> {
        if m.len() != self.dim || m.iter().any(|row| row.len() != self.dim) {
            return Err(Error::ShapeMismatch(format!("expected a {0}x{0} matrix", self.dim)));
        }
        let rays = self
            .rays
            .iter()
            .map(|r| {
                let v = r.to_rational();
                let image: Vec<Rational> = m.iter().map(|row| row.iter().zip(&v).map(|(a, x)| a * x).sum()).collect();
                RayClass::new(&image)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rays)
    }

    fn values(&self, v: &[Rational]) -> (Vec<BigInt>, Vec<BigInt>) {
        let p = primitive_from_rational(v);
        let f = self.facets.iter().map(|n| dot(n, &p)).collect();
        let e = self.equalities.iter().map(|n| dot(n, &p)).collect();
        (f, e)
    }

    /// Whether `v` lies on a facet, i.e. in the cone but not its interior.
    pub fn on_boundary(&self, v: &[Rational]) -> Result<bool> {
        Ok(poly_member(self, v, false)? && !poly_member(self, v, true)?)
    }
}

/// Closed membership (`interior = false`): `v` is a nonnegative combination
/// of the rays. Interior membership: `v` is in the topological interior of
/// the cone in the ambient space, which is empty unless the cone is
/// full-dimensional.
pub fn poly_member(cone: &PolyhedralCone, v: &[Rational], interior: bool) -> Result<bool> {
    if v.len() != cone.dim {
        return Err(Error::ShapeMismatch(format!("vector of length {} in a {}-dimensional cone", v.len(), cone.dim)));
    }
    let (f, e) = cone.values(v);
    Ok(if interior {
        e.is_empty() && f.iter().all(Signed::is_positive)
    } else {
        e.iter().all(Zero::is_zero) && f.iter().all(|x| !x.is_negative())
    })
}

/// Intersection of two cones of dimension at most
/// [`MAX_INTERSECTION_DIM`]. `None` means the intersection is `{0}`.
pub fn cone_intersection(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<Option<PolyhedralCone>> {
    if a.dim != b.dim {
        return Err(Error::ShapeMismatch(format!("dimensions {} and {}", a.dim, b.dim)));
    }
    if a.dim > MAX_INTERSECTION_DIM {
        return Err(Error::UnsupportedDimension(a.dim));
    }
    let mut constraints: Vec<IntVec> = Vec::new();
    for c in [a, b] {
        constraints.extend(c.facets.iter().cloned());
        for e in &c.equalities {
            constraints.push(e.clone());
            constraints.push(e.iter().map(|x| -x).collect());
        }
    }
    let g = double_description(a.dim, &constraints);
    debug_assert!(g.lineality.is_empty(), "intersection of pointed cones is pointed");
    if g.rays.is_empty() {
        return Ok(None);
    }
    let rays = g.rays.into_iter().map(RayClass).collect();
    Ok(Some(PolyhedralCone::new(rays)?.minimal()))
}

/// Whether a positive rational is the square of a rational.
pub fn is_square_rational(q: &Rational) -> Result<bool> {
    if !q.is_positive() {
        return Err(Error::InvalidInput(format!("{q} is not positive")));
    }
    Ok(is_perfect_square(q.numer()) && is_perfect_square(q.denom()))
}

impl fmt::Display for PolyhedralCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rays.iter().map(|r| r.to_string()).collect();
        write!(f, "cone{{{}}}", parts.join(", "))
    }
}
