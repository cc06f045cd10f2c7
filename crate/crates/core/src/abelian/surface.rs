use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::polyhedral::{is_square_rational, PolyhedralCone, RayClass};
use crate::scalars::{QuadIrrational, Rational};
use crate::{Error, Result};

/// The two boundary rays `v1 +- sqrt(a/b) v2` of the nef cone of a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceRays {
    /// `sqrt(a/b)` is rational: primitive integer rays `(w, u)` and `(w, -u)`.
    Rational([RayClass; 2]),
    /// `sqrt(a/b) = c sqrt(d)` is irrational; `coefficient` holds it.
    Symbolic { coefficient: QuadIrrational },
}

impl fmt::Display for SurfaceRays {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceRays::Rational([r1, r2]) => write!(f, "{r1}, {r2}"),
            SurfaceRays::Symbolic { coefficient } => {
                let c = coefficient.b();
                let d = coefficient.d();
                let root = if c.is_one() {
                    format!("√{d}")
                } else if c * Rational::from_integer(d.into()) == Rational::one() {
                    format!("(1/√{d})")
                } else if c.is_integer() {
                    format!("{c}√{d}")
                } else {
                    format!("({c})√{d}")
                };
                write!(f, "v1 ± {root} v2")
            }
        }
    }
}

/// Nef cone of a surface whose intersection form is `diag(a, -b)` in a
/// rational basis `{v1, v2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceConeData {
    pub a: Rational,
    pub b: Rational,
    pub rational_polyhedral: bool,
    pub rays: SurfaceRays,
}

impl SurfaceConeData {
    /// Ample cone: `a x1^2 - b x2^2 > 0` and `x1 > 0`.
    pub fn in_ample_cone(&self, x: &[Rational; 2]) -> bool {
        let q = &self.a * &x[0] * &x[0] - &self.b * &x[1] * &x[1];
        x[0].is_positive() && q.is_positive()
    }

    /// The nef cone as a polyhedral cone when its rays are rational.
    pub fn nef_cone(&self) -> Option<PolyhedralCone> {
        match &self.rays {
            SurfaceRays::Rational(rays) => Some(PolyhedralCone::new(rays.to_vec()).expect("pointed")),
            SurfaceRays::Symbolic { .. } => None,
        }
    }
}

/// Writes `n = s^2 d` with `d` squarefree, by trial division.
fn squarefree_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= &p;
        }
        p += 1;
    }
    (s, d * rest)
}

pub fn surface_nef_data(a: &Rational, b: &Rational) -> Result<SurfaceConeData> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::InvalidInput("a and b must be positive".into()));
    }
    let ratio = a / b;
    let rational_polyhedral = is_square_rational(&ratio)?;
    let rays = if rational_polyhedral {
        let u = ratio.numer().sqrt();
        let w = ratio.denom().sqrt();
        let ray = |sign: i64| {
            RayClass::new(&[Rational::from_integer(w.clone()), Rational::from_integer(&u * sign)]).expect("nonzero")
        };
        SurfaceRays::Rational([ray(1), ray(-1)])
    } else {
        // sqrt(p/q) = sqrt(p q) / q = (s / q) sqrt(d)
        let (s, d) = squarefree_part(&(ratio.numer() * ratio.denom()));
        let d = d.to_u64().ok_or_else(|| Error::InvalidInput("radicand too large".into()))?;
        let coefficient = QuadIrrational::new(d, Rational::zero(), Rational::new(s, ratio.denom().clone()))?;
        SurfaceRays::Symbolic { coefficient }
    };
    debug_assert!(ratio.denom().gcd(ratio.numer()).is_one());
    Ok(SurfaceConeData { a: a.clone(), b: b.clone(), rational_polyhedral, rays })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    #[test]
    fn surface_examples() {
        let s = surface_nef_data(&int(1), &int(1)).unwrap();
        assert!(s.rational_polyhedral);
        assert_eq!(
            s.rays,
            SurfaceRays::Rational([RayClass::from_ints(&[1, 1]).unwrap(), RayClass::from_ints(&[1, -1]).unwrap()])
        );

        let s = surface_nef_data(&int(1), &int(2)).unwrap();
        assert!(!s.rational_polyhedral);
        assert_eq!(s.rays.to_string(), "v1 ± (1/√2) v2");
        match &s.rays {
            SurfaceRays::Symbolic { coefficient } => {
                assert_eq!(coefficient, &QuadIrrational::new(2, int(0), rat(1, 2)).unwrap());
            }
            _ => panic!("expected symbolic rays"),
        }

        let s = surface_nef_data(&int(4), &int(1)).unwrap();
        assert!(s.rational_polyhedral);
        assert_eq!(
            s.rays,
            SurfaceRays::Rational([RayClass::from_ints(&[1, 2]).unwrap(), RayClass::from_ints(&[1, -2]).unwrap()])
        );
    }

    #[test]
    fn symbolic_coefficients() {
        assert_eq!(surface_nef_data(&int(3), &int(1)).unwrap().rays.to_string(), "v1 ± √3 v2");
        assert_eq!(surface_nef_data(&int(12), &int(1)).unwrap().rays.to_string(), "v1 ± 2√3 v2");
        assert_eq!(surface_nef_data(&int(3), &int(4)).unwrap().rays.to_string(), "v1 ± (1/2)√3 v2");
        assert_eq!(surface_nef_data(&int(1), &int(7)).unwrap().rays.to_string(), "v1 ± (1/√7) v2");
        assert_eq!(surface_nef_data(&rat(1, 2), &int(9)).unwrap().rays.to_string(), "v1 ± (1/6)√2 v2");
    }

    #[test]
    fn rational_rays_lie_on_the_boundary() {
        for (a, b) in [(1, 1), (4, 1), (9, 4), (1, 25), (18, 2)] {
            let s = surface_nef_data(&int(a), &int(b)).unwrap();
            let SurfaceRays::Rational(rays) = &s.rays else { panic!("({a},{b}) should be rational") };
            for r in rays {
                let v = r.to_rational();
                assert!((&s.a * &v[0] * &v[0] - &s.b * &v[1] * &v[1]).is_zero());
                assert!(v[0].is_positive());
            }
            assert!(s.nef_cone().is_some());
        }
    }

    #[test]
    fn ample_membership_and_errors() {
        let s = surface_nef_data(&int(1), &int(2)).unwrap();
        assert!(s.in_ample_cone(&[int(3), int(2)]));
        assert!(!s.in_ample_cone(&[int(1), int(1)]));
        assert!(!s.in_ample_cone(&[int(-3), int(0)]));
        assert!(surface_nef_data(&int(0), &int(1)).is_err());
        assert!(surface_nef_data(&int(1), &int(-1)).is_err());
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&BigInt::from(72)), (BigInt::from(6), BigInt::from(2)));
        assert_eq!(squarefree_part(&BigInt::from(30)), (BigInt::from(1), BigInt::from(30)));
        assert_eq!(squarefree_part(&BigInt::from(49)), (BigInt::from(7), BigInt::from(1)));
    }
}
