use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::polyhedral::{poly_member, PolyhedralCone};
use crate::scalars::Rational;
use crate::{Error, Result};

/// 2x2 rational matrix, row-major.
pub type Mat2 = [[Rational; 2]; 2];

pub fn mat2_from_ints(m: [[i64; 2]; 2]) -> Mat2 {
    m.map(|row| row.map(|x| Rational::from_integer(x.into())))
}

pub fn mat2_identity() -> Mat2 {
    mat2_from_ints([[1, 0], [0, 1]])
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn mat2_det(m: &Mat2) -> Rational {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

pub fn mat2_transpose(m: &Mat2) -> Mat2 {
    [[m[0][0].clone(), m[1][0].clone()], [m[0][1].clone(), m[1][1].clone()]]
}

pub fn mat2_inverse(m: &Mat2) -> Option<Mat2> {
    let det = mat2_det(m);
    if det.is_zero() {
        return None;
    }
    Some([[&m[1][1] / &det, -&m[0][1] / &det], [-&m[1][0] / &det, &m[0][0] / &det]])
}

pub fn mat2_apply(m: &Mat2, v: &[Rational; 2]) -> [Rational; 2] {
    [&m[0][0] * &v[0] + &m[0][1] * &v[1], &m[1][0] * &v[0] + &m[1][1] * &v[1]]
}

/// `m^k` for any integer `k`; `None` if `k < 0` and `m` is singular.
pub fn mat2_pow(m: &Mat2, k: i64) -> Option<Mat2> {
    let base = if k < 0 { mat2_inverse(m)? } else { m.clone() };
    let mut e = k.unsigned_abs();
    let (mut acc, mut sq) = (mat2_identity(), base);
    while e > 0 {
        if e & 1 == 1 {
            acc = mat2_mul(&acc, &sq);
        }
        sq = mat2_mul(&sq, &sq);
        e >>= 1;
    }
    Some(acc)
}

/// An infinite cyclic group `<g>` acting on the sheet
/// `{a x1^2 - b x2^2 > 0, x1 > 0}` of a hyperbolic binary form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction2D {
    a: Rational,
    b: Rational,
    g: Mat2,
    g_inv: Mat2,
}

impl GroupAction2D {
    /// Checks that `g^T diag(a, -b) g` is a positive multiple of
    /// `diag(a, -b)` and that `g` maps the `x1 > 0` sheet to itself.
    pub fn new(a: Rational, b: Rational, g: Mat2) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::InvalidInput("the form a x1^2 - b x2^2 needs a, b > 0".into()));
        }
        let q: Mat2 = [[a.clone(), Rational::zero()], [Rational::zero(), -&b]];
        let pulled = mat2_mul(&mat2_transpose(&g), &mat2_mul(&q, &g));
        let lambda = &pulled[0][0] / &a;
        let preserved =
            lambda.is_positive() && pulled[0][1].is_zero() && pulled[1][0].is_zero() && pulled[1][1] == -&b * &lambda;
        if !preserved {
            return Err(Error::InvalidInput("g does not preserve the form up to a positive scalar".into()));
        }
        if !g[0][0].is_positive() {
            return Err(Error::InvalidInput("g swaps the two sheets of the cone".into()));
        }
        let g_inv = mat2_inverse(&g).expect("form-preserving maps are invertible");
        Ok(Self { a, b, g, g_inv })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn generator(&self) -> &Mat2 {
        &self.g
    }

    pub fn power(&self, k: i64) -> Mat2 {
        mat2_pow(&self.g, k).expect("g is invertible")
    }

    /// `a x1^2 - b x2^2`.
    pub fn form_value(&self, p: &[Rational; 2]) -> Rational {
        &self.a * &p[0] * &p[0] - &self.b * &p[1] * &p[1]
    }

    pub fn in_open_cone(&self, p: &[Rational; 2]) -> bool {
        p[0].is_positive() && self.form_value(p).is_positive()
    }

    pub fn in_closed_cone(&self, p: &[Rational; 2]) -> bool {
        !p[0].is_negative() && !self.form_value(p).is_negative()
    }

    pub fn apply(&self, p: &[Rational; 2]) -> [Rational; 2] {
        mat2_apply(&self.g, p)
    }

    pub fn apply_inverse(&self, p: &[Rational; 2]) -> [Rational; 2] {
        mat2_apply(&self.g_inv, p)
    }

    /// `g^k p`.
    pub fn apply_power(&self, k: i64, p: &[Rational; 2]) -> [Rational; 2] {
        let mut q = p.clone();
        for _ in 0..k.unsigned_abs() {
            q = if k > 0 { self.apply(&q) } else { self.apply_inverse(&q) };
        }
        q
    }

    /// Translate `g^k Pi` of a cone.
    pub fn translate(&self, pi: &PolyhedralCone, k: i64) -> Result<PolyhedralCone> {
        let m = self.power(k);
        pi.linear_image(&[m[0].to_vec(), m[1].to_vec()])
    }
}

/// Search bound used by [`translate_locate`].
pub const DEFAULT_LOCATE_STEPS: u32 = 4096;

fn slope(p: &[Rational; 2]) -> Rational {
    &p[1] / &p[0]
}

/// The `k` with `g^-k p` in `pi` (closed membership).
///
/// A point on the ray shared by two consecutive translates reports the
/// larger index, so for `pi = cone{R, g R}` the translate `g^k pi` owns
/// `g^k R` but not `g^(k+1) R`. The translates are ordered along the cone
/// by slope and `g` moves every slope monotonically in one direction, so
/// the search walks toward `pi` one translate at a time.
pub fn translate_locate(p: &[Rational; 2], pi: &PolyhedralCone, action: &GroupAction2D) -> Result<i64> {
    translate_locate_within(p, pi, action, DEFAULT_LOCATE_STEPS)
}

/// [`translate_locate`] with an explicit bound on the number of steps.
pub fn translate_locate_within(
    p: &[Rational; 2],
    pi: &PolyhedralCone,
    action: &GroupAction2D,
    max_steps: u32,
) -> Result<i64> {
    if pi.dim() != 2 {
        return Err(Error::ShapeMismatch(format!("a {}-dimensional cone in the plane", pi.dim())));
    }
    if !action.in_open_cone(p) {
        return Err(Error::NotInCone);
    }
    let slopes: Vec<Rational> = pi
        .rays()
        .iter()
        .map(|r| {
            let v = r.to_rational();
            if v[0].is_positive() {
                Ok(&v[1] / &v[0])
            } else {
                Err(Error::PreconditionViolated(format!("ray {r} leaves the half-plane x1 > 0")))
            }
        })
        .collect::<Result<_>>()?;
    let lo = slopes.iter().min().expect("nonempty").clone();
    let hi = slopes.iter().max().expect("nonempty").clone();
    let inside = |q: &[Rational; 2]| poly_member(pi, q.as_slice(), false).expect("dimension 2");
    // which side of pi a point lies on: Less = below lo, Greater = above hi
    let side = |q: &[Rational; 2]| {
        let s = slope(q);
        if s < lo {
            Ordering::Less
        } else if s > hi {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    };

    let direction = slope(&action.apply(p)).cmp(&slope(p));
    let mut q = p.clone();
    let mut k: i64 = 0;
    let mut steps = 0u32;
    while !inside(&q) {
        if direction == Ordering::Equal {
            return Err(Error::NotFundamental(steps));
        }
        let before = side(&q);
        // move the slope toward pi: g^-1 lowers k's preimage, g raises it
        let lower_slope = before == Ordering::Greater;
        if lower_slope == (direction == Ordering::Greater) {
            q = action.apply_inverse(&q);
            k += 1;
        } else {
            q = action.apply(&q);
            k -= 1;
        }
        steps += 1;
        let after = side(&q);
        if after != Ordering::Equal && after != before {
            return Err(Error::NotFundamental(steps));
        }
        if steps > max_steps {
            return Err(Error::NotFundamental(max_steps));
        }
    }
    // ties on shared boundary rays resolve to the larger index
    loop {
        let next = action.apply_inverse(&q);
        if !inside(&next) || steps > max_steps {
            break;
        }
        q = next;
        k += 1;
        steps += 1;
    }
    Ok(k)
}
