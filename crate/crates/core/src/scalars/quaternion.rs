use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Hamilton quaternion `w + x i + y j + z k` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalQuaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RationalQuaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Self { w, x, y, z }
    }

    pub fn real(w: Rational) -> Self {
        Self::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn j() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn k() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Reduced norm `w^2 + x^2 + y^2 + z^2`.
    pub fn norm(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.w * q, &self.x * q, &self.y * q, &self.z * q)
    }

    /// Two-sided inverse `conj(q) / N(q)`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(self.conj().scale(&(Rational::one() / self.norm())))
    }
}

impl Zero for RationalQuaternion {
    fn zero() -> Self {
        RationalQuaternion::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        RationalQuaternion::is_zero(self)
    }
}

impl One for RationalQuaternion {
    fn one() -> Self {
        RationalQuaternion::real(Rational::one())
    }
}

impl Add for RationalQuaternion {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.w + r.w, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl Sub for RationalQuaternion {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.w - r.w, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl Mul for RationalQuaternion {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&r.w, &r.x, &r.y, &r.z);
        Self::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Neg for RationalQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl fmt::Display for RationalQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.w.is_zero() {
            parts.push(self.w.to_string());
        }
        for (c, u) in [(&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if !c.is_zero() {
                parts.push(format!("{c}{u}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}
