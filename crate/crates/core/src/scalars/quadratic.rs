use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{check_radicand, Rational};
use crate::{Error, Result};

/// An element `a + b sqrt(d)` of the real quadratic field `Q(sqrt d)`.
///
/// Values over different radicands never combine; the binary operations
/// return [`Error::FieldMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadIrrational {
    d: u64,
    a: Rational,
    b: Rational,
}

impl QuadIrrational {
    pub fn new(d: u64, a: Rational, b: Rational) -> Result<Self> {
        check_radicand(d)?;
        Ok(Self { d, a, b })
    }

    pub fn from_ints(d: u64, a: i64, b: i64) -> Result<Self> {
        Self::new(d, Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(d, Rational::zero(), Rational::one())
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.d, other.d))
        }
    }

    fn with(&self, a: Rational, b: Rational) -> Self {
        Self { d: self.d, a, b }
    }

    pub fn zero_like(&self) -> Self {
        self.with(Rational::zero(), Rational::zero())
    }

    pub fn one_like(&self) -> Self {
        self.with(Rational::one(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(&self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(&self.a - &other.a, &self.b - &other.b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let d = Rational::from_integer(BigInt::from(self.d));
        let a = &self.a * &other.a + d * &self.b * &other.b;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(self.with(a, b))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or_else(|| Error::InvalidInput("division by zero".into()))?;
        self.try_mul(&inv)
    }

    pub fn neg(&self) -> Self {
        self.with(-&self.a, -&self.b)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.with(&self.a * q, &self.b * q)
    }

    /// Galois conjugate `a - b sqrt(d)`.
    pub fn conj(&self) -> Self {
        self.with(self.a.clone(), -&self.b)
    }

    /// Field norm `a^2 - d b^2`.
    pub fn norm(&self) -> Rational {
        let d = Rational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - d * &self.b * &self.b
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    /// Multiplicative inverse; `None` for zero. Nonzero elements always
    /// have nonzero norm because `d` is not a square.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(self.with(c.a / &n, c.b / n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same field");
            }
            base = base.try_mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Sign of the real number `a + b sqrt(d)` under the embedding with
    /// `sqrt(d) > 0`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a^2 with d b^2
            (sa, _) => {
                let d = Rational::from_integer(BigInt::from(self.d));
                let lhs = &self.a * &self.a;
                let rhs = d * &self.b * &self.b;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => unreachable!("d is not a square"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Exact comparison of real values.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(self.try_sub(other)?.signum())
    }

    /// Floating-point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    /// True when both `a` and `b` are integers, i.e. the value lies in `Z[sqrt d]`.
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }
}

impl fmt::Display for QuadIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d;
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√{d}", coefficient(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} {}√{d}", self.a, coefficient(&self.b.abs()))
            }
        }
    }
}

fn coefficient(q: &Rational) -> String {
    if q.is_one() {
        String::new()
    } else if *q == -Rational::one() {
        "-".into()
    } else if q.is_integer() {
        q.to_string()
    } else {
        format!("({q})")
    }
}
