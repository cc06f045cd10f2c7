use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use super::{check_radicand, is_perfect_square, QuadIrrational, Rational};
use crate::{Error, Result};

/// A unit of `Z[sqrt d]` together with its norm (`+1` or `-1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitElement {
    value: QuadIrrational,
    norm: i8,
}

impl UnitElement {
    pub fn new(value: QuadIrrational) -> Result<Self> {
        if !value.is_integral() {
            return Err(Error::InvalidInput(format!("{value} is not in Z[√{}]", value.d())));
        }
        let n = value.norm();
        let norm = if n.is_one() {
            1
        } else if n == -Rational::one() {
            -1
        } else {
            return Err(Error::InvalidInput(format!("{value} has norm {n}, not ±1")));
        };
        Ok(Self { value, norm })
    }

    pub fn value(&self) -> &QuadIrrational {
        &self.value
    }

    pub fn norm(&self) -> i8 {
        self.norm
    }

    /// `u^2`, which always has norm `+1` and is totally positive.
    pub fn squared(&self) -> Self {
        Self { value: self.value.pow(2), norm: 1 }
    }

    pub fn is_totally_positive(&self) -> bool {
        is_totally_positive(&self.value)
    }
}

/// Simple continued fraction of `sqrt(d)`: returns `floor(sqrt d)` and one
/// full period, whose last term is `2 floor(sqrt d)`.
pub fn continued_fraction_sqrt(d: u64) -> Result<(u64, Vec<u64>)> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("continued fraction of sqrt({d})")));
    }
    let a0 = d.sqrt();
    if a0 * a0 == d {
        return Err(Error::PerfectSquareInput);
    }
    // sqrt(d) = [a0; a1, a2, ...] via the (m, q, a) recurrence on
    // complete quotients (sqrt(d) + m) / q.
    let (d, a0w) = (d as u128, a0 as u128);
    let (mut m, mut q, mut a) = (0u128, 1u128, a0w);
    let mut period = Vec::new();
    loop {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0w + m) / q;
        period.push(a as u64);
        if a == 2 * a0w {
            break;
        }
    }
    Ok((a0, period))
}

/// The smallest unit `a + b sqrt(d)` of `Z[sqrt d]` with `a, b > 0`.
///
/// Read off from the convergent closing the first period of the continued
/// fraction of `sqrt(d)`; its norm is `(-1)^period_len`.
pub fn fundamental_unit(d: u64) -> Result<UnitElement> {
    if d >= 2 && is_perfect_square(&BigInt::from(d)) {
        return Err(Error::PerfectSquareInput);
    }
    check_radicand(d)?;
    let (a0, period) = continued_fraction_sqrt(d)?;
    let terms = std::iter::once(a0).chain(period[..period.len() - 1].iter().copied());
    // convergent recurrence seeded with p/q = 1/0 and p_prev/q_prev = 0/1
    let (mut p_prev, mut p) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q) = (BigInt::one(), BigInt::zero());
    for t in terms {
        let t = BigInt::from(t);
        let p_next = &t * &p + &p_prev;
        let q_next = &t * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    let value = QuadIrrational::new(d, Rational::from_integer(p), Rational::from_integer(q))?;
    UnitElement::new(value)
}

/// Both real embeddings of `x` are positive.
pub fn is_totally_positive(x: &QuadIrrational) -> bool {
    x.is_positive() && x.conj().is_positive()
}

/// Unit rank `r1 + r2 - 1` of a number field with `r1` real embeddings
/// and `r2` pairs of complex ones.
pub fn dirichlet_rank(r1: u32, r2: u32) -> Result<u32> {
    (r1 + r2).checked_sub(1).ok_or_else(|| Error::InvalidInput("a number field has r1 + r2 >= 1".into()))
}
