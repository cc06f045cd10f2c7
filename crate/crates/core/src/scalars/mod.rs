//! Exact coefficient rings.
//!
//! Everything is built on [`Rational`] (an eagerly normalized
//! arbitrary-precision fraction). On top of it sit the real quadratic fields
//! `Q(sqrt d)`, the Gaussian rationals `Q(i)` and the rational quaternions,
//! which supply the entries of the three families of Hermitian matrix cones.

mod gaussian;
mod quadratic;
mod quaternion;
mod units;

pub use gaussian::GaussianRational;
pub use quadratic::QuadIrrational;
pub use quaternion::RationalQuaternion;
pub use units::{continued_fraction_sqrt, dirichlet_rank, fundamental_unit, is_totally_positive, UnitElement};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Checks that `d` can serve as the radicand of a real quadratic field.
pub fn check_radicand(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("radicand {d} must be at least 2")));
    }
    if is_perfect_square(&BigInt::from(d)) {
        return Err(Error::PerfectSquareInput);
    }
    if !is_squarefree(d) {
        return Err(Error::InvalidInput(format!("radicand {d} is not squarefree")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q, rat(-3, 2));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("9/4").unwrap(), rat(9, 4));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
    }

    #[test]
    fn squarefree_and_squares() {
        let sf: Vec<u64> = (1..=30).filter(|&n| is_squarefree(n)).collect();
        assert_eq!(sf, vec![1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30]);
        assert!(is_perfect_square(&BigInt::from(144)));
        assert!(!is_perfect_square(&BigInt::from(145)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
        assert_eq!(check_radicand(9), Err(Error::PerfectSquareInput));
        assert!(matches!(check_radicand(8), Err(Error::InvalidInput(_))));
        assert!(matches!(check_radicand(1), Err(Error::InvalidInput(_))));
        assert!(check_radicand(7).is_ok());
    }
}
