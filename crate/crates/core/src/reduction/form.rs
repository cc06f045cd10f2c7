use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Positive-definite integral binary form with Gram matrix
/// `[[g11, g12], [g12, g22]]`, i.e. `g11 x^2 + 2 g12 x y + g22 y^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralForm {
    g11: BigInt,
    g12: BigInt,
    g22: BigInt,
}

impl IntegralForm {
    pub fn new(g11: BigInt, g12: BigInt, g22: BigInt) -> Result<Self> {
        if !g11.is_positive() || !(&g11 * &g22 - &g12 * &g12).is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Self { g11, g12, g22 })
    }

    pub fn from_ints(g11: i64, g12: i64, g22: i64) -> Result<Self> {
        Self::new(g11.into(), g12.into(), g22.into())
    }

    pub fn g11(&self) -> &BigInt {
        &self.g11
    }

    pub fn g12(&self) -> &BigInt {
        &self.g12
    }

    pub fn g22(&self) -> &BigInt {
        &self.g22
    }

    pub fn determinant(&self) -> BigInt {
        &self.g11 * &self.g22 - &self.g12 * &self.g12
    }

    /// `U^T G U`.
    pub fn transform(&self, u: &UnimodularMatrix) -> Self {
        let [[p, q], [r, s]] = &u.0;
        let (a, b, c) = (&self.g11, &self.g12, &self.g22);
        // columns (p, r) and (q, s) of U
        let g11 = a * p * p + BigInt::from(2) * b * p * r + c * r * r;
        let g12 = a * p * q + b * (p * s + q * r) + c * r * s;
        let g22 = a * q * q + BigInt::from(2) * b * q * s + c * s * s;
        Self { g11, g12, g22 }
    }

    /// `0 <= 2|g12| <= g11 <= g22`, with `g12 >= 0` on the boundary cases
    /// `2|g12| = g11` or `g11 = g22`.
    pub fn is_reduced(&self) -> bool {
        let two_b = BigInt::from(2) * self.g12.abs();
        let basic = two_b <= self.g11 && self.g11 <= self.g22;
        let boundary = two_b == self.g11 || self.g11 == self.g22;
        basic && (!boundary || !self.g12.is_negative())
    }
}

impl fmt::Display for IntegralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.g11, self.g12, self.g12, self.g22)
    }
}

/// A 2x2 integer matrix of determinant one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix([[BigInt; 2]; 2]);

impl UnimodularMatrix {
    pub fn new(m: [[BigInt; 2]; 2]) -> Result<Self> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if !det.is_one() {
            return Err(Error::InvalidInput(format!("determinant {det}, expected 1")));
        }
        Ok(Self(m))
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(m.map(|row| row.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]]).expect("det 1")
    }

    /// `S = [[0, -1], [1, 0]]`.
    pub fn s() -> Self {
        Self::from_ints([[0, -1], [1, 0]]).expect("det 1")
    }

    /// `T^k = [[1, k], [0, 1]]`.
    pub fn t_pow(k: BigInt) -> Self {
        Self([[BigInt::one(), k], [BigInt::zero(), BigInt::one()]])
    }

    pub fn entries(&self) -> &[[BigInt; 2]; 2] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Self([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn inverse(&self) -> Self {
        let [[p, q], [r, s]] = &self.0;
        Self([[s.clone(), -q], [-r, p.clone()]])
    }

    pub fn determinant(&self) -> BigInt {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[p, q], [r, s]] = &self.0;
        write!(f, "[[{p}, {q}], [{r}, {s}]]")
    }
}

/// Lagrange-Gauss reduction: returns the canonical reduced form `Gred` in
/// the `SL(2, Z)` class of `g` and `U` with `U^T G U = Gred`.
///
/// Alternates translating `g12` into `(-g11/2, g11/2]` with a power of `T`
/// and swapping with `S` while `g11 > g22`; `g11` strictly decreases at
/// every swap.
pub fn minkowski_reduce(g: &IntegralForm) -> Result<(IntegralForm, UnimodularMatrix)> {
    let mut form = IntegralForm::new(g.g11.clone(), g.g12.clone(), g.g22.clone())?;
    let mut u = UnimodularMatrix::identity();
    loop {
        let (a, b) = (&form.g11, &form.g12);
        let k = (a - BigInt::from(2) * b).div_floor(&(BigInt::from(2) * a));
        if !k.is_zero() {
            let t = UnimodularMatrix::t_pow(k);
            form = form.transform(&t);
            u = u.mul(&t);
        }
        if form.g11 > form.g22 {
            form = form.transform(&UnimodularMatrix::s());
            u = u.mul(&UnimodularMatrix::s());
        } else {
            break;
        }
    }
    if form.g11 == form.g22 && form.g12.is_negative() {
        form = form.transform(&UnimodularMatrix::s());
        u = u.mul(&UnimodularMatrix::s());
    }
    debug_assert!(form.is_reduced());
    Ok((form, u))
}
