//! Seeded samplers for property checks: small random rationals, Hermitian
//! and positive-definite matrices, invertible matrices and isogeny models.

use num_bigint::BigInt;
use rand::Rng;

use crate::abelian::{AbelianVarietyModel, AlbertForm, SimpleFactor};
use crate::hermitian::{AlgebraMatrix, AnyAlgebraMatrix, AnyHermitian, HermitianMatrix, Scalar, ScalarKind};
use crate::scalars::{GaussianRational, Rational, RationalQuaternion};

/// `p / q` with `|p| <= bound` and `1 <= q <= bound`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-bound..=bound)), BigInt::from(rng.gen_range(1..=bound)))
}

/// Scalars that can be drawn with small rational coordinates.
pub trait RandomScalar: Scalar {
    fn random<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self;
}

impl RandomScalar for Rational {
    fn random<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        rational(rng, bound)
    }
}

impl RandomScalar for GaussianRational {
    fn random<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        GaussianRational::new(rational(rng, bound), rational(rng, bound))
    }
}

impl RandomScalar for RationalQuaternion {
    fn random<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        RationalQuaternion::new(rational(rng, bound), rational(rng, bound), rational(rng, bound), rational(rng, bound))
    }
}

pub fn matrix<S: RandomScalar, R: Rng + ?Sized>(rng: &mut R, r: usize, bound: i64) -> AlgebraMatrix<S> {
    AlgebraMatrix::from_fn(r, |_, _| S::random(rng, bound))
}

/// An invertible matrix, by rejection.
pub fn invertible<S: RandomScalar, R: Rng + ?Sized>(rng: &mut R, r: usize, bound: i64) -> AlgebraMatrix<S> {
    loop {
        let m = matrix(rng, r, bound);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A Hermitian matrix with independent random upper triangle.
pub fn hermitian<S: RandomScalar, R: Rng + ?Sized>(rng: &mut R, r: usize, bound: i64) -> HermitianMatrix<S> {
    let mut m = AlgebraMatrix::<S>::zeros(r);
    for i in 0..r {
        m.set(i, i, S::from_rational(rational(rng, bound)));
        for j in i + 1..r {
            let x = S::random(rng, bound);
            m.set(j, i, x.conj());
            m.set(i, j, x);
        }
    }
    HermitianMatrix::new(m).expect("hermitian by construction")
}

/// A positive-definite matrix `L diag(delta) L*` with random unit
/// lower-triangular `L` and positive `delta`.
pub fn positive_definite<S: RandomScalar, R: Rng + ?Sized>(rng: &mut R, r: usize, bound: i64) -> HermitianMatrix<S> {
    let mut l = AlgebraMatrix::<S>::identity(r);
    for i in 0..r {
        for j in 0..i {
            l.set(i, j, S::random(rng, bound));
        }
    }
    let delta: Vec<Rational> = (0..r)
        .map(|_| Rational::new(BigInt::from(rng.gen_range(1..=bound)), BigInt::from(rng.gen_range(1..=bound))))
        .collect();
    crate::hermitian::act(&l.conj_transpose(), &HermitianMatrix::diagonal(&delta)).expect("L invertible")
}

pub fn any_positive_definite<R: Rng + ?Sized>(rng: &mut R, kind: ScalarKind, r: usize, bound: i64) -> AnyHermitian {
    match kind {
        ScalarKind::Real => AnyHermitian::Real(positive_definite(rng, r, bound)),
        ScalarKind::Complex => AnyHermitian::Complex(positive_definite(rng, r, bound)),
        ScalarKind::Quaternion => AnyHermitian::Quaternion(positive_definite(rng, r, bound)),
    }
}

pub fn any_invertible<R: Rng + ?Sized>(rng: &mut R, kind: ScalarKind, r: usize, bound: i64) -> AnyAlgebraMatrix {
    match kind {
        ScalarKind::Real => AnyAlgebraMatrix::Real(invertible(rng, r, bound)),
        ScalarKind::Complex => AnyAlgebraMatrix::Complex(invertible(rng, r, bound)),
        ScalarKind::Quaternion => AnyAlgebraMatrix::Quaternion(invertible(rng, r, bound)),
    }
}

const FORMS: [AlbertForm; 5] = [
    AlbertForm::RealSplit,
    AlbertForm::ComplexSplit,
    AlbertForm::QuaternionSplit,
    AlbertForm::Mat2Real,
    AlbertForm::Mat2Complex,
];

/// A model with up to `max_factors` factors, `1 <= m <= max_m`,
/// `1 <= n <= max_n`.
pub fn model<R: Rng + ?Sized>(rng: &mut R, max_factors: usize, max_m: u32, max_n: u32) -> AbelianVarietyModel {
    let k = rng.gen_range(1..=max_factors);
    let factors = (0..k)
        .map(|i| {
            let form = FORMS[rng.gen_range(0..FORMS.len())];
            SimpleFactor::new(format!("X{i}"), form, rng.gen_range(1..=max_m), rng.gen_range(1..=max_n))
        })
        .collect();
    AbelianVarietyModel::new(factors).expect("distinct ids")
}
