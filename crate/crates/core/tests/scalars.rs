use nefcone::scalars::{
    continued_fraction_sqrt, fundamental_unit, is_squarefree, GaussianRational, QuadIrrational, RationalQuaternion,
};
use nefcone::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=40).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn quaternion() -> impl Strategy<Value = RationalQuaternion> {
    (rational(), rational(), rational(), rational()).prop_map(|(w, x, y, z)| RationalQuaternion::new(w, x, y, z))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn squarefree_d() -> impl Strategy<Value = u64> {
    (2u64..200).prop_filter("squarefree", |&d| is_squarefree(d))
}

fn quad(d: u64) -> impl Strategy<Value = QuadIrrational> {
    (rational(), rational()).prop_map(move |(a, b)| QuadIrrational::new(d, a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quaternion_inverse_is_two_sided(x in quaternion()) {
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert_eq!(x.clone() * inv.clone(), RationalQuaternion::real(Rational::one()));
        prop_assert_eq!(inv * x, RationalQuaternion::real(Rational::one()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn quaternion_ring_axioms(x in quaternion(), y in quaternion(), z in quaternion()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
    }

    #[test]
    fn quaternion_conjugation_is_an_anti_involution(x in quaternion(), y in quaternion()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((x.clone() * y.clone()).conj(), y.conj() * x.conj());
        prop_assert!(x.norm() >= Rational::zero());
        prop_assert_eq!(x.norm().is_zero(), x.is_zero());
    }

    #[test]
    fn gaussian_field_axioms(x in gaussian(), y in gaussian(), z in gaussian()) {
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.conj().im, -x.im.clone());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.inv().unwrap(), GaussianRational::real(Rational::one()));
        }
    }

    #[test]
    fn quadratic_field_axioms(
        (x, y, z) in squarefree_d().prop_flat_map(|d| (quad(d), quad(d), quad(d)))
    ) {
        let xy = x.try_mul(&y).unwrap();
        prop_assert_eq!(&xy, &y.try_mul(&x).unwrap());
        prop_assert_eq!(xy.try_mul(&z).unwrap(), x.try_mul(&y.try_mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.try_mul(&y.try_add(&z).unwrap()).unwrap(),
            xy.try_add(&x.try_mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
        if !x.is_zero() {
            prop_assert_eq!(x.try_mul(&x.inv().unwrap()).unwrap(), x.one_like());
        }
    }

    #[test]
    fn quadratic_fields_do_not_mix(d in squarefree_d(), e in squarefree_d()) {
        prop_assume!(d != e);
        let x = QuadIrrational::sqrt(d).unwrap();
        let y = QuadIrrational::sqrt(e).unwrap();
        prop_assert!(x.try_add(&y).is_err());
        prop_assert!(x.try_mul(&y).is_err());
    }
}

/// The purely periodic surd `floor(sqrt d) + sqrt d` is fixed by the Mobius
/// transform of its period `[2 a0; a1, ..., a_{p-1}]`.
#[test]
fn continued_fraction_period_fixes_the_surd() {
    for d in (2u64..400).filter(|&d| is_squarefree(d)) {
        let (a0, period) = continued_fraction_sqrt(d).unwrap();
        assert_eq!(*period.last().unwrap(), 2 * a0);
        let terms = std::iter::once(2 * a0).chain(period[..period.len() - 1].iter().copied());
        let mut m = [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]];
        for t in terms {
            // m := m * [[t, 1], [1, 0]]
            let t = BigInt::from(t);
            m = [[&t * &m[0][0] + &m[0][1], m[0][0].clone()], [&t * &m[1][0] + &m[1][1], m[1][0].clone()]];
        }
        let y = QuadIrrational::new(d, Rational::from_integer(BigInt::from(a0)), Rational::one()).unwrap();
        let c = |n: &BigInt| QuadIrrational::new(d, Rational::from_integer(n.clone()), Rational::zero()).unwrap();
        let lhs = y.try_mul(&c(&m[1][0]).try_mul(&y).unwrap().try_add(&c(&m[1][1])).unwrap()).unwrap();
        let rhs = c(&m[0][0]).try_mul(&y).unwrap().try_add(&c(&m[0][1])).unwrap();
        assert_eq!(lhs, rhs, "d = {d}");
    }
}

#[test]
fn fundamental_unit_is_minimal() {
    for d in (2u64..=60).filter(|&d| is_squarefree(d)) {
        let u = fundamental_unit(d).unwrap();
        let (a, b) = (u.value().a().to_integer(), u.value().b().to_integer());
        let n = &a * &a - BigInt::from(d) * &b * &b;
        assert!(n == BigInt::one() || n == -BigInt::one(), "d = {d}");
        let b_max: u64 = b.try_into().unwrap();
        for bb in 1..b_max {
            let t = d * bb * bb;
            for s in [t - 1, t + 1] {
                let r = s.isqrt();
                assert_ne!(r * r, s, "d = {d}: smaller unit with b = {bb}");
            }
        }
    }
}
