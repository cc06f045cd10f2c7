//! Double description method over the integers.
//!
//! Converts `{x : a_i . x >= 0}` into generators `L + cone(R)` with `L` a
//! lineality basis and `R` the extreme rays of the pointed part. Rays are
//! kept as primitive integer vectors; new rays are built only from adjacent
//! pairs, using the algebraic rank test on their common active constraints.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalars::Rational;

pub(crate) type IntVec = Vec<BigInt>;

#[derive(Debug, Default)]
pub(crate) struct Generators {
    pub lineality: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

struct Ray {
    v: IntVec,
    zeros: Vec<bool>,
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides out the gcd of the entries; sign is kept.
pub(crate) fn primitive(v: IntVec) -> IntVec {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Clears denominators and divides out the content, keeping orientation.
pub(crate) fn primitive_from_rational(v: &[Rational]) -> IntVec {
    let l = v.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| x.numer() * (&l / x.denom())).collect())
}

fn combine(c1: &BigInt, v1: &[BigInt], c2: &BigInt, v2: &[BigInt]) -> IntVec {
    primitive(v1.iter().zip(v2).map(|(x, y)| c1 * x - c2 * y).collect())
}

/// Rank over `Q` of a set of integer vectors.
pub(crate) fn rank(vectors: &[&[BigInt]], dim: usize) -> usize {
    let mut rows: Vec<Vec<Rational>> =
        vectors.iter().map(|v| v.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &pivot;
            for k in col..dim {
                let delta = &f * &rows[rank][k];
                rows[i][k] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn double_description(dim: usize, constraints: &[IntVec]) -> Generators {
    let mut lineality: Vec<IntVec> =
        (0..dim).map(|i| (0..dim).map(|k| BigInt::from((k == i) as i32)).collect()).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (t, a) in constraints.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0 = l0.into_iter().map(|x| -x).collect();
                al0 = -al0;
            }
            lineality = lineality.iter().map(|l| combine(&al0, l, &dot(a, l), &l0)).collect();
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                r.v = combine(&al0, &r.v, &ar, &l0);
                r.zeros.push(true);
            }
            let mut zeros = vec![true; t];
            zeros.push(false);
            rays.push(Ray { v: l0, zeros });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let ell = lineality.len();
        for (i, p) in rays.iter().enumerate() {
            if !values[i].is_positive() {
                continue;
            }
            for (j, n) in rays.iter().enumerate() {
                if !values[j].is_negative() {
                    continue;
                }
                let common: Vec<bool> = p.zeros.iter().zip(&n.zeros).map(|(x, y)| *x && *y).collect();
                let active: Vec<&[BigInt]> =
                    common.iter().enumerate().filter(|(_, &z)| z).map(|(k, _)| constraints[k].as_slice()).collect();
                if dim < ell + 2 || rank(&active, dim) != dim - ell - 2 {
                    continue;
                }
                // (a.p) n - (a.n) p, a positive combination vanishing on a
                let v = combine(&values[i], &n.v, &values[j], &p.v);
                let mut zeros = common;
                zeros.push(true);
                next.push(Ray { v, zeros });
            }
        }
        for (r, val) in rays.into_iter().zip(&values) {
            if val.is_negative() {
                continue;
            }
            let mut r = r;
            r.zeros.push(val.is_zero());
            next.push(r);
        }
        rays = next;
        rays.dedup_by(|x, y| x.v == y.v);
    }

    let mut out: Vec<IntVec> = Vec::new();
    for r in rays {
        if r.v.iter().any(|x| !x.is_zero()) && !out.contains(&r.v) {
            out.push(r.v);
        }
    }
    Generators { lineality, rays: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> IntVec {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn orthant_from_inequalities() {
        let g = double_description(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])]);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(rays, vec![iv(&[0, 0, 1]), iv(&[0, 1, 0]), iv(&[1, 0, 0])]);
    }

    #[test]
    fn square_pyramid_has_four_rays() {
        // x3 >= |x1|, x3 >= |x2|
        let cons = [iv(&[1, 0, 1]), iv(&[-1, 0, 1]), iv(&[0, 1, 1]), iv(&[0, -1, 1])];
        let g = double_description(3, &cons);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(rays, vec![iv(&[-1, -1, 1]), iv(&[-1, 1, 1]), iv(&[1, -1, 1]), iv(&[1, 1, 1])]);
    }

    #[test]
    fn half_space_keeps_lineality() {
        let g = double_description(2, &[iv(&[1, 0])]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays, vec![iv(&[1, 0])]);
    }

    #[test]
    fn infeasible_except_origin() {
        let g = double_description(2, &[iv(&[1, 0]), iv(&[-1, 0]), iv(&[0, 1]), iv(&[0, -1])]);
        assert!(g.lineality.is_empty());
        assert!(g.rays.is_empty());
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(iv(&[-4, 6])), iv(&[-2, 3]));
        let v = [Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 3.into())];
        assert_eq!(primitive_from_rational(&v), iv(&[3, -2]));
    }
}
