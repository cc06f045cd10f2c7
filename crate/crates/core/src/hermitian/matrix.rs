#![allow(clippy::needless_range_loop)]

use std::fmt;

use num_traits::{Signed, Zero};

use super::Scalar;
use crate::scalars::Rational;
use crate::{Error, Result};

/// Square `r x r` matrix over a [`Scalar`], row-major, no symmetry assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMatrix<S> {
    r: usize,
    entries: Vec<S>,
}

impl<S: Scalar> AlgebraMatrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::ShapeMismatch("matrix must have at least one row".into()));
        }
        if rows.iter().any(|row| row.len() != r) {
            return Err(Error::ShapeMismatch(format!("expected {r} x {r} entries")));
        }
        Ok(Self { r, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(r: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(r > 0, "matrix size must be positive");
        let entries = (0..r * r).map(|k| f(k / r, k % r)).collect();
        Self { r, entries }
    }

    pub fn identity(r: usize) -> Self {
        Self::from_fn(r, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn zeros(r: usize) -> Self {
        Self::from_fn(r, |_, _| S::zero())
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { S::from_rational(diag[i].clone()) } else { S::zero() })
    }

    pub fn size(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.r + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.r + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.entries.chunks(self.r).map(|c| c.to_vec()).collect()
    }

    /// `M*`: transpose composed with entrywise conjugation.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.r, |i, j| self.get(j, i).conj())
    }

    fn check_same_size(&self, other: &Self) -> Result<()> {
        if self.r == other.r {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("{0}x{0} vs {1}x{1}", self.r, other.r)))
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        let r = self.r;
        Ok(Self::from_fn(r, |i, j| {
            (0..r).fold(S::zero(), |acc, k| acc + self.get(i, k).clone() * other.get(k, j).clone())
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        Ok(Self::from_fn(self.r, |i, j| self.get(i, j).clone() + other.get(i, j).clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        Ok(Self::from_fn(self.r, |i, j| self.get(i, j).clone() - other.get(i, j).clone()))
    }

    /// Inverse by Gauss-Jordan elimination with left row operations, which
    /// stays valid over the noncommutative quaternions. `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let r = self.r;
        let mut a = self.rows();
        let mut b = Self::identity(r).rows();
        for c in 0..r {
            let p = (c..r).find(|&i| !a[i][c].is_zero())?;
            a.swap(c, p);
            b.swap(c, p);
            let pinv = a[c][c].inv()?;
            for k in 0..r {
                a[c][k] = pinv.clone() * a[c][k].clone();
                b[c][k] = pinv.clone() * b[c][k].clone();
            }
            for i in 0..r {
                if i == c || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for k in 0..r {
                    a[i][k] = a[i][k].clone() - f.clone() * a[c][k].clone();
                    b[i][k] = b[i][k].clone() - f.clone() * b[c][k].clone();
                }
            }
        }
        Some(Self::from_rows(b).expect("square"))
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        (0..self.r).all(|i| {
            (0..self.r).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Less => self.get(i, j).is_zero(),
                std::cmp::Ordering::Equal => *self.get(i, j) == S::one(),
                std::cmp::Ordering::Greater => true,
            })
        })
    }

    /// `M* x` style product with a column vector, `self * v`.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        (0..self.r).map(|i| (0..self.r).fold(S::zero(), |acc, k| acc + self.get(i, k).clone() * v[k].clone())).collect()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for AlgebraMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// A matrix equal to its conjugate transpose. Diagonal entries are real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix<S>(AlgebraMatrix<S>);

impl<S: Scalar> HermitianMatrix<S> {
    pub fn new(m: AlgebraMatrix<S>) -> Result<Self> {
        let r = m.size();
        for i in 0..r {
            for j in i..r {
                if *m.get(i, j) != m.get(j, i).conj() {
                    return Err(Error::InvalidInput(format!("entry ({i}, {j}) breaks M = M*")));
                }
            }
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        Self::new(AlgebraMatrix::from_rows(rows)?)
    }

    pub fn identity(r: usize) -> Self {
        Self(AlgebraMatrix::identity(r))
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        Self(AlgebraMatrix::diagonal(diag))
    }

    /// `v v*`, positive semidefinite of rank one (or zero).
    pub fn rank_one(v: &[S]) -> Self {
        Self(AlgebraMatrix::from_fn(v.len(), |i, j| v[i].clone() * v[j].conj()))
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        self.0.get(i, j)
    }

    /// Real diagonal entry.
    pub fn diag(&self, i: usize) -> Rational {
        self.0.get(i, i).real_part()
    }

    pub fn as_matrix(&self) -> &AlgebraMatrix<S> {
        &self.0
    }

    pub fn into_matrix(self) -> AlgebraMatrix<S> {
        self.0
    }

    pub fn trace(&self) -> Rational {
        (0..self.size()).map(|i| self.diag(i)).sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.add(&other.0)?))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let s = S::from_rational(q.clone());
        Self(AlgebraMatrix::from_fn(self.size(), |i, j| s.clone() * self.get(i, j).clone()))
    }

    /// `u* D v` for column vectors `u`, `v`.
    pub fn sesquilinear(&self, u: &[S], v: &[S]) -> S {
        let r = self.size();
        let mut acc = S::zero();
        for a in 0..r {
            for b in 0..r {
                acc = acc + u[a].conj() * self.get(a, b).clone() * v[b].clone();
            }
        }
        acc
    }

    /// Real coordinates with respect to [`hermitian_basis`]: diagonal
    /// entries, then for each `i < j` the coordinates of entry `(i, j)`.
    pub fn real_coords(&self) -> Vec<Rational> {
        let r = self.size();
        let mut out: Vec<Rational> = (0..r).map(|i| self.diag(i)).collect();
        for i in 0..r {
            for j in i + 1..r {
                out.extend(self.get(i, j).coords());
            }
        }
        out
    }
}

/// Real part of `Tr(x y*)`; for Hermitian arguments the trace is real.
pub fn trace_inner_product<S: Scalar>(x: &HermitianMatrix<S>, y: &HermitianMatrix<S>) -> Result<Rational> {
    let r = x.size();
    if r != y.size() {
        return Err(Error::ShapeMismatch(format!("{r}x{r} vs {0}x{0}", y.size())));
    }
    let mut acc = Rational::zero();
    for i in 0..r {
        for j in 0..r {
            acc += (x.get(i, j).clone() * y.get(i, j).conj()).real_part();
        }
    }
    Ok(acc)
}

/// Exact LDL* elimination. Returns the unit lower-triangular factor and the
/// pivots, stopping early at the first pivot that is not positive (in which
/// case the returned pivot list ends with it and `L` is partial).
fn ldl<S: Scalar>(d: &HermitianMatrix<S>) -> (AlgebraMatrix<S>, Vec<Rational>) {
    let r = d.size();
    let mut l = AlgebraMatrix::<S>::identity(r);
    let mut delta: Vec<Rational> = Vec::with_capacity(r);
    for j in 0..r {
        // delta_j = D_jj - sum_k L_jk delta_k conj(L_jk)
        let mut pivot = d.diag(j);
        for k in 0..j {
            pivot -= l.get(j, k).norm() * &delta[k];
        }
        let positive = pivot.is_positive();
        delta.push(pivot.clone());
        if !positive {
            break;
        }
        let pinv = S::from_rational(pivot.recip());
        for i in j + 1..r {
            // L_ij delta_j = D_ij - sum_k L_ik delta_k conj(L_jk)
            let mut acc = d.get(i, j).clone();
            for k in 0..j {
                let dk = S::from_rational(delta[k].clone());
                acc = acc - l.get(i, k).clone() * dk * l.get(j, k).conj();
            }
            l.set(i, j, acc * pinv.clone());
        }
    }
    (l, delta)
}

/// Membership in the open cone of positive-definite matrices: every LDL*
/// pivot is positive.
pub fn is_positive_definite<S: Scalar>(d: &HermitianMatrix<S>) -> bool {
    let (_, delta) = ldl(d);
    delta.len() == d.size() && delta.iter().all(|p| p.is_positive())
}

/// Factor `D = L diag(delta) L*` with `L` unit lower-triangular and every
/// `delta_i > 0`; equivalently `act(L*, diag(delta)) = D`.
pub fn ldl_witness<S: Scalar>(d: &HermitianMatrix<S>) -> Result<(AlgebraMatrix<S>, Vec<Rational>)> {
    let (l, delta) = ldl(d);
    if delta.len() == d.size() && delta.iter().all(|p| p.is_positive()) {
        Ok((l, delta))
    } else {
        Err(Error::NotPositiveDefinite)
    }
}

/// A vector `v` with `v* D v < 0`, or `None` when `D` is positive
/// semidefinite.
///
/// Symmetric elimination on a working basis: a negative pivot is returned
/// directly, a zero pivot with a nonzero off-diagonal entry yields a
/// negative combination of two basis vectors, and a positive pivot is
/// projected out of the remaining vectors.
pub fn negative_direction<S: Scalar>(d: &HermitianMatrix<S>) -> Option<Vec<S>> {
    let r = d.size();
    let mut basis: Vec<Vec<S>> =
        (0..r).map(|i| (0..r).map(|k| if k == i { S::one() } else { S::zero() }).collect()).collect();
    for j in 0..r {
        let a = d.sesquilinear(&basis[j], &basis[j]).real_part();
        if a.is_negative() {
            return Some(basis[j].clone());
        }
        if a.is_zero() {
            for i in j + 1..r {
                let w = d.sesquilinear(&basis[i], &basis[j]);
                if w.is_zero() {
                    continue;
                }
                // v = b_i + b_j c, c = -conj(w) s: v* D v = h_ii - 2 s N(w)
                let h_ii = d.sesquilinear(&basis[i], &basis[i]).real_part();
                let s = (h_ii.abs() + Rational::from_integer(1.into())) / w.norm();
                let c = w.conj() * S::from_rational(-s);
                let v = basis[i].iter().zip(&basis[j]).map(|(bi, bj)| bi.clone() + bj.clone() * c.clone()).collect();
                return Some(v);
            }
            continue;
        }
        for i in j + 1..r {
            let coeff = d.sesquilinear(&basis[j], &basis[i]) * S::from_rational(a.recip());
            let bj = basis[j].clone();
            for (x, y) in basis[i].iter_mut().zip(bj) {
                *x = x.clone() - y * coeff.clone();
            }
        }
    }
    None
}

/// Closed-cone membership: `v* D v >= 0` for every `v`.
pub fn is_positive_semidefinite<S: Scalar>(d: &HermitianMatrix<S>) -> bool {
    negative_direction(d).is_none()
}

/// For `x` outside the closed cone, a positive-definite `y` with
/// `<x, y> < 0`; `None` when `x` is positive semidefinite.
pub fn dual_separator<S: Scalar>(x: &HermitianMatrix<S>) -> Option<HermitianMatrix<S>> {
    let v = negative_direction(x)?;
    let rank_one = HermitianMatrix::rank_one(&v);
    let neg = trace_inner_product(x, &rank_one).expect("same size");
    debug_assert!(neg.is_negative());
    // y = v v* + t I, with t small enough that <x, y> stays negative
    let tr = x.trace();
    let t = if tr.is_positive() {
        -neg / (tr * Rational::from_integer(2.into()))
    } else {
        Rational::from_integer(1.into())
    };
    let y = rank_one.add(&HermitianMatrix::identity(x.size()).scale(&t)).expect("same size");
    Some(y)
}

/// `M* D M`. `M` must be invertible so the result stays in the cone.
pub fn act<S: Scalar>(m: &AlgebraMatrix<S>, d: &HermitianMatrix<S>) -> Result<HermitianMatrix<S>> {
    if m.size() != d.size() {
        return Err(Error::ShapeMismatch(format!("{0}x{0} acting on {1}x{1}", m.size(), d.size())));
    }
    if !m.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let out = m.conj_transpose().mul(d.as_matrix())?.mul(m)?;
    Ok(HermitianMatrix(out))
}

/// Basis of the real vector space of `r x r` Hermitian matrices: `E_ii`,
/// `E_ij + E_ji`, and `u E_ij - u E_ji` for each imaginary unit `u`.
pub fn hermitian_basis<S: Scalar>(r: usize) -> Vec<HermitianMatrix<S>> {
    let unit = |entries: &[(usize, usize, S)]| {
        let mut m = AlgebraMatrix::<S>::zeros(r);
        for (i, j, v) in entries {
            m.set(*i, *j, v.clone());
        }
        HermitianMatrix(m)
    };
    let mut out = Vec::new();
    for i in 0..r {
        out.push(unit(&[(i, i, S::one())]));
    }
    for i in 0..r {
        for j in i + 1..r {
            out.push(unit(&[(i, j, S::one()), (j, i, S::one())]));
            for u in S::imaginary_units() {
                out.push(unit(&[(i, j, u.clone()), (j, i, -u)]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat, GaussianRational, RationalQuaternion};

    type R = Rational;
    type Q = RationalQuaternion;

    fn real(rows: &[&[i64]]) -> HermitianMatrix<R> {
        HermitianMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn alg(rows: &[&[i64]]) -> AlgebraMatrix<R> {
        AlgebraMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn quaternion_example() -> HermitianMatrix<Q> {
        let one = Q::real(int(1));
        HermitianMatrix::from_rows(vec![vec![one.clone(), Q::j()], vec![-Q::j(), one]]).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let i2 = HermitianMatrix::<R>::identity(2);
        assert_eq!(trace_inner_product(&i2, &i2).unwrap(), int(2));
        let e1 = real(&[&[1, 0], &[0, 0]]);
        let e2 = real(&[&[0, 0], &[0, 1]]);
        assert_eq!(trace_inner_product(&e1, &e2).unwrap(), int(0));
        let x = quaternion_example();
        assert_eq!(trace_inner_product(&x, &x).unwrap(), int(4));
        assert!(matches!(trace_inner_product(&i2, &HermitianMatrix::identity(3)), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn hermitian_invariant_is_enforced() {
        assert!(HermitianMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(3), int(1)]]).is_err());
        let i = GaussianRational::i();
        assert!(HermitianMatrix::from_rows(vec![vec![i]]).is_err());
        let z = GaussianRational::new(int(1), int(2));
        let one = GaussianRational::real(int(1));
        assert!(HermitianMatrix::from_rows(vec![vec![one.clone(), z.clone()], vec![z.conj(), one]]).is_ok());
    }

    #[test]
    fn positive_definiteness_examples() {
        assert!(is_positive_definite(&HermitianMatrix::<R>::identity(3)));
        assert!(is_positive_definite(&HermitianMatrix::<GaussianRational>::identity(3)));
        assert!(is_positive_definite(&HermitianMatrix::<Q>::identity(3)));
        assert!(!is_positive_definite(&real(&[&[1, 2], &[2, 1]])));
        assert!(is_positive_definite(&real(&[&[2, -1], &[-1, 2]])));
        assert!(!is_positive_definite(&real(&[&[1, 0], &[0, 0]])));
        assert!(is_positive_semidefinite(&real(&[&[1, 0], &[0, 0]])));
        assert!(is_positive_semidefinite(&real(&[&[1, 1], &[1, 1]])));
        assert!(!is_positive_semidefinite(&real(&[&[0, 1], &[1, 0]])));
        // [[1, j], [-j, 1]] is singular: pivot 1 - N(j) = 0
        assert!(!is_positive_definite(&quaternion_example()));
        assert!(is_positive_semidefinite(&quaternion_example()));
    }

    #[test]
    fn action_examples() {
        let d = real(&[&[2, -1], &[-1, 2]]);
        assert_eq!(act(&AlgebraMatrix::identity(2), &d).unwrap(), d);
        let m = alg(&[&[1, 1], &[0, 1]]);
        assert_eq!(act(&m, &HermitianMatrix::identity(2)).unwrap(), real(&[&[1, 1], &[1, 2]]));
        let m = alg(&[&[2, 0], &[0, 1]]);
        assert_eq!(act(&m, &HermitianMatrix::identity(2)).unwrap(), real(&[&[4, 0], &[0, 1]]));
        assert_eq!(act(&alg(&[&[1, 2], &[2, 4]]), &d), Err(Error::SingularMatrix));
        assert!(matches!(act(&AlgebraMatrix::identity(3), &d), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn ldl_examples() {
        let (l, delta) = ldl_witness(&HermitianMatrix::<R>::identity(3)).unwrap();
        assert_eq!(l, AlgebraMatrix::identity(3));
        assert_eq!(delta, vec![int(1); 3]);

        let (l, delta) = ldl_witness(&real(&[&[4, 0], &[0, 9]])).unwrap();
        assert_eq!(l, AlgebraMatrix::identity(2));
        assert_eq!(delta, vec![int(4), int(9)]);

        let d = real(&[&[2, -1], &[-1, 2]]);
        let (l, delta) = ldl_witness(&d).unwrap();
        let expected_l = AlgebraMatrix::from_rows(vec![vec![int(1), int(0)], vec![rat(-1, 2), int(1)]]).unwrap();
        assert_eq!(l, expected_l);
        assert_eq!(delta, vec![int(2), rat(3, 2)]);
        // recomposition oracle: L diag(delta) L* = D
        let recomposed = l.mul(&AlgebraMatrix::diagonal(&delta)).unwrap().mul(&l.conj_transpose()).unwrap();
        assert_eq!(&recomposed, d.as_matrix());
        assert_eq!(act(&l.conj_transpose(), &HermitianMatrix::diagonal(&delta)).unwrap(), d);

        assert_eq!(ldl_witness(&real(&[&[1, 2], &[2, 1]])), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn quaternion_ldl_recomposes() {
        let two = Q::real(int(2));
        let off = Q::new(int(0), int(1), int(-1), rat(1, 2));
        let d = HermitianMatrix::from_rows(vec![vec![two.clone(), off.clone()], vec![off.conj(), two]]).unwrap();
        let (l, delta) = ldl_witness(&d).unwrap();
        assert!(l.is_unit_lower_triangular());
        assert_eq!(act(&l.conj_transpose(), &HermitianMatrix::diagonal(&delta)).unwrap(), d);
    }

    #[test]
    fn separator_for_indefinite_matrices() {
        for x in [real(&[&[1, 2], &[2, 1]]), real(&[&[0, 1], &[1, 0]]), real(&[&[-1, 0], &[0, 5]])] {
            let y = dual_separator(&x).unwrap();
            assert!(is_positive_definite(&y));
            assert!(trace_inner_product(&x, &y).unwrap().is_negative());
        }
        assert!(dual_separator(&real(&[&[1, 0], &[0, 0]])).is_none());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(hermitian_basis::<R>(2).len(), 3);
        assert_eq!(hermitian_basis::<GaussianRational>(1).len(), 1);
        assert_eq!(hermitian_basis::<Q>(2).len(), 6);
        assert_eq!(hermitian_basis::<Q>(2)[0].real_coords().len(), 6);
    }

    #[test]
    fn quaternion_inverse() {
        let m = AlgebraMatrix::from_rows(vec![vec![Q::i(), Q::j()], vec![Q::real(int(1)), Q::k()]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), AlgebraMatrix::identity(2));
        assert_eq!(inv.mul(&m).unwrap(), AlgebraMatrix::identity(2));
        // rows (i, j) and (1, -i j) = (1, -k) are left-dependent: i * (1, -k) = (i, -ik) = (i, j)
        let sing = AlgebraMatrix::from_rows(vec![vec![Q::i(), Q::j()], vec![Q::real(int(1)), -Q::k()]]).unwrap();
        assert!(sing.inverse().is_none());
    }
}
