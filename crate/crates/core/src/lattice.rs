//! Hyperbolic lattices: pairing, positive-cone membership, orthogonal
//! complements and wall normalization.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{integer_kernel, inertia, inverse, to_rational_matrix};
use crate::scalar::{
    divide_content, dot, dot_q, mat_mul, mat_vec, mat_vec_q, primitive_line, to_rational,
    transpose, IntVector, LatticeInt, Matrix, RatVector,
};

/// Position of a vector relative to the positive cone selected by `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConePosition {
    /// `(x,x) > 0` and `(x,h) > 0`.
    InteriorPositive,
    /// Nonzero isotropic with `(x,h) > 0`.
    BoundaryPositive,
    Zero,
    Outside,
}

impl ConePosition {
    /// In the closure of the positive cone and nonzero.
    pub fn in_closed_cone(self) -> bool {
        matches!(self, ConePosition::InteriorPositive | ConePosition::BoundaryPositive)
    }
}

/// Integral symmetric bilinear form of signature `(1, n-1)` together with a
/// reference vector `h` of positive square selecting the component of the
/// positive cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice<I: LatticeInt> {
    gram: Matrix<I>,
    h: IntVector<I>,
    gram_inv: Matrix<Ratio<I>>,
}

/// Symmetric, correct shape; returns the rank.
pub(crate) fn check_symmetric<I: LatticeInt>(gram: &[Vec<I>]) -> Result<usize> {
    let n = gram.len();
    if let Some(row) = gram.iter().find(|r| r.len() != n) {
        return Err(Error::Dimension { expected: n, found: row.len() });
    }
    for i in 0..n {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    Ok(n)
}

impl<I: LatticeInt> Lattice<I> {
    pub fn new(gram: Matrix<I>, h: IntVector<I>) -> Result<Self> {
        let n = check_symmetric(&gram)?;
        if n < 2 {
            return Err(Error::precondition("lattice rank must be at least 2"));
        }
        if h.len() != n {
            return Err(Error::Dimension { expected: n, found: h.len() });
        }
        let qgram = to_rational_matrix(&gram);
        let sig = inertia(&qgram);
        if sig.zero > 0 {
            return Err(Error::Degenerate);
        }
        if sig.positive != 1 {
            return Err(Error::Signature { positive: sig.positive, negative: sig.negative });
        }
        let gram_inv = inverse(&qgram).ok_or(Error::Degenerate)?;
        let lat = Lattice { gram, h, gram_inv };
        if !lat.square(&lat.h).is_positive() {
            return Err(Error::BadReference);
        }
        Ok(lat)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Matrix<I> {
        &self.gram
    }

    pub fn reference(&self) -> &IntVector<I> {
        &self.h
    }

    pub fn check_dim(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.rank(), found: len })
        }
    }

    pub fn pair(&self, x: &[I], y: &[I]) -> I {
        debug_assert_eq!(x.len(), self.rank());
        dot(x, &mat_vec(&self.gram, y))
    }

    pub fn pair_q(&self, x: &[Ratio<I>], y: &[Ratio<I>]) -> Ratio<I> {
        debug_assert_eq!(x.len(), self.rank());
        dot_q(x, &mat_vec_q(&self.gram, y))
    }

    pub fn square(&self, x: &[I]) -> I {
        self.pair(x, x)
    }

    pub fn square_q(&self, x: &[Ratio<I>]) -> Ratio<I> {
        self.pair_q(x, x)
    }

    /// Row covector `x -> (v, x)` in standard coordinates.
    pub fn covector(&self, v: &[I]) -> IntVector<I> {
        mat_vec(&self.gram, v)
    }

    /// Vector `w` with `(w, x) = f . x`.
    pub fn vector_of_covector(&self, f: &[Ratio<I>]) -> RatVector<I> {
        self.gram_inv.iter().map(|row| dot_q(row, f)).collect()
    }

    pub fn position(&self, x: &[Ratio<I>]) -> ConePosition {
        if x.iter().all(Zero::is_zero) {
            return ConePosition::Zero;
        }
        let sq = self.square_q(x);
        let xh = self.pair_q(x, &to_rational(&self.h));
        match (sq.is_negative(), sq.is_zero(), xh.is_positive()) {
            (false, false, true) => ConePosition::InteriorPositive,
            (false, true, true) => ConePosition::BoundaryPositive,
            _ => ConePosition::Outside,
        }
    }

    pub fn position_int(&self, x: &[I]) -> ConePosition {
        if x.iter().all(Zero::is_zero) {
            return ConePosition::Zero;
        }
        let sq = self.square(x);
        let xh = self.pair(x, &self.h);
        match (sq.is_negative(), sq.is_zero(), xh.is_positive()) {
            (false, false, true) => ConePosition::InteriorPositive,
            (false, true, true) => ConePosition::BoundaryPositive,
            _ => ConePosition::Outside,
        }
    }

    /// Saturated sublattice `{w : (w, s) = 0 for all s in S}` with its Gram.
    pub fn orthogonal_complement(&self, s: &[IntVector<I>]) -> Sublattice<I> {
        let rows: Matrix<I> = s.iter().map(|v| self.covector(v)).collect();
        let basis = if rows.is_empty() {
            crate::scalar::identity(self.rank())
        } else {
            integer_kernel(&rows, self.rank())
        };
        Sublattice::new(basis, &self.gram)
    }

    /// Divides by the content and fixes the sign: `(v,h) > 0`, or if
    /// `(v,h) = 0` the first nonzero coordinate is positive.
    pub fn primitive(&self, v: &[I]) -> Result<IntVector<I>> {
        self.check_dim(v.len())?;
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        let p = divide_content(v);
        let vh = self.pair(&p, &self.h);
        Ok(if vh.is_negative() {
            p.into_iter().map(|x| -x).collect()
        } else if vh.is_zero() {
            primitive_line(&p)
        } else {
            p
        })
    }
}

/// A sublattice given by an integer basis (rows), with the induced Gram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice<I: LatticeInt> {
    pub basis: Matrix<I>,
    pub gram: Matrix<I>,
}

impl<I: LatticeInt> Sublattice<I> {
    pub fn new(basis: Matrix<I>, ambient_gram: &[Vec<I>]) -> Self {
        let gb = mat_mul(&basis, ambient_gram);
        let gram = mat_mul(&gb, &transpose(&basis));
        Sublattice { basis, gram }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ambient coordinates of `sum_k c_k basis_k`.
    pub fn embed(&self, coords: &[I]) -> IntVector<I> {
        let n = self.basis.first().map_or(0, Vec::len);
        (0..n)
            .map(|j| {
                coords
                    .iter()
                    .zip(&self.basis)
                    .fold(I::zero(), |s, (c, b)| s + c.clone() * b[j].clone())
            })
            .collect()
    }

    pub fn embed_q(&self, coords: &[Ratio<I>]) -> RatVector<I> {
        let n = self.basis.first().map_or(0, Vec::len);
        (0..n)
            .map(|j| {
                coords.iter().zip(&self.basis).fold(Ratio::zero(), |s, (c, b)| {
                    s + c.clone() * Ratio::from_integer(b[j].clone())
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn u() -> Lattice<i64> {
        Lattice::new(vec![vec![0, 1], vec![1, 0]], vec![1, 1]).unwrap()
    }

    fn u_m2() -> Lattice<i64> {
        Lattice::new(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -2]], vec![1, 1, 0]).unwrap()
    }

    fn q(v: &[i64]) -> RatVector<i64> {
        to_rational(v)
    }

    #[test]
    fn make_lattice_cases() {
        assert_eq!(u().rank(), 2);
        assert_eq!(u_m2().rank(), 3);
        assert_eq!(
            Lattice::<i64>::new(vec![vec![2, 0], vec![0, 2]], vec![1, 0]),
            Err(Error::Signature { positive: 2, negative: 0 })
        );
        assert_eq!(
            Lattice::<i64>::new(vec![vec![1, 1], vec![1, 1]], vec![1, 0]),
            Err(Error::Degenerate)
        );
        assert_eq!(
            Lattice::<i64>::new(vec![vec![0, 1], vec![1, 0]], vec![1, -1]),
            Err(Error::BadReference)
        );
        assert_eq!(
            Lattice::<i64>::new(vec![vec![0, 1], vec![2, 0]], vec![1, 1]),
            Err(Error::NotSymmetric)
        );
        assert_eq!(
            Lattice::<i64>::new(vec![vec![0, 1], vec![1, 0]], vec![1]),
            Err(Error::Dimension { expected: 2, found: 1 })
        );
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(u().pair(&[1, 0], &[0, 1]), 1);
        assert_eq!(u().square(&[2, 1]), 4);
        assert_eq!(u_m2().square(&[0, 0, 1]), -2);
        assert_eq!(u().pair_q(&[rat(1, 2), rat(0, 1)], &q(&[0, 3])), rat(3, 2));
    }

    #[test]
    fn cone_position_examples() {
        let l = u();
        assert_eq!(l.position(&q(&[2, 1])), ConePosition::InteriorPositive);
        assert_eq!(l.position(&q(&[1, 0])), ConePosition::BoundaryPositive);
        assert_eq!(l.position(&q(&[1, -1])), ConePosition::Outside);
        assert_eq!(l.position(&q(&[0, 0])), ConePosition::Zero);
        assert_eq!(l.position(&q(&[-2, -1])), ConePosition::Outside);
        assert_eq!(l.position_int(&[-1, 0]), ConePosition::Outside);
    }

    #[test]
    fn orthogonal_complement_examples() {
        let s = u().orthogonal_complement(&[vec![1, 1]]);
        assert_eq!(s.basis, vec![vec![1, -1]]);
        assert_eq!(s.gram, vec![vec![-2]]);
        let s = u_m2().orthogonal_complement(&[vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(s.basis, vec![vec![0, 0, 1]]);
        assert_eq!(s.gram, vec![vec![-2]]);
        let s = u().orthogonal_complement(&[vec![1, 0], vec![0, 1]]);
        assert!(s.basis.is_empty());
    }

    #[test]
    fn complement_is_saturated() {
        // (w, (2,2,0)) = 0 in U + <-2>: index-1 kernel, not a sublattice of index 2
        let s = u_m2().orthogonal_complement(&[vec![2, 2, 0]]);
        assert_eq!(s.rank(), 2);
        let ext = crate::linalg::hermite_rows(&s.basis);
        assert_eq!(ext, vec![vec![1, -1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn primitive_examples() {
        let l = u();
        assert_eq!(l.primitive(&[2, -2]).unwrap(), vec![1, -1]);
        assert_eq!(l.primitive(&[4, 2]).unwrap(), vec![2, 1]);
        assert_eq!(l.primitive(&[0, -3]).unwrap(), vec![0, 1]);
        assert_eq!(l.primitive(&[0, 0]), Err(Error::ZeroVector));
    }
}
