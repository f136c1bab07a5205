//! Short and close vector enumeration for definite integral forms
//! (Fincke–Pohst recursion over an exact `R^T D R` decomposition).

use std::cmp::Ordering;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::check_symmetric;
use crate::scalar::{floor_sqrt, IntVector, LatticeInt, Matrix};

/// Positive definite integral form prepared for enumeration.
///
/// `Q(u) = sum_i d_i (u_i + sum_{j>i} mu_ij u_j)^2`.
#[derive(Clone, Debug)]
pub struct Enumerator<I: LatticeInt> {
    diag: Vec<Ratio<I>>,
    mu: Matrix<Ratio<I>>,
}

impl<I: LatticeInt> Enumerator<I> {
    /// Fails with `NotNegativeDefinite` unless `form` is positive definite
    /// (the error names the negated form callers usually hold).
    pub fn new(form: &[Vec<I>]) -> Result<Self> {
        let m = check_symmetric(form)?;
        let mut a: Matrix<Ratio<I>> = crate::linalg::to_rational_matrix(form);
        let mut diag = Vec::with_capacity(m);
        let mut mu = vec![vec![Ratio::zero(); m]; m];
        for i in 0..m {
            let d = a[i][i].clone();
            if !d.is_positive() {
                return Err(Error::NotNegativeDefinite);
            }
            for j in i + 1..m {
                mu[i][j] = a[i][j].clone() / d.clone();
            }
            for j in i + 1..m {
                for k in i + 1..m {
                    let t = a[i][j].clone() * mu[i][k].clone();
                    a[j][k] = a[j][k].clone() - t;
                }
            }
            diag.push(d);
        }
        Ok(Enumerator { diag, mu })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Calls `f(t, Q(t - center))` for every integer `t` with
    /// `Q(t - center) <= bound`.
    pub fn for_each_within<F>(&self, center: &[Ratio<I>], bound: &Ratio<I>, mut f: F)
    where
        F: FnMut(&[I], &Ratio<I>),
    {
        assert_eq!(center.len(), self.dim());
        if bound.is_negative() {
            return;
        }
        let m = self.dim();
        let mut t = vec![I::zero(); m];
        if m == 0 {
            f(&t, &Ratio::zero());
            return;
        }
        self.descend(m - 1, center, bound, &Ratio::zero(), &mut t, &mut f);
    }

    fn descend<F>(
        &self,
        i: usize,
        center: &[Ratio<I>],
        bound: &Ratio<I>,
        acc: &Ratio<I>,
        t: &mut Vec<I>,
        f: &mut F,
    ) where
        F: FnMut(&[I], &Ratio<I>),
    {
        let m = self.dim();
        let shift = (i + 1..m).fold(Ratio::zero(), |s, j| {
            s + self.mu[i][j].clone() * (Ratio::from_integer(t[j].clone()) - center[j].clone())
        });
        let c = center[i].clone() - shift;
        let room = bound.clone() - acc.clone();
        if room.is_negative() {
            return;
        }
        let r = room / self.diag[i].clone();
        let w = floor_sqrt(&r) + I::one();
        let lo = c.floor().to_integer() - w.clone();
        let hi = c.ceil().to_integer() + w;
        let mut x = lo;
        while x <= hi {
            let dx = Ratio::from_integer(x.clone()) - c.clone();
            let sq = dx.clone() * dx;
            if sq <= r {
                let next = acc.clone() + self.diag[i].clone() * sq;
                t[i] = x.clone();
                if i == 0 {
                    f(t, &next);
                } else {
                    self.descend(i - 1, center, bound, &next, t, f);
                }
            }
            x = x + I::one();
        }
        t[i] = I::zero();
    }
}

/// All integer `xi` with `0 <= -(xi, xi) <= bound` for a negative definite
/// Gram matrix, one per `+-` pair (first nonzero coordinate positive) plus
/// zero, ordered by `-(xi, xi)` and then colexicographically.
pub fn short_vectors<I: LatticeInt>(neg_gram: &[Vec<I>], bound: &Ratio<I>) -> Result<Vec<IntVector<I>>> {
    let form: Matrix<I> = neg_gram
        .iter()
        .map(|r| r.iter().map(|x| -x.clone()).collect())
        .collect();
    let en = Enumerator::new(&form)?;
    let center = vec![Ratio::zero(); en.dim()];
    let mut found: Vec<(Ratio<I>, IntVector<I>)> = Vec::new();
    en.for_each_within(&center, bound, |t, val| {
        let canonical = t
            .iter()
            .find(|x| !x.is_zero())
            .is_none_or(|x| x.is_positive());
        if canonical {
            found.push((val.clone(), t.to_vec()));
        }
    });
    found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| colex(&a.1, &b.1)));
    Ok(found.into_iter().map(|(_, v)| v).collect())
}

fn colex<I: LatticeInt>(a: &[I], b: &[I]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}
