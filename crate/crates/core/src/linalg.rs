//! Exact linear algebra over `Ratio<I>` and over the integers.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::scalar::{primitive_ray, LatticeInt, Matrix, RatVector};

/// Reduced row echelon form: only the nonzero rows are kept.
#[derive(Clone, Debug)]
pub struct Rref<I: LatticeInt> {
    pub rows: Matrix<Ratio<I>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

pub fn rref<I: LatticeInt>(m: &[Vec<Ratio<I>>], cols: usize) -> Rref<I> {
    let mut a: Matrix<Ratio<I>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = a[r][j].clone() * f.clone();
                    a[i][j] = a[i][j].clone() - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    Rref { rows: a, pivots, cols }
}

pub fn rank<I: LatticeInt>(m: &[Vec<Ratio<I>>], cols: usize) -> usize {
    rref(m, cols).pivots.len()
}

pub fn rank_int<I: LatticeInt>(m: &[Vec<I>], cols: usize) -> usize {
    rank(&to_rational_matrix(m), cols)
}

pub fn to_rational_matrix<I: LatticeInt>(m: &[Vec<I>]) -> Matrix<Ratio<I>> {
    m.iter()
        .map(|r| r.iter().cloned().map(Ratio::from_integer).collect())
        .collect()
}

impl<I: LatticeInt> Rref<I> {
    /// Primitive integer basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Matrix<I> {
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|c| !self.pivots.contains(c)) {
            let mut v = vec![Ratio::zero(); self.cols];
            v[f] = Ratio::one();
            for (k, &p) in self.pivots.iter().enumerate() {
                v[p] = -self.rows[k][f].clone();
            }
            out.push(primitive_ray(&v));
        }
        out
    }
}

pub fn kernel<I: LatticeInt>(m: &[Vec<Ratio<I>>], cols: usize) -> Matrix<I> {
    rref(m, cols).kernel()
}

pub fn kernel_int<I: LatticeInt>(m: &[Vec<I>], cols: usize) -> Matrix<I> {
    kernel(&to_rational_matrix(m), cols)
}

pub fn inverse<I: LatticeInt>(m: &[Vec<Ratio<I>>]) -> Option<Matrix<Ratio<I>>> {
    let n = m.len();
    let aug: Matrix<Ratio<I>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    let red = rref(&aug, 2 * n);
    if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Some solution of `m x = b`, if one exists.
pub fn solve<I: LatticeInt>(m: &[Vec<Ratio<I>>], b: &[Ratio<I>]) -> Option<RatVector<I>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: Matrix<Ratio<I>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let red = rref(&aug, cols + 1);
    if red.pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Ratio::zero(); cols];
    for (k, &p) in red.pivots.iter().enumerate() {
        x[p] = red.rows[k][cols].clone();
    }
    Some(x)
}

pub fn determinant<I: LatticeInt>(m: &[Vec<Ratio<I>>]) -> Ratio<I> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Ratio::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ratio::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c].clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / a[c][c].clone();
            for j in c..n {
                let t = a[c][j].clone() * f.clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
    }
    det
}

/// Counts of positive, negative and zero entries in a diagonalization
/// of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Sylvester inertia by exact congruence diagonalization.
pub fn inertia<I: LatticeInt>(m: &[Vec<Ratio<I>>]) -> Inertia {
    let n = m.len();
    let mut a = m.to_vec();
    let mut res = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap_sym(&mut a, i, k);
        } else if let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        {
            // x_i -> x_i + x_j turns a[i][i] into 2 a[i][j]
            for t in 0..n {
                let v = a[j][t].clone();
                a[i][t] = a[i][t].clone() + v;
            }
            for t in 0..n {
                let v = a[t][j].clone();
                a[t][i] = a[t][i].clone() + v;
            }
            swap_sym(&mut a, i, k);
        } else {
            res.zero += n - k;
            break;
        }
        let d = a[k][k].clone();
        if d.is_positive() {
            res.positive += 1;
        } else {
            res.negative += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone() / d.clone();
            for j in k..n {
                let t = a[k][j].clone() * f.clone();
                a[i][j] = a[i][j].clone() - t;
            }
            for j in k..n {
                let t = a[j][k].clone() * f.clone();
                a[j][i] = a[j][i].clone() - t;
            }
        }
        k += 1;
    }
    res
}

fn swap_sym<T>(a: &mut [Vec<T>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Integer column echelon form `A U = H` with `U` unimodular.
///
/// The trailing `n - rank` columns of `U` form a basis of the integer
/// kernel of `A`; that basis is saturated because `U` is unimodular.
#[derive(Clone, Debug)]
pub struct ColumnEchelon<I: LatticeInt> {
    h: Matrix<I>,
    u: Matrix<I>,
    /// `(row, column)` of each pivot, columns `0..rank`.
    pivots: Vec<(usize, usize)>,
}

impl<I: LatticeInt> ColumnEchelon<I> {
    pub fn new(a: &[Vec<I>], n: usize) -> Self {
        let mut h: Matrix<I> = a.to_vec();
        let mut u: Matrix<I> = crate::scalar::identity(n);
        let mut pivots = Vec::new();
        let mut col = 0;
        for r in 0..h.len() {
            if col == n {
                break;
            }
            for j in col + 1..n {
                if h[r][j].is_zero() {
                    continue;
                }
                let a0 = h[r][col].clone();
                let b0 = h[r][j].clone();
                let eg = a0.extended_gcd(&b0);
                let (g, s, t) = (eg.gcd, eg.x, eg.y);
                let (p, q) = (-(b0 / g.clone()), a0 / g);
                combine_columns(&mut h, col, j, &s, &t, &p, &q);
                combine_columns(&mut u, col, j, &s, &t, &p, &q);
            }
            if !h[r][col].is_zero() {
                if h[r][col].is_negative() {
                    negate_column(&mut h, col);
                    negate_column(&mut u, col);
                }
                pivots.push((r, col));
                col += 1;
            }
        }
        ColumnEchelon { h, u, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> Matrix<I> {
        let n = self.u.len();
        (self.rank()..n)
            .map(|c| self.u.iter().map(|row| row[c].clone()).collect())
            .collect()
    }

    /// An integer solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[I]) -> Option<Vec<I>> {
        let n = self.u.len();
        let rk = self.rank();
        let mut y: Vec<I> = vec![I::zero(); rk];
        let mut next = 0;
        // row r only has nonzero entries in columns < next, plus the pivot
        for (r, br) in b.iter().enumerate() {
            let partial = (0..next).fold(I::zero(), |s, k| s + self.h[r][k].clone() * y[k].clone());
            if next < rk && self.pivots[next].0 == r {
                let rem = br.clone() - partial;
                let piv = &self.h[r][next];
                let (q, m) = rem.div_mod_floor(piv);
                if !m.is_zero() {
                    return None;
                }
                y[next] = q;
                next += 1;
            } else if partial != *br {
                return None;
            }
        }
        Some(
            (0..n)
                .map(|i| (0..rk).fold(I::zero(), |s, k| s + self.u[i][k].clone() * y[k].clone()))
                .collect(),
        )
    }
}

#[allow(clippy::too_many_arguments)]
fn combine_columns<I: LatticeInt>(m: &mut [Vec<I>], c: usize, j: usize, s: &I, t: &I, p: &I, q: &I) {
    for row in m.iter_mut() {
        let (x, y) = (row[c].clone(), row[j].clone());
        row[c] = s.clone() * x.clone() + t.clone() * y.clone();
        row[j] = p.clone() * x + q.clone() * y;
    }
}

fn negate_column<I: LatticeInt>(m: &mut [Vec<I>], c: usize) {
    for row in m.iter_mut() {
        row[c] = -row[c].clone();
    }
}

/// Saturated integer kernel basis of `A` (n columns), in Hermite normal form.
pub fn integer_kernel<I: LatticeInt>(a: &[Vec<I>], n: usize) -> Matrix<I> {
    hermite_rows(&ColumnEchelon::new(a, n).kernel())
}

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows<I: LatticeInt>(rows: &[Vec<I>]) -> Matrix<I> {
    let n = rows.first().map_or(0, Vec::len);
    let mut a: Matrix<I> = rows.to_vec();
    let mut pr = 0;
    for c in 0..n {
        if pr == a.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (pr..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz
                .iter()
                .min_by(|&&i, &&j| a[i][c].abs().cmp(&a[j][c].abs()))
                .unwrap();
            a.swap(pr, best);
            let mut done = true;
            for i in pr + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].div_floor(&a[pr][c]);
                for j in 0..n {
                    let t = a[pr][j].clone() * f.clone();
                    a[i][j] = a[i][j].clone() - t;
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if pr < a.len() && !a[pr][c].is_zero() {
            if a[pr][c].is_negative() {
                a[pr].iter_mut().for_each(|x| *x = -x.clone());
            }
            for i in 0..pr {
                let f = a[i][c].div_floor(&a[pr][c]);
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a[pr][j].clone() * f.clone();
                    a[i][j] = a[i][j].clone() - t;
                }
            }
            pr += 1;
        }
    }
    a.truncate(pr);
    a
}
