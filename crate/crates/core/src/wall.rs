//! Enumeration of walls `v` with `(v, v) > -N` whose hyperplane meets a
//! rational cone inside the positive cone.
//!
//! The cone is reduced to the 2-planes spanned by pairs of its generators.
//! On each plane `P` a lattice vector `v` is determined by the integers
//! `((v, u1), (v, u2))` for a basis `u1, u2` of `P`, plus a vector of the
//! negative definite lattice `P^perp`. The first part is bounded by the
//! geometry of the plane; the second by short vector enumeration.

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::cone::{wall_separates, RationalCone};
use crate::error::{Error, Result};
use crate::lattice::{ConePosition, Lattice};
use crate::linalg::{inverse, rank_int, to_rational_matrix, ColumnEchelon};
use crate::scalar::{
    ceil_sqrt, floor_sqrt, mat_vec, to_rational, IntVector, LatticeInt, Matrix, RatVector,
};
use crate::shortvec::Enumerator;

/// A wall `v^perp`, with `v` primitive and sign-normalized.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall<I: LatticeInt> {
    pub v: IntVector<I>,
    pub square: I,
    /// Generator pair of the subcone that produced the wall.
    pub source: Option<(usize, usize)>,
}

impl<I: LatticeInt> Wall<I> {
    /// Normalizes `v` and records its square.
    pub fn new(lattice: &Lattice<I>, v: &[I]) -> Result<Self> {
        let v = lattice.primitive(v)?;
        let square = lattice.square(&v);
        Ok(Wall { v, square, source: None })
    }
}

#[derive(Clone, Debug)]
pub struct WallQuery<I: LatticeInt> {
    pub lattice: Lattice<I>,
    pub cone: RationalCone<I>,
    pub bound: I,
}

impl<I: LatticeInt> WallQuery<I> {
    pub fn new(lattice: Lattice<I>, cone: RationalCone<I>, bound: I) -> Result<Self> {
        if bound < I::one() {
            return Err(Error::precondition("the bound N must be at least 1"));
        }
        if cone.lattice().gram() != lattice.gram() {
            return Err(Error::precondition("cone belongs to a different lattice"));
        }
        check_in_closed_cone(&lattice, &cone)?;
        Ok(WallQuery { lattice, cone, bound })
    }
}

fn check_in_closed_cone<I: LatticeInt>(lattice: &Lattice<I>, cone: &RationalCone<I>) -> Result<()> {
    if !cone.is_pointed() {
        return Err(Error::precondition("cone is not contained in the closed positive cone"));
    }
    for g in cone.generators() {
        if !lattice.position_int(g).in_closed_cone() {
            return Err(Error::precondition(format!(
                "generator {} lies outside the closed positive cone",
                fmt_vec(g)
            )));
        }
    }
    Ok(())
}

fn fmt_vec<I: LatticeInt>(v: &[I]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Walls killing some point `s x1 + (1 - s) x2`, `0 <= s <= 1`.
pub fn walls_on_segment<I: LatticeInt>(lattice: &Lattice<I>, x1: &[I], x2: &[I], bound: &I) -> Result<Vec<Wall<I>>> {
    lattice.check_dim(x1.len())?;
    lattice.check_dim(x2.len())?;
    check_bound(bound)?;
    for x in [x1, x2] {
        if lattice.position_int(x) != ConePosition::InteriorPositive {
            return Err(Error::precondition(format!("{} is not in the positive cone", fmt_vec(x))));
        }
    }
    let plane = Plane::new(lattice, x1, x2)?;
    let (a, b, c) = (plane.m[0][0].clone(), plane.m[0][1].clone(), plane.m[1][1].clone());
    let disc = b.clone() * b.clone() - a.clone() * c.clone();
    debug_assert!(disc.is_positive());
    // pq <= 0 and C p^2 - 2B pq + A q^2 < N D
    let nd = bound.clone() * disc;
    let pmax = floor_sqrt(&Ratio::new(nd.clone() - I::one(), c.clone()));
    let ps = range_sym(&pmax);
    let walls: Vec<IntVector<I>> = ps
        .into_par_iter()
        .flat_map_iter(|p| {
            let mut out = Vec::new();
            let rest = nd.clone() - c.clone() * p.clone() * p.clone();
            let qmax = floor_sqrt(&Ratio::new(rest - I::one(), a.clone()));
            let mut q = -qmax.clone();
            while q <= qmax {
                let sign_ok = (p.clone() * q.clone()) <= I::zero();
                let form = c.clone() * p.clone() * p.clone()
                    - (I::one() + I::one()) * b.clone() * p.clone() * q.clone()
                    + a.clone() * q.clone() * q.clone();
                if sign_ok && form < nd {
                    plane.lift(&p, &q, bound, &mut out);
                }
                q = q + I::one();
            }
            out.into_iter()
        })
        .collect();
    finish(lattice, walls, None)
}

/// Walls meeting `P ∩ C+` for the plane `P` spanned by an isotropic `x`
/// and a positive `y`.
pub fn walls_on_isotropic_plane<I: LatticeInt>(
    lattice: &Lattice<I>,
    x: &[I],
    y: &[Ratio<I>],
    bound: &I,
) -> Result<Vec<Wall<I>>> {
    lattice.check_dim(x.len())?;
    lattice.check_dim(y.len())?;
    check_bound(bound)?;
    if lattice.position_int(x) != ConePosition::BoundaryPositive {
        return Err(Error::precondition(format!(
            "{} is not an isotropic vector of the closed positive cone",
            fmt_vec(x)
        )));
    }
    if lattice.position(y) != ConePosition::InteriorPositive {
        return Err(Error::precondition("the auxiliary vector is not in the positive cone"));
    }
    let z = isotropic_partner(lattice, x, y);
    if rank_int(&[x.to_vec(), z.clone()], x.len()) < 2 {
        return Err(Error::precondition("the two vectors span a line"));
    }
    let plane = Plane::new(lattice, x, &z)?;
    let c = plane.m[0][1].clone();
    debug_assert!(c.is_positive());
    // pq < 0 with 2|pq| < N c, or p = q = 0
    let limit = bound.clone() * c - I::one();
    let two = I::one() + I::one();
    let pmax = limit.clone() / two.clone();
    let ps = range_sym(&pmax);
    let walls: Vec<IntVector<I>> = ps
        .into_par_iter()
        .flat_map_iter(|p| {
            let mut out = Vec::new();
            if p.is_zero() {
                plane.lift(&p, &I::zero(), bound, &mut out);
            } else {
                let qmax = limit.clone() / (two.clone() * p.abs());
                let mut k = I::one();
                while k <= qmax {
                    let q = if p.is_positive() { -k.clone() } else { k.clone() };
                    plane.lift(&p, &q, bound, &mut out);
                    k = k + I::one();
                }
            }
            out.into_iter()
        })
        .collect();
    finish(lattice, walls, None)
}

/// The isotropic vector `m (y - (y,y) / (2 (x,y)) x)` with the least
/// positive integer `m` making it integral.
pub fn isotropic_partner<I: LatticeInt>(lattice: &Lattice<I>, x: &[I], y: &[Ratio<I>]) -> IntVector<I> {
    let xq = to_rational(x);
    let yy = lattice.square_q(y);
    let xy = lattice.pair_q(&xq, y);
    let two = Ratio::from_integer(I::one() + I::one());
    let t = yy / (two * xy);
    let w: RatVector<I> = y.iter().zip(&xq).map(|(yi, xi)| yi.clone() - t.clone() * xi.clone()).collect();
    let m = w.iter().fold(I::one(), |acc, r| acc.lcm(r.denom()));
    w.iter().map(|r| (r.clone() * Ratio::from_integer(m.clone())).to_integer()).collect()
}

/// `N1` with `1/N1 = min_{0<=s<=1} -((lambda(s) x1 - x2)^2)`, so that the
/// `x2`-coefficient `b` of any wall through the segment has `b^2 < N N1`.
pub fn segment_coefficient_bound<I: LatticeInt>(lattice: &Lattice<I>, x1: &[I], x2: &[I]) -> Ratio<I> {
    let a = lattice.square(x1);
    let b = lattice.pair(x1, x2);
    let c = lattice.square(x2);
    let disc = b.clone() * b.clone() - a.clone() * c.clone();
    // -q(lambda(1)) = D / A and -q(lambda(0)) = C D / B^2
    let at_one = Ratio::new(disc.clone(), a);
    let at_zero = Ratio::new(c * disc, b.clone() * b);
    let min = if at_one < at_zero { at_one } else { at_zero };
    min.recip()
}

/// Every wall `v` with `(v, v) > -N` meeting `Π ∩ C+`.
pub fn walls_meeting_cone<I: LatticeInt>(query: &WallQuery<I>) -> Result<Vec<Wall<I>>> {
    let lat = &query.lattice;
    let cone = &query.cone;
    check_in_closed_cone(lat, cone)?;
    let gens = cone.generators();
    let bound = &query.bound;
    match gens.len() {
        0 => return Ok(Vec::new()),
        1 => {
            let x = &gens[0];
            if !lat.square(x).is_positive() {
                return Ok(Vec::new());
            }
            let plane_free = perp_short_vectors(lat, &[x.clone()], &Ratio::from_integer(bound.clone()));
            let tagged = plane_free.into_iter().map(|v| (v, (0, 0))).collect();
            return finish_tagged(lat, cone, tagged);
        }
        _ => {}
    }
    let pairs: Vec<(usize, usize)> =
        (0..gens.len()).flat_map(|i| (i + 1..gens.len()).map(move |j| (i, j))).collect();
    let found: Vec<Result<Vec<(IntVector<I>, (usize, usize))>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (xi, xj) = (&gens[i], &gens[j]);
            let sum: IntVector<I> = xi.iter().zip(xj).map(|(a, b)| a.clone() + b.clone()).collect();
            assert!(lat.square(&sum).is_positive(), "generator pair spans no positive vector");
            let walls = if lat.square(xi).is_zero() {
                walls_on_isotropic_plane(lat, xi, &to_rational(&sum), bound)?
            } else if lat.square(xj).is_zero() {
                walls_on_isotropic_plane(lat, xj, &to_rational(&sum), bound)?
            } else {
                walls_on_segment(lat, xi, xj, bound)?
            };
            Ok(walls.into_iter().map(|w| (w.v, (i, j))).collect())
        })
        .collect();
    let mut tagged = Vec::new();
    for r in found {
        tagged.extend(r?);
    }
    finish_tagged(lat, cone, tagged)
}

/// Exhaustive search over the box `[-size, size]^n`; a test oracle.
pub fn brute_force_walls<I: LatticeInt>(query: &WallQuery<I>, size: &I) -> Vec<Wall<I>> {
    let lat = &query.lattice;
    let n = lat.rank();
    if size.is_negative() {
        return Vec::new();
    }
    let gram = lat.gram();
    let covs: Matrix<I> = query.cone.generators().iter().map(|g| lat.covector(g)).collect();
    let neg_bound = -query.bound.clone();
    let zero = I::zero();
    let found: Vec<IntVector<I>> = range_sym(size)
        .into_par_iter()
        .filter(|x0| !x0.is_negative())
        .flat_map_iter(|x0| {
            let mut out = Vec::new();
            let mut v = vec![-size.clone(); n];
            v[0] = x0;
            loop {
                // v and -v give the same wall: keep the first nonzero entry positive
                let lead = v.iter().find(|c| !c.is_zero());
                if lead.is_some_and(|c| c.is_positive()) && quad(gram, &v) > neg_bound {
                    let (mut pos, mut neg, mut zeros) = (false, false, false);
                    for c in &covs {
                        let s = c.iter().zip(&v).fold(zero.clone(), |acc, (a, b)| acc + a.clone() * b.clone());
                        pos |= s.is_positive();
                        neg |= s.is_negative();
                        zeros |= s.is_zero();
                    }
                    if (pos && neg) || (zeros && wall_separates(&query.cone, &v)) {
                        out.push(lat.primitive(&v).expect("nonzero"));
                    }
                }
                // odometer over coordinates 1..n
                let mut k = 1;
                while k < n {
                    if v[k] < *size {
                        v[k] = v[k].clone() + I::one();
                        break;
                    }
                    v[k] = -size.clone();
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
            out.into_iter()
        })
        .collect();
    let mut walls: Vec<Wall<I>> = found
        .into_iter()
        .map(|v| {
            let square = lat.square(&v);
            Wall { v, square, source: None }
        })
        .collect();
    walls.sort();
    walls.dedup();
    walls
}

/// A box size for [`brute_force_walls`] dominating every coordinate of
/// every wall of the query, from the coefficient bounds on each 2-plane.
pub fn oracle_box<I: LatticeInt>(query: &WallQuery<I>) -> I {
    let lat = &query.lattice;
    let gens = query.cone.generators();
    let n_q = Ratio::from_integer(query.bound.clone());
    let mut best = I::zero();
    let mut consider = |coeffs: &[(Ratio<I>, &IntVector<I>)], perp: &[IntVector<I>]| {
        let spread = perp_coordinate_spread(lat, perp, &n_q);
        for k in 0..lat.rank() {
            let lin = coeffs.iter().fold(Ratio::zero(), |s, (c, x)| {
                s + c.clone() * Ratio::from_integer(x[k].abs())
            });
            let total = (lin + Ratio::from_integer(spread[k].clone())).ceil().to_integer();
            if total > best {
                best = total;
            }
        }
    };
    if gens.len() == 1 {
        if lat.square(&gens[0]).is_positive() {
            consider(&[], &gens[..1]);
        }
        return best;
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (xi, xj) = (&gens[i], &gens[j]);
            let iso = if lat.square(xi).is_zero() {
                Some((xi, xj))
            } else if lat.square(xj).is_zero() {
                Some((xj, xi))
            } else {
                None
            };
            match iso {
                Some((x, other)) => {
                    // v = alpha x + beta other + xi with p = (v,x), q = (v,other):
                    // p q < 0, C p^2 + 2B|pq| < N B^2, or p = q = 0
                    let b = lat.pair(x, other);
                    let c = lat.square(other);
                    let half = n_q.clone() / Ratio::from_integer(I::one() + I::one());
                    if c.is_zero() {
                        // both isotropic: |alpha|, |beta| < N / 2
                        consider(&[(half.clone(), x), (half, other)], &[x.clone(), other.clone()]);
                        continue;
                    }
                    let beta = ceil_sqrt(&(n_q.clone() / Ratio::from_integer(c.clone())));
                    let alpha = half + Ratio::from_integer(ceil_sqrt(&(n_q.clone() * Ratio::from_integer(c)))) / Ratio::from_integer(b);
                    consider(&[(alpha, x), (Ratio::from_integer(beta), other)], &[x.clone(), other.clone()]);
                }
                None => {
                    let n1 = segment_coefficient_bound(lat, xi, xj);
                    let bmax = ceil_sqrt(&(n_q.clone() * n1));
                    let a = lat.square(xi);
                    let b = lat.pair(xi, xj);
                    let c = lat.square(xj);
                    let l0 = Ratio::new(c, b.clone());
                    let l1 = Ratio::new(b, a);
                    let lmax = if l0 > l1 { l0 } else { l1 };
                    let bq = Ratio::from_integer(bmax);
                    consider(&[(bq.clone() * lmax, xi), (bq, xj)], &[xi.clone(), xj.clone()]);
                }
            }
        }
    }
    best
}

/// Per-coordinate maximum of `|xi_k|` over `xi` in `S^perp` with
/// `-(xi, xi) <= N`.
fn perp_coordinate_spread<I: LatticeInt>(lat: &Lattice<I>, s: &[IntVector<I>], n_q: &Ratio<I>) -> IntVector<I> {
    let sub = lat.orthogonal_complement(s);
    let n = lat.rank();
    if sub.rank() == 0 {
        return vec![I::zero(); n];
    }
    let neg: Matrix<I> = sub.gram.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
    let inv = inverse(&to_rational_matrix(&neg)).expect("definite");
    (0..n)
        .map(|k| {
            let col: IntVector<I> = sub.basis.iter().map(|b| b[k].clone()).collect();
            let qk = (0..col.len()).fold(Ratio::zero(), |s, i| {
                (0..col.len()).fold(s, |s, j| {
                    s + inv[i][j].clone() * Ratio::from_integer(col[i].clone() * col[j].clone())
                })
            });
            ceil_sqrt(&(n_q.clone() * qk))
        })
        .collect()
}

/// Nonzero primitive vectors `v` of `S^perp` with `-(v, v) < bound`.
fn perp_short_vectors<I: LatticeInt>(lat: &Lattice<I>, s: &[IntVector<I>], bound: &Ratio<I>) -> Vec<IntVector<I>> {
    let sub = lat.orthogonal_complement(s);
    let neg: Matrix<I> = sub.gram.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
    let en = Enumerator::new(&neg).expect("orthogonal complement of a positive vector is definite");
    let center = vec![Ratio::zero(); sub.rank()];
    let mut out = Vec::new();
    en.for_each_within(&center, bound, |t, val| {
        if val < bound && t.iter().any(|x| !x.is_zero()) {
            out.push(sub.embed(t));
        }
    });
    out
}

fn quad<I: LatticeInt>(gram: &[Vec<I>], v: &[I]) -> I {
    let mut total = I::zero();
    for (i, row) in gram.iter().enumerate() {
        let mut r = I::zero();
        for (g, x) in row.iter().zip(v) {
            r = r + g.clone() * x.clone();
        }
        total = total + r * v[i].clone();
    }
    total
}

fn check_bound<I: LatticeInt>(bound: &I) -> Result<()> {
    if *bound < I::one() {
        Err(Error::precondition("the bound N must be at least 1"))
    } else {
        Ok(())
    }
}

fn range_sym<I: LatticeInt>(m: &I) -> Vec<I> {
    let mut out = Vec::new();
    let mut x = -m.clone();
    while x <= *m {
        out.push(x.clone());
        x = x + I::one();
    }
    out
}

fn finish<I: LatticeInt>(lat: &Lattice<I>, raw: Vec<IntVector<I>>, source: Option<(usize, usize)>) -> Result<Vec<Wall<I>>> {
    let mut walls: Vec<Wall<I>> = raw
        .iter()
        .map(|v| {
            let mut w = Wall::new(lat, v)?;
            w.source = source;
            Ok(w)
        })
        .collect::<Result<_>>()?;
    walls.sort();
    walls.dedup_by(|a, b| a.v == b.v);
    Ok(walls)
}

fn finish_tagged<I: LatticeInt>(
    lat: &Lattice<I>,
    cone: &RationalCone<I>,
    tagged: Vec<(IntVector<I>, (usize, usize))>,
) -> Result<Vec<Wall<I>>> {
    let mut walls: Vec<Wall<I>> = Vec::with_capacity(tagged.len());
    for (v, src) in tagged {
        let mut w = Wall::new(lat, &v)?;
        if !wall_separates(cone, &w.v) {
            continue;
        }
        w.source = Some(src);
        walls.push(w);
    }
    walls.sort();
    walls.dedup_by(|a, b| a.v == b.v);
    Ok(walls)
}

/// A rational 2-plane of signature `(1, 1)` with an integral basis, ready
/// to lift pairing data `((v,u1), (v,u2))` to lattice vectors.
struct Plane<I: LatticeInt> {
    u: [IntVector<I>; 2],
    m: Matrix<I>,
    m_inv: Matrix<Ratio<I>>,
    echelon: ColumnEchelon<I>,
    /// Saturated basis of `P^perp` (rows) and the data of its form.
    perp: Matrix<I>,
    perp_gram_inv: Matrix<Ratio<I>>,
    enumerator: Enumerator<I>,
    gram: Matrix<I>,
}

impl<I: LatticeInt> Plane<I> {
    fn new(lat: &Lattice<I>, u1: &[I], u2: &[I]) -> Result<Self> {
        let n = lat.rank();
        if rank_int(&[u1.to_vec(), u2.to_vec()], n) < 2 {
            return Err(Error::precondition("the two vectors are linearly dependent"));
        }
        let m = vec![
            vec![lat.square(u1), lat.pair(u1, u2)],
            vec![lat.pair(u1, u2), lat.square(u2)],
        ];
        let m_inv = inverse(&to_rational_matrix(&m)).ok_or(Error::Degenerate)?;
        let rows = vec![lat.covector(u1), lat.covector(u2)];
        let echelon = ColumnEchelon::new(&rows, n);
        let sub = lat.orthogonal_complement(&[u1.to_vec(), u2.to_vec()]);
        let neg: Matrix<I> = sub.gram.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
        let enumerator = Enumerator::new(&neg)?;
        let perp_gram_inv = if sub.rank() == 0 {
            Vec::new()
        } else {
            inverse(&to_rational_matrix(&sub.gram)).ok_or(Error::Degenerate)?
        };
        Ok(Plane {
            u: [u1.to_vec(), u2.to_vec()],
            m,
            m_inv,
            echelon,
            perp: sub.basis,
            perp_gram_inv,
            enumerator,
            gram: lat.gram().clone(),
        })
    }

    /// Appends every nonzero `v` with the given pairings and `(v,v) > -N`.
    fn lift(&self, p: &I, q: &I, bound: &I, out: &mut Vec<IntVector<I>>) {
        let Some(v0) = self.echelon.solve(&[p.clone(), q.clone()]) else {
            return;
        };
        let pq = [Ratio::from_integer(p.clone()), Ratio::from_integer(q.clone())];
        let alpha = self.m_inv[0][0].clone() * pq[0].clone() + self.m_inv[0][1].clone() * pq[1].clone();
        let beta = self.m_inv[1][0].clone() * pq[0].clone() + self.m_inv[1][1].clone() * pq[1].clone();
        let proj_sq = alpha.clone() * pq[0].clone() + beta.clone() * pq[1].clone();
        let room = Ratio::from_integer(bound.clone()) + proj_sq;
        if !room.is_positive() {
            return;
        }
        let n = v0.len();
        // v0 - proj lies in P^perp; express it in the perp basis
        let rest: RatVector<I> = (0..n)
            .map(|k| {
                Ratio::from_integer(v0[k].clone())
                    - alpha.clone() * Ratio::from_integer(self.u[0][k].clone())
                    - beta.clone() * Ratio::from_integer(self.u[1][k].clone())
            })
            .collect();
        let pairings: RatVector<I> = self
            .perp
            .iter()
            .map(|b| {
                let gb = mat_vec(&self.gram, b);
                rest.iter().zip(&gb).fold(Ratio::zero(), |s, (r, g)| s + r.clone() * Ratio::from_integer(g.clone()))
            })
            .collect();
        let c0: RatVector<I> = self
            .perp_gram_inv
            .iter()
            .map(|row| row.iter().zip(&pairings).fold(Ratio::zero(), |s, (a, b)| s + a.clone() * b.clone()))
            .collect();
        let center: RatVector<I> = c0.iter().map(|c| -c.clone()).collect();
        self.enumerator.for_each_within(&center, &room, |t, val| {
            if val >= &room {
                return;
            }
            let v: IntVector<I> = (0..n)
                .map(|k| {
                    t.iter()
                        .zip(&self.perp)
                        .fold(v0[k].clone(), |s, (tk, b)| s + tk.clone() * b[k].clone())
                })
                .collect();
            if v.iter().any(|x| !x.is_zero()) {
                out.push(v);
            }
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Lattice<i64> {
        Lattice::new(vec![vec![0, 1], vec![1, 0]], vec![1, 1]).unwrap()
    }

    fn query(l: &Lattice<i64>, gens: &[&[i64]], n: i64) -> WallQuery<i64> {
        let g: Matrix<i64> = gens.iter().map(|g| g.to_vec()).collect();
        let c = RationalCone::from_int_generators(l, &g);
        WallQuery::new(l.clone(), c, n).unwrap()
    }

    fn vs(walls: &[Wall<i64>]) -> Vec<Vec<i64>> {
        walls.iter().map(|w| w.v.clone()).collect()
    }

    #[test]
    fn segment_examples() {
        let l = u();
        let w = walls_on_segment(&l, &[2, 1], &[1, 2], &3).unwrap();
        assert_eq!(vs(&w), vec![vec![1, -1]]);
        assert_eq!(w[0].square, -2);
        assert!(walls_on_segment(&l, &[2, 1], &[1, 2], &1).unwrap().is_empty());
        assert!(matches!(walls_on_segment(&l, &[2, 1], &[2, 1], &3), Err(Error::Precondition(_))));
        assert!(matches!(walls_on_segment(&l, &[1, 0], &[1, 2], &3), Err(Error::Precondition(_))));
    }

    #[test]
    fn isotropic_examples() {
        let l = u();
        let y = to_rational(&[1, 1]);
        assert_eq!(isotropic_partner(&l, &[1, 0], &y), vec![0, 1]);
        let w = walls_on_isotropic_plane(&l, &[1, 0], &y, &3).unwrap();
        assert_eq!(vs(&w), vec![vec![1, -1]]);
        assert!(walls_on_isotropic_plane(&l, &[1, 0], &y, &1).unwrap().is_empty());
        assert!(matches!(
            walls_on_isotropic_plane(&l, &[1, 1], &y, &3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cone_examples() {
        let l = u();
        assert_eq!(vs(&walls_meeting_cone(&query(&l, &[&[2, 1], &[1, 2]], 3)).unwrap()), vec![vec![1, -1]]);
        assert!(walls_meeting_cone(&query(&l, &[&[2, 1], &[1, 2]], 1)).unwrap().is_empty());
        assert_eq!(vs(&walls_meeting_cone(&query(&l, &[&[1, 1]], 3)).unwrap()), vec![vec![1, -1]]);
        assert_eq!(vs(&walls_meeting_cone(&query(&l, &[&[1, 0], &[0, 1]], 3)).unwrap()), vec![vec![1, -1]]);
    }

    #[test]
    fn brute_force_examples() {
        let l = u();
        let q = query(&l, &[&[2, 1], &[1, 2]], 3);
        assert_eq!(vs(&brute_force_walls(&q, &10)), vec![vec![1, -1]]);
        assert!(brute_force_walls(&q, &0).is_empty());
        let q1 = query(&l, &[&[2, 1], &[1, 2]], 1);
        assert!(brute_force_walls(&q1, &10).is_empty());
    }

    #[test]
    fn rejects_cone_outside() {
        let l = u();
        let c = RationalCone::from_int_generators(&l, &[vec![1, -1], vec![1, 1]]);
        assert!(matches!(WallQuery::new(l, c, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn coefficient_bound_for_u_segment() {
        // A = B^2 ... A=4, B=5, C=4, D=9: min(9/4, 36/25) = 36/25
        let n1 = segment_coefficient_bound(&u(), &[2, 1], &[1, 2]);
        assert_eq!(n1, Ratio::new(25, 36));
    }
}
