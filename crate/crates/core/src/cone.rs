//! Rational polyhedral cones with synchronized generator and facet
//! descriptions.
//!
//! Conversion between the two descriptions uses the double description
//! method over exact integers. Cones of any dimension are supported; all
//! operations work relative to the linear span.

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::lattice::Lattice;
use crate::linalg::{hermite_rows, inverse, kernel_int, rank_int, rref, to_rational_matrix};
use crate::scalar::{
    divide_content, dot, dot_iq, primitive_ray, to_rational, IntVector, LatticeInt, Matrix,
    RatVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    Closed,
    RelativeInterior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfspaceSign {
    NonNegative,
    NonPositive,
    Zero,
}

/// Closed convex cone spanned by finitely many rational vectors.
///
/// Facets are stored both as covectors `f` (meaning `f . x >= 0`) and as
/// lattice vectors `w` with `(w, x)` a positive multiple of `f . x`.
#[derive(Clone, Debug)]
pub struct RationalCone<I: LatticeInt> {
    lattice: Lattice<I>,
    generators: Matrix<I>,
    lineality: Matrix<I>,
    facet_covectors: Matrix<I>,
    facets: Matrix<I>,
    equations: Matrix<I>,
    dim: usize,
}

impl<I: LatticeInt> PartialEq for RationalCone<I> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.generators == other.generators
            && self.lineality == other.lineality
            && self.lattice.gram() == other.lattice.gram()
    }
}

impl<I: LatticeInt> Eq for RationalCone<I> {}

impl<I: LatticeInt> RationalCone<I> {
    /// Cone spanned by `gens`; zero vectors are dropped.
    pub fn from_generators(lattice: &Lattice<I>, gens: &[RatVector<I>]) -> Self {
        let ints: Matrix<I> = gens.iter().map(|g| primitive_ray(g)).collect();
        Self::from_int_generators(lattice, &ints)
    }

    pub fn from_int_generators(lattice: &Lattice<I>, gens: &[IntVector<I>]) -> Self {
        let n = lattice.rank();
        let mut gens: Matrix<I> = gens
            .iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .map(|g| divide_content(g))
            .collect();
        gens.sort();
        gens.dedup();
        if gens.is_empty() {
            return Self::zero(lattice);
        }

        let red = rref(&to_rational_matrix(&gens), n);
        let d = red.pivots.len();
        let span_coords: Matrix<I> = gens
            .iter()
            .map(|g| red.pivots.iter().map(|&p| g[p].clone()).collect())
            .collect();

        let dual = extreme_rays(&span_coords, d);
        let lin_span = if dual.is_empty() {
            crate::scalar::identity(d)
        } else {
            kernel_int(&dual, d)
        };
        let l = lin_span.len();

        let to_ambient = |t: &[I]| -> IntVector<I> {
            let x: RatVector<I> = (0..n)
                .map(|j| {
                    t.iter().zip(&red.rows).fold(Ratio::zero(), |s, (tk, row)| {
                        s + row[j].clone() * Ratio::from_integer(tk.clone())
                    })
                })
                .collect();
            primitive_ray(&x)
        };

        let lineality = hermite_rows(&lin_span.iter().map(|t| to_ambient(t)).collect::<Matrix<I>>());

        let mut generators: Matrix<I> = Vec::new();
        if l == 0 {
            for (g, t) in gens.iter().zip(&span_coords) {
                let tight: Matrix<I> = dual.iter().filter(|f| dot(f, t).is_zero()).cloned().collect();
                if rank_int(&tight, d) + 1 == d {
                    generators.push(g.clone());
                }
            }
        } else {
            for v in &lineality {
                generators.push(v.clone());
                generators.push(v.iter().map(|x| -x.clone()).collect());
            }
            let mut seen: Vec<Vec<usize>> = Vec::new();
            for (g, t) in gens.iter().zip(&span_coords) {
                let tight_idx: Vec<usize> =
                    (0..dual.len()).filter(|&k| dot(&dual[k], t).is_zero()).collect();
                if tight_idx.len() == dual.len() || seen.contains(&tight_idx) {
                    continue;
                }
                let tight: Matrix<I> = tight_idx.iter().map(|&k| dual[k].clone()).collect();
                if rank_int(&tight, d) + l + 1 == d {
                    seen.push(tight_idx);
                    generators.push(g.clone());
                }
            }
        }
        generators.sort();
        generators.dedup();

        let mut facet_pairs: Vec<(IntVector<I>, IntVector<I>)> = dual
            .iter()
            .map(|f| {
                let mut c = vec![I::zero(); n];
                for (k, &p) in red.pivots.iter().enumerate() {
                    c[p] = f[k].clone();
                }
                let w = primitive_ray(&lattice.vector_of_covector(&to_rational(&c)));
                (c, w)
            })
            .collect();
        facet_pairs.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));

        let equations: Matrix<I> = (0..n)
            .filter(|c| !red.pivots.contains(c))
            .map(|c| {
                let mut e: RatVector<I> = vec![Ratio::zero(); n];
                e[c] = Ratio::from_integer(I::one());
                for (k, &p) in red.pivots.iter().enumerate() {
                    e[p] = -red.rows[k][c].clone();
                }
                primitive_ray(&e)
            })
            .collect();

        let (facet_covectors, facets) = facet_pairs.into_iter().unzip();
        RationalCone {
            lattice: lattice.clone(),
            generators,
            lineality,
            facet_covectors,
            facets,
            equations,
            dim: d,
        }
    }

    pub fn zero(lattice: &Lattice<I>) -> Self {
        RationalCone {
            lattice: lattice.clone(),
            generators: Vec::new(),
            lineality: Vec::new(),
            facet_covectors: Vec::new(),
            facets: Vec::new(),
            equations: crate::scalar::identity(lattice.rank()),
            dim: 0,
        }
    }

    /// Cone `{x : e . x = 0 for e in eqs, f . x >= 0 for f in ineqs}`.
    pub fn from_inequalities(lattice: &Lattice<I>, ineqs: &[IntVector<I>], eqs: &[IntVector<I>]) -> Self {
        let n = lattice.rank();
        let space = if eqs.is_empty() {
            crate::scalar::identity(n)
        } else {
            kernel_int(eqs, n)
        };
        let k = space.len();
        if k == 0 {
            return Self::zero(lattice);
        }
        let restricted: Matrix<I> = ineqs
            .iter()
            .map(|f| space.iter().map(|b| dot(f, b)).collect())
            .collect();
        let lin = if restricted.is_empty() {
            crate::scalar::identity(k)
        } else {
            kernel_int(&restricted, k)
        };
        let complement = if lin.is_empty() {
            crate::scalar::identity(k)
        } else {
            kernel_int(&lin, k)
        };
        let reduced: Matrix<I> = restricted
            .iter()
            .map(|a| complement.iter().map(|c| dot(a, c)).collect())
            .collect();
        let rays = extreme_rays(&reduced, complement.len());

        let combine = |coeffs: &[I], basis: &[IntVector<I>], len: usize| -> IntVector<I> {
            (0..len)
                .map(|j| {
                    coeffs
                        .iter()
                        .zip(basis)
                        .fold(I::zero(), |s, (c, b)| s + c.clone() * b[j].clone())
                })
                .collect()
        };
        let mut gens: Matrix<I> = Vec::new();
        for r in &rays {
            let t = combine(r, &complement, k);
            gens.push(combine(&t, &space, n));
        }
        for t in &lin {
            let x = combine(t, &space, n);
            gens.push(x.iter().map(|v| -v.clone()).collect());
            gens.push(x);
        }
        Self::from_int_generators(lattice, &gens)
    }

    pub fn lattice(&self) -> &Lattice<I> {
        &self.lattice
    }

    /// Minimal generating set (the extreme rays when pointed).
    pub fn generators(&self) -> &Matrix<I> {
        &self.generators
    }

    pub fn lineality(&self) -> &Matrix<I> {
        &self.lineality
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Facet functionals as lattice vectors `w`: the cone lies in `(w, x) >= 0`.
    pub fn facets(&self) -> &Matrix<I> {
        &self.facets
    }

    pub fn facet_covectors(&self) -> &Matrix<I> {
        &self.facet_covectors
    }

    /// Covectors cutting out the linear span.
    pub fn equations(&self) -> &Matrix<I> {
        &self.equations
    }

    pub fn contains(&self, x: &[Ratio<I>], strictness: Strictness) -> bool {
        if self.equations.iter().any(|e| !dot_iq(e, x).is_zero()) {
            return false;
        }
        self.facet_covectors.iter().all(|f| {
            let v = dot_iq(f, x);
            match strictness {
                Strictness::Closed => !v.is_negative(),
                Strictness::RelativeInterior => v.is_positive(),
            }
        })
    }

    pub fn contains_int(&self, x: &[I], strictness: Strictness) -> bool {
        self.contains(&to_rational(x), strictness)
    }

    /// Sum of the generators; lies in the relative interior.
    pub fn interior_point(&self) -> IntVector<I> {
        let n = self.lattice.rank();
        self.generators.iter().fold(vec![I::zero(); n], |acc, g| {
            acc.iter().zip(g).map(|(a, b)| a.clone() + b.clone()).collect()
        })
    }

    /// `self` intersected with `(w, x) >= 0`, `<= 0` or `= 0`.
    pub fn intersect_halfspace(&self, w: &[Ratio<I>], sign: HalfspaceSign) -> Self {
        let cov = primitive_ray(&crate::scalar::mat_vec_q(self.lattice.gram(), w));
        self.intersect_covector(&cov, sign)
    }

    pub(crate) fn intersect_covector(&self, cov: &[I], sign: HalfspaceSign) -> Self {
        let vals: Vec<I> = self.generators.iter().map(|g| dot(cov, g)).collect();
        match sign {
            HalfspaceSign::NonNegative | HalfspaceSign::NonPositive => {
                let cov: IntVector<I> = if sign == HalfspaceSign::NonPositive {
                    cov.iter().map(|x| -x.clone()).collect()
                } else {
                    cov.to_vec()
                };
                let flip = sign == HalfspaceSign::NonPositive;
                if vals.iter().all(|v| if flip { !v.is_positive() } else { !v.is_negative() }) {
                    return self.clone();
                }
                let mut ineqs = self.facet_covectors.clone();
                ineqs.push(cov);
                Self::from_inequalities(&self.lattice, &ineqs, &self.equations)
            }
            HalfspaceSign::Zero => {
                if vals.iter().all(Zero::is_zero) {
                    return self.clone();
                }
                let mut eqs = self.equations.clone();
                eqs.push(cov.to_vec());
                Self::from_inequalities(&self.lattice, &self.facet_covectors, &eqs)
            }
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut ineqs = self.facet_covectors.clone();
        ineqs.extend(other.facet_covectors.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Self::from_inequalities(&self.lattice, &ineqs, &eqs)
    }

    /// Image under the linear map `x -> M x`.
    pub fn transform(&self, m: &[Vec<I>]) -> Self {
        let gens: Matrix<I> = self
            .generators
            .iter()
            .map(|g| crate::scalar::mat_vec(m, g))
            .collect();
        Self::from_int_generators(&self.lattice, &gens)
    }

    /// The face cut out by the `k`-th facet.
    pub fn facet_face(&self, k: usize) -> Self {
        self.intersect_covector(&self.facet_covectors[k], HalfspaceSign::Zero)
    }

    /// Generator-based containment test for a whole cone.
    pub fn contains_cone(&self, other: &Self) -> bool {
        other
            .generators
            .iter()
            .all(|g| self.contains_int(g, Strictness::Closed))
    }
}

/// Whether the hyperplane `v^perp` meets `C` in a point of positive square.
///
/// `C` must lie in the closure of the positive cone. When the generator
/// pairings with `v` change sign, the crossing point is an interior point
/// of a segment between independent closed-cone vectors and so has
/// positive square. Otherwise `C ∩ v^perp` is the face spanned by the
/// generators orthogonal to `v`; that face contains a positive vector iff
/// one of them has positive square or there are at least two of them.
pub fn wall_separates<I: LatticeInt>(cone: &RationalCone<I>, v: &[I]) -> bool {
    let lat = cone.lattice();
    debug_assert!(cone.is_pointed());
    debug_assert!(cone
        .generators()
        .iter()
        .all(|g| lat.position_int(g).in_closed_cone()));
    let mut pos = false;
    let mut neg = false;
    let mut zeros: Vec<&IntVector<I>> = Vec::new();
    for g in cone.generators() {
        let p = lat.pair(v, g);
        if p.is_positive() {
            pos = true;
        } else if p.is_negative() {
            neg = true;
        } else {
            zeros.push(g);
        }
        if pos && neg {
            return true;
        }
    }
    zeros.len() >= 2 || zeros.iter().any(|g| lat.square(g).is_positive())
}

/// Extreme rays of the pointed cone `{u in R^d : r . u >= 0 for rows r}`.
///
/// The rows must span `R^d`. Rays come back primitive and sorted.
pub(crate) fn extreme_rays<I: LatticeInt>(rows: &[IntVector<I>], d: usize) -> Matrix<I> {
    if d == 0 {
        return Vec::new();
    }
    let m = rows.len();
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    let mut chosen: Matrix<I> = Vec::with_capacity(d);
    for (i, r) in rows.iter().enumerate() {
        chosen.push(r.clone());
        if rank_int(&chosen, d) == chosen.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    assert_eq!(basis.len(), d, "inequality rows must span the ambient space");

    let inv = inverse(&to_rational_matrix(&chosen)).expect("independent rows");
    let mut rays: Vec<(IntVector<I>, FixedBitSet)> = (0..d)
        .map(|j| {
            let col: RatVector<I> = inv.iter().map(|row| row[j].clone()).collect();
            let mut z = FixedBitSet::with_capacity(m);
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    z.insert(b);
                }
            }
            (primitive_ray(&col), z)
        })
        .collect();

    for a in (0..m).filter(|i| !basis.contains(i)) {
        let vals: Vec<I> = rays.iter().map(|(r, _)| dot(&rows[a], r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for ((_, z), v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    z.insert(a);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<(IntVector<I>, FixedBitSet)> = Vec::new();
        for i in 0..rays.len() {
            if vals[i].is_zero() {
                let mut z = rays[i].1.clone();
                z.insert(a);
                next.push((rays[i].0.clone(), z));
            } else if vals[i].is_positive() {
                next.push(rays[i].clone());
            }
        }
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].1.clone();
                common.intersect_with(&rays[q].1);
                if common.count_ones(..) + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != q)
                    .all(|r| !common.is_subset(&rays[r].1));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (vals[p].clone(), -vals[q].clone());
                let new: IntVector<I> = rays[p]
                    .0
                    .iter()
                    .zip(&rays[q].0)
                    .map(|(x, y)| vp.clone() * y.clone() + vq.clone() * x.clone())
                    .collect();
                let mut z = common;
                z.insert(a);
                next.push((divide_content(&new), z));
            }
        }
        rays = next;
        if rays.is_empty() {
            break;
        }
    }
    let mut out: Matrix<I> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    out
}
