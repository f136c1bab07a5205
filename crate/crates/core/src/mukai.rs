//! Walls from a Mukai vector: the projections to `v⊥` of classes `x` with
//! `(x, x) >= -2` and `0 <= (v, x) <= (v, v)/2`.

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::Zero;

use crate::cone::{wall_separates, RationalCone};
use crate::error::{Error, Result};
use crate::lattice::{check_symmetric, Lattice, Sublattice};
use crate::linalg::{inertia, solve, to_rational_matrix};
use crate::scalar::{gcd_all, mat_vec, to_integral, transpose, IntVector, LatticeInt, Matrix, RatVector};
use crate::wall::{oracle_box, walls_meeting_cone, WallQuery};

#[derive(Clone, Debug)]
pub struct MukaiSetup<I: LatticeInt> {
    gram: Matrix<I>,
    v: IntVector<I>,
    vv: I,
    perp: Sublattice<I>,
}

/// An element `λ` of the projected wall set, sign-normalized like a wall.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SigmaWall<I: LatticeInt> {
    /// `(v, v) λ` in the basis of `v⊥`; integral, not necessarily primitive.
    pub scaled: IntVector<I>,
    /// `λ` in the basis of `v⊥`.
    pub coords: RatVector<I>,
    /// `λ` in the ambient basis.
    pub ambient: RatVector<I>,
    pub square: Ratio<I>,
}

impl<I: LatticeInt> MukaiSetup<I> {
    pub fn new(gram: Matrix<I>, v: IntVector<I>) -> Result<Self> {
        let n = check_symmetric(&gram)?;
        if v.len() != n {
            return Err(Error::Dimension { expected: n, found: v.len() });
        }
        if inertia(&to_rational_matrix(&gram)).zero > 0 {
            return Err(Error::Degenerate);
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        let vv = dot_form(&gram, &v, &v);
        let two = I::one() + I::one();
        if vv < two || !(vv.clone() % two).is_zero() {
            return Err(Error::precondition("(v, v) must be even and at least 2"));
        }
        if !gcd_all(&v).is_one() {
            return Err(Error::precondition("the Mukai vector must be primitive"));
        }
        let gv = mat_vec(&gram, &v);
        let basis = crate::linalg::integer_kernel(&[gv], n);
        let perp = Sublattice::new(basis, &gram);
        Ok(MukaiSetup { gram, v, vv, perp })
    }

    pub fn gram(&self) -> &Matrix<I> {
        &self.gram
    }

    pub fn v(&self) -> &IntVector<I> {
        &self.v
    }

    pub fn v_square(&self) -> &I {
        &self.vv
    }

    /// Basis of `v⊥` (rows, ambient coordinates) and its Gram.
    pub fn perp(&self) -> &Sublattice<I> {
        &self.perp
    }

    /// `v⊥` as a hyperbolic lattice, with reference class `h` given in
    /// ambient coordinates.
    pub fn perp_lattice(&self, h: &[I]) -> Result<Lattice<I>> {
        let c = self.perp_coordinates(h)?;
        Lattice::new(self.perp.gram.clone(), c)
    }

    /// Coordinates in the `v⊥` basis of an integral ambient vector
    /// orthogonal to `v`.
    pub fn perp_coordinates(&self, x: &[I]) -> Result<IntVector<I>> {
        let n = self.v.len();
        if x.len() != n {
            return Err(Error::Dimension { expected: n, found: x.len() });
        }
        let bt = to_rational_matrix(&transpose(&self.perp.basis));
        let rhs: RatVector<I> = x.iter().cloned().map(Ratio::from_integer).collect();
        solve(&bt, &rhs)
            .and_then(|c| to_integral(&c))
            .ok_or_else(|| Error::precondition("vector is not orthogonal to v"))
    }

    /// `x - ((v, x)/(v, v)) v` in the `v⊥` basis.
    pub fn project(&self, x: &[I]) -> RatVector<I> {
        let s = self.scaled_projection(x);
        let c = self.perp_coordinates(&s).expect("scaled projection lies in v⊥");
        c.into_iter().map(|a| Ratio::new(a, self.vv.clone())).collect()
    }

    /// `(v, v) x - (v, x) v`, an integral vector of `v⊥`.
    fn scaled_projection(&self, x: &[I]) -> IntVector<I> {
        let k = dot_form(&self.gram, &self.v, x);
        x.iter()
            .zip(&self.v)
            .map(|(a, b)| self.vv.clone() * a.clone() - k.clone() * b.clone())
            .collect()
    }

    /// `-2 - (v, v)/4`.
    pub fn wall_bound(&self) -> Ratio<I> {
        let two = I::one() + I::one();
        Ratio::from_integer(-two.clone()) - Ratio::new(self.vv.clone(), two.clone() * two)
    }

    /// Bound for `walls_meeting_cone` on the scaled classes `(v, v) λ`.
    pub fn scaled_bound(&self) -> I {
        let vv = Ratio::from_integer(self.vv.clone());
        let two = Ratio::from_integer(I::one() + I::one());
        let four = two.clone() * two.clone();
        let b = vv.clone() * vv.clone() * (two + vv / four);
        b.ceil().to_integer() + I::one()
    }

    /// An `x` with `(x, x) >= -2`, `0 <= (v, x) <= (v, v)/2` and
    /// `p(x) = λ`, where `scaled = (v, v) λ` in the `v⊥` basis.
    pub fn lift(&self, scaled: &[I]) -> Option<IntVector<I>> {
        let s = self.perp.embed(scaled);
        let ss = dot_form(&self.gram, &s, &s);
        let half = self.vv.clone() / (I::one() + I::one());
        let minus_two = -(I::one() + I::one());
        let mut k = I::zero();
        while k <= half {
            let num: IntVector<I> = s.iter().zip(&self.v).map(|(a, b)| a.clone() + k.clone() * b.clone()).collect();
            let x: Option<IntVector<I>> = num
                .iter()
                .map(|a| {
                    let (q, r) = (a.clone() / self.vv.clone(), a.clone() % self.vv.clone());
                    r.is_zero().then_some(q)
                })
                .collect();
            if let Some(x) = x {
                // (x, x) = (s, s)/(v,v)^2 + k^2/(v,v)
                let xx = Ratio::new(ss.clone(), self.vv.clone() * self.vv.clone())
                    + Ratio::new(k.clone() * k.clone(), self.vv.clone());
                if xx >= Ratio::from_integer(minus_two.clone()) {
                    return Some(x);
                }
            }
            k = k + I::one();
        }
        None
    }

    fn sigma_wall(&self, lat: &Lattice<I>, scaled: IntVector<I>) -> SigmaWall<I> {
        let coords: RatVector<I> = scaled.iter().map(|a| Ratio::new(a.clone(), self.vv.clone())).collect();
        let ambient = self.perp.embed_q(&coords);
        let square = Ratio::new(lat.square(&scaled), self.vv.clone() * self.vv.clone());
        SigmaWall { scaled, coords, ambient, square }
    }

    fn normalize(&self, lat: &Lattice<I>, scaled: &[I]) -> IntVector<I> {
        let g = gcd_all(scaled);
        let w = lat.primitive(scaled).expect("nonzero");
        w.into_iter().map(|a| a * g.clone()).collect()
    }
}

fn dot_form<I: LatticeInt>(gram: &[Vec<I>], x: &[I], y: &[I]) -> I {
    crate::scalar::dot(x, &mat_vec(gram, y))
}

fn check_cone<I: LatticeInt>(ms: &MukaiSetup<I>, cone: &RationalCone<I>) -> Result<Lattice<I>> {
    let lat = cone.lattice();
    if *lat.gram() != ms.perp.gram {
        return Err(Error::precondition("cone does not live in v⊥"));
    }
    Ok(lat.clone())
}

/// Every `λ = p(x)` whose hyperplane meets `cone` in a point of positive
/// square, `cone` being given in the `v⊥` basis.
pub fn sigma_walls_meeting_cone<I: LatticeInt>(ms: &MukaiSetup<I>, cone: &RationalCone<I>) -> Result<Vec<SigmaWall<I>>> {
    let lat = check_cone(ms, cone)?;
    let bound = ms.scaled_bound();
    let query = WallQuery::new(lat.clone(), cone.clone(), bound.clone())?;
    let mut out = Vec::new();
    for w in walls_meeting_cone(&query)? {
        if !w.square.is_negative() {
            continue;
        }
        let mut m = I::one();
        while m.clone() * m.clone() * w.square.clone() > -bound.clone() {
            let s: IntVector<I> = w.v.iter().map(|a| a.clone() * m.clone()).collect();
            let neg: IntVector<I> = s.iter().map(|a| -a.clone()).collect();
            if ms.lift(&s).is_some() || ms.lift(&neg).is_some() {
                out.push(ms.sigma_wall(&lat, s));
            }
            m = m + I::one();
        }
    }
    out.sort();
    Ok(out)
}

/// Coordinate box for [`brute_force_sigma_walls`], in ambient coordinates.
pub fn sigma_oracle_box<I: LatticeInt>(ms: &MukaiSetup<I>, cone: &RationalCone<I>) -> Result<I> {
    let lat = check_cone(ms, cone)?;
    let query = WallQuery::new(lat, cone.clone(), ms.scaled_bound())?;
    let s = oracle_box(&query);
    let half = ms.vv.clone() / (I::one() + I::one());
    let n = ms.v.len();
    let mut size = I::zero();
    for j in 0..n {
        let col = ms.perp.basis.iter().fold(I::zero(), |a, b| a + b[j].abs());
        let num = col * s.clone() + half.clone() * ms.v[j].abs();
        let c = Ratio::new(num, ms.vv.clone()).ceil().to_integer();
        if c > size {
            size = c;
        }
    }
    Ok(size)
}

/// Scans ambient classes `x` in `[-size, size]^n` with `(x, x) >= -2` and
/// `0 <= (v, x) <= (v, v)/2`, projects and keeps the separating ones.
pub fn brute_force_sigma_walls<I: LatticeInt>(ms: &MukaiSetup<I>, cone: &RationalCone<I>, size: &I) -> Vec<SigmaWall<I>> {
    let lat = cone.lattice();
    let n = ms.v.len();
    let minus_two = -(I::one() + I::one());
    let mut found = BTreeSet::new();
    let mut x = vec![-size.clone(); n];
    loop {
        let k = dot_form(&ms.gram, &ms.v, &x);
        if !k.is_negative()
            && k.clone() + k.clone() <= ms.vv
            && dot_form(&ms.gram, &x, &x) >= minus_two
        {
            let s = ms.scaled_projection(&x);
            if s.iter().any(|a| !a.is_zero()) {
                let c = ms.perp_coordinates(&s).expect("in v⊥");
                if wall_separates(cone, &c) {
                    found.insert(ms.normalize(lat, &c));
                }
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return found.into_iter().map(|s| ms.sigma_wall(lat, s)).collect();
            }
            if x[i] < *size {
                x[i] = x[i].clone() + I::one();
                break;
            }
            x[i] = -size.clone();
            i += 1;
        }
    }
}
