//! Subdivision of a cone into closed chambers cut out by a finite set of
//! walls.

use num_rational::Ratio;
use num_traits::Signed;

use crate::cone::{HalfspaceSign, RationalCone, Strictness};
use crate::error::{Error, Result};
use crate::linalg::rank_int;
use crate::scalar::{to_rational, LatticeInt, Matrix};
use crate::wall::Wall;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<I: LatticeInt>(x: &I) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn of_ratio<I: LatticeInt>(x: &Ratio<I>) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber<I: LatticeInt> {
    pub id: usize,
    pub cone: RationalCone<I>,
    /// Sign of `(λ, p)` on the relative interior, one entry per wall.
    pub signs: Vec<Sign>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Chamber(usize),
    Boundary,
}

/// Two chambers sharing a facet, with the walls containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub walls: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Subdivision<I: LatticeInt> {
    pub ambient: RationalCone<I>,
    /// Walls in canonical order; chamber sign vectors index into this.
    pub walls: Vec<Wall<I>>,
    pub chambers: Vec<Chamber<I>>,
}

/// Splits `ambient` along every wall whose hyperplane crosses the relative
/// interior of a piece. Walls are processed in canonical order and
/// chambers numbered by their sorted generator lists.
pub fn subdivide<I: LatticeInt>(ambient: &RationalCone<I>, walls: &[Wall<I>]) -> Subdivision<I> {
    let mut walls = walls.to_vec();
    walls.sort();
    walls.dedup_by(|a, b| a.v == b.v);
    let order: Vec<usize> = (0..walls.len()).collect();
    split_in_order(ambient, walls, &order)
}

pub(crate) fn split_in_order<I: LatticeInt>(
    ambient: &RationalCone<I>,
    walls: Vec<Wall<I>>,
    order: &[usize],
) -> Subdivision<I> {
    let lat = ambient.lattice();
    let mut pieces = vec![ambient.clone()];
    for &k in order {
        let cov = lat.covector(&walls[k].v);
        let mut next = Vec::with_capacity(pieces.len() + 1);
        for piece in pieces {
            if crosses(&piece, &cov) {
                next.push(piece.intersect_covector(&cov, HalfspaceSign::NonNegative));
                next.push(piece.intersect_covector(&cov, HalfspaceSign::NonPositive));
            } else {
                next.push(piece);
            }
        }
        pieces = next;
    }
    pieces.sort_by(|a, b| a.generators().cmp(b.generators()).then_with(|| a.lineality().cmp(b.lineality())));
    let chambers = pieces
        .into_iter()
        .enumerate()
        .map(|(id, cone)| {
            let p = cone.interior_point();
            let signs = walls.iter().map(|w| Sign::of(&lat.pair(&w.v, &p))).collect();
            Chamber { id, cone, signs }
        })
        .collect();
    Subdivision { ambient: ambient.clone(), walls, chambers }
}

/// The hyperplane `cov . x = 0` meets the relative interior of `cone`
/// without containing it.
fn crosses<I: LatticeInt>(cone: &RationalCone<I>, cov: &[I]) -> bool {
    let mut pos = false;
    let mut neg = false;
    for g in cone.generators() {
        let s = crate::scalar::dot(cov, g);
        pos |= s.is_positive();
        neg |= s.is_negative();
    }
    pos && neg
}

impl<I: LatticeInt> Subdivision<I> {
    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn locate(&self, p: &[Ratio<I>]) -> Result<Location> {
        self.ambient.lattice().check_dim(p.len())?;
        if !self.ambient.contains(p, Strictness::Closed) {
            return Err(Error::NotInCone);
        }
        Ok(self
            .chambers
            .iter()
            .find(|c| c.cone.contains(p, Strictness::RelativeInterior))
            .map_or(Location::Boundary, |c| Location::Chamber(c.id)))
    }

    pub fn locate_int(&self, p: &[I]) -> Result<Location> {
        self.locate(&to_rational(p))
    }

    /// Chamber pairs sharing a facet of full facet dimension.
    pub fn adjacency(&self) -> Vec<Edge> {
        let d = self.ambient.dim();
        let lat = self.ambient.lattice();
        let mut edges = Vec::new();
        if d == 0 {
            return edges;
        }
        for (i, ci) in self.chambers.iter().enumerate() {
            for cj in &self.chambers[i + 1..] {
                let differ: Vec<usize> = (0..self.walls.len()).filter(|&k| ci.signs[k] != cj.signs[k]).collect();
                if differ.is_empty() {
                    continue;
                }
                let opposite = differ.iter().all(|&k| {
                    matches!(
                        (ci.signs[k], cj.signs[k]),
                        (Sign::Positive, Sign::Negative) | (Sign::Negative, Sign::Positive)
                    )
                });
                if !opposite {
                    continue;
                }
                let common = ci.cone.intersect(&cj.cone);
                if common.dim() + 1 != d {
                    continue;
                }
                let labels: Vec<usize> = differ
                    .into_iter()
                    .filter(|&k| {
                        common
                            .generators()
                            .iter()
                            .all(|g| lat.pair(&self.walls[k].v, g).is_zero())
                    })
                    .collect();
                edges.push(Edge { a: ci.id, b: cj.id, walls: labels });
            }
        }
        edges
    }

    /// Indices of walls containing a facet of the chamber.
    pub fn walls_on_boundary(&self, id: usize) -> Vec<usize> {
        let c = &self.chambers[id].cone;
        let lat = c.lattice();
        let n = lat.rank();
        if c.dim() == 0 {
            return Vec::new();
        }
        (0..self.walls.len())
            .filter(|&k| {
                let v = &self.walls[k].v;
                let zeros: Matrix<I> = c
                    .generators()
                    .iter()
                    .filter(|g| lat.pair(v, g).is_zero())
                    .cloned()
                    .collect();
                zeros.len() < c.generators().len() && rank_int(&zeros, n) + 1 >= c.dim()
            })
            .collect()
    }

    pub fn chamber(&self, id: usize) -> &Chamber<I> {
        &self.chambers[id]
    }

    /// Generator lists of all chambers, in id order.
    pub fn generator_lists(&self) -> Vec<Matrix<I>> {
        self.chambers.iter().map(|c| c.cone.generators().clone()).collect()
    }
}

/// Signs of `(λ, p)` for the walls of `sub`.
pub fn sign_vector<I: LatticeInt>(sub: &Subdivision<I>, p: &[I]) -> Vec<Sign> {
    let lat = sub.ambient.lattice();
    sub.walls.iter().map(|w| Sign::of(&lat.pair(&w.v, p))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;

    fn u() -> Lattice<i64> {
        Lattice::new(vec![vec![0, 1], vec![1, 0]], vec![1, 1]).unwrap()
    }

    fn wall(l: &Lattice<i64>, v: &[i64]) -> Wall<i64> {
        Wall::new(l, v).unwrap()
    }

    fn pi(l: &Lattice<i64>) -> RationalCone<i64> {
        RationalCone::from_int_generators(l, &[vec![2, 1], vec![1, 2]])
    }

    #[test]
    fn two_chamber_split() {
        let l = u();
        let sub = subdivide(&pi(&l), &[wall(&l, &[1, -1])]);
        assert_eq!(
            sub.generator_lists(),
            vec![vec![vec![1, 1], vec![1, 2]], vec![vec![1, 1], vec![2, 1]]]
        );
        assert_eq!(sub.locate_int(&[3, 2]).unwrap(), Location::Chamber(1));
        assert_eq!(sub.locate_int(&[1, 1]).unwrap(), Location::Boundary);
        assert_eq!(sub.locate_int(&[1, -1]), Err(Error::NotInCone));
        let edges = sub.adjacency();
        assert_eq!(edges, vec![Edge { a: 0, b: 1, walls: vec![0] }]);
        assert_eq!(sub.walls_on_boundary(0), vec![0]);
    }

    #[test]
    fn no_walls() {
        let l = u();
        let sub = subdivide(&pi(&l), &[]);
        assert_eq!(sub.len(), 1);
        assert_eq!(sub.chambers[0].cone, pi(&l));
        assert!(sub.adjacency().is_empty());
    }

    #[test]
    fn ray_is_not_split() {
        let l = u();
        let ray = RationalCone::from_int_generators(&l, &[vec![1, 1]]);
        let sub = subdivide(&ray, &[wall(&l, &[1, -1])]);
        assert_eq!(sub.len(), 1);
        assert_eq!(sub.chambers[0].signs, vec![Sign::Zero]);
        assert!(sub.adjacency().is_empty());
    }

    #[test]
    fn three_chambers_form_a_path() {
        let l = u();
        let c = RationalCone::from_int_generators(&l, &[vec![4, 1], vec![1, 4]]);
        // hyperplanes through (1,1) and (2,1)
        let sub = subdivide(&c, &[wall(&l, &[1, -1]), wall(&l, &[2, -1])]);
        assert_eq!(sub.len(), 3);
        let edges = sub.adjacency();
        assert_eq!(edges.len(), 2);
        let mut degree = [0; 3];
        for e in &edges {
            degree[e.a] += 1;
            degree[e.b] += 1;
            assert_eq!(e.walls.len(), 1);
        }
        let mut sorted = degree;
        sorted.sort();
        assert_eq!(sorted, [1, 1, 2]);
    }

    #[test]
    fn order_independent() {
        let l = Lattice::new(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -2]], vec![1, 1, 0]).unwrap();
        let c = RationalCone::from_int_generators(&l, &[vec![1, 0, 0], vec![0, 1, 0], vec![2, 2, 1], vec![2, 2, -1]]);
        let mut walls: Vec<Wall<i64>> = [[0, 0, 1], [1, -1, 0], [1, -2, 1], [2, -1, 1], [1, 1, 1]]
            .iter()
            .map(|v| wall(&l, v))
            .collect();
        walls.sort();
        let canonical = split_in_order(&c, walls.clone(), &[0, 1, 2, 3, 4]);
        for order in [[4, 3, 2, 1, 0], [2, 0, 4, 1, 3], [1, 3, 0, 4, 2]] {
            let other = split_in_order(&c, walls.clone(), &order);
            assert_eq!(canonical.generator_lists(), other.generator_lists());
        }
    }
}
