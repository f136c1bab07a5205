//! Random hyperbolic lattices and cones for tests.
#![allow(dead_code)]

use conewalls::chamber::{sign_vector, Subdivision};
use conewalls::cone::{RationalCone, Strictness};
use conewalls::lattice::{ConePosition, Lattice};
use conewalls::scalar::{mat_mul, transpose, LatticeInt};
use conewalls::wall::WallQuery;
use rand::Rng;

pub type T = i128;

fn diag_block(n: usize, rng: &mut impl Rng) -> Vec<Vec<T>> {
    // U or <2k> in the positive slot, negative definite diagonal tail
    let mut g = vec![vec![0; n]; n];
    let start = if rng.gen_bool(0.6) {
        g[0][1] = 1;
        g[1][0] = 1;
        2
    } else {
        g[0][0] = 2 * rng.gen_range(1..=2);
        1
    };
    for i in start..n {
        g[i][i] = -2 * rng.gen_range(1..=2);
    }
    g
}

fn unimodular(n: usize, steps: usize, rng: &mut impl Rng) -> Vec<Vec<T>> {
    let mut p: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| T::from(i == j)).collect()).collect();
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let s: T = if rng.gen_bool(0.5) { 1 } else { -1 };
        for row in p.iter_mut() {
            row[j] += s * row[i];
        }
    }
    p
}

/// A random lattice of signature `(1, n-1)` with a small reference vector.
pub fn random_lattice(n: usize, rng: &mut impl Rng) -> Lattice<T> {
    let g0 = diag_block(n, rng);
    let p = unimodular(n, rng.gen_range(0..=2), rng);
    let g = mat_mul(&mat_mul(&transpose(&p), &g0), &p);
    let h = find_positive(&g, rng).expect("positive vector");
    Lattice::new(g, h).expect("valid lattice")
}

fn square(g: &[Vec<T>], x: &[T]) -> T {
    (0..x.len()).map(|i| (0..x.len()).map(|j| x[i] * g[i][j] * x[j]).sum::<T>()).sum()
}

fn find_positive(g: &[Vec<T>], rng: &mut impl Rng) -> Option<Vec<T>> {
    let n = g.len();
    for _ in 0..10_000 {
        let x: Vec<T> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        if square(g, &x) > 0 {
            return Some(x);
        }
    }
    None
}

/// A random nonzero vector of the closed positive cone with coordinates in
/// `[-height, height]`; isotropic with probability about `iso`.
pub fn random_cone_vector(lat: &Lattice<T>, height: T, iso: f64, rng: &mut impl Rng) -> Vec<T> {
    let n = lat.rank();
    let want_iso = rng.gen_bool(iso);
    for attempt in 0..20_000 {
        let x: Vec<T> = (0..n).map(|_| rng.gen_range(-height..=height)).collect();
        let s = lat.square(&x);
        if s < 0 || x.iter().all(|c| *c == 0) {
            continue;
        }
        if want_iso && s != 0 && attempt < 10_000 {
            continue;
        }
        return if lat.pair(&x, lat.reference()) > 0 { x } else { x.iter().map(|c| -c).collect() };
    }
    unreachable!("no positive vectors found")
}

pub fn random_cone(lat: &Lattice<T>, k: usize, height: T, rng: &mut impl Rng) -> RationalCone<T> {
    let gens: Vec<Vec<T>> = (0..k).map(|_| random_cone_vector(lat, height, 0.25, rng)).collect();
    RationalCone::from_int_generators(lat, &gens)
}

pub fn random_query(rng: &mut impl Rng) -> WallQuery<T> {
    let n = rng.gen_range(2..=4);
    let lat = random_lattice(n, rng);
    let k = rng.gen_range(1..=n.min(3) + 1);
    let cone = random_cone(&lat, k, 5, rng);
    let bound = rng.gen_range(1..=6);
    WallQuery::new(lat, cone, bound).expect("valid query")
}

pub fn in_closed_cone<I: LatticeInt>(lat: &Lattice<I>, x: &[I]) -> bool {
    matches!(lat.position_int(x), ConePosition::InteriorPositive | ConePosition::BoundaryPositive)
}

/// Nonnegative integer combination of the generators, weights in `0..=max`.
pub fn random_point_in(cone: &RationalCone<T>, max: T, rng: &mut impl Rng) -> Vec<T> {
    let gens = cone.generators();
    let n = cone.lattice().rank();
    let mut p = vec![0; n];
    for g in gens {
        let w = rng.gen_range(0..=max);
        for (pi, gi) in p.iter_mut().zip(g) {
            *pi += w * gi;
        }
    }
    p
}

/// Samples points of the ambient cone and checks that chamber relative
/// interiors are sign-constant, pairwise disjoint, and cover every sample
/// lying on no wall.
pub fn check_partition(sub: &Subdivision<T>, samples: usize, rng: &mut impl Rng) -> Result<(), String> {
    let lat = sub.ambient.lattice();
    for c in &sub.chambers {
        let p = c.cone.interior_point();
        if sign_vector(sub, &p) != c.signs {
            return Err(format!("chamber {} interior point has the wrong signs", c.id));
        }
    }
    for _ in 0..samples {
        // small weights hit walls now and then
        let max = if rng.gen_bool(0.3) { 2 } else { 50 };
        let p = random_point_in(&sub.ambient, max, rng);
        let signs = sign_vector(sub, &p);
        let inside: Vec<usize> = sub
            .chambers
            .iter()
            .filter(|c| c.cone.contains_int(&p, Strictness::RelativeInterior))
            .map(|c| c.id)
            .collect();
        if inside.len() > 1 {
            return Err(format!("{p:?} lies in the interiors of chambers {inside:?}"));
        }
        if let Some(&id) = inside.first() {
            if sub.chambers[id].signs.iter().zip(&signs).any(|(a, b)| a != b) {
                return Err(format!("{p:?} in chamber {id} has signs {signs:?}"));
            }
        }
        let off_walls = sub.walls.iter().all(|w| lat.pair(&w.v, &p) != 0);
        if off_walls && inside.is_empty() && p.iter().any(|c| *c != 0) && sub.ambient.contains_int(&p, Strictness::RelativeInterior) {
            return Err(format!("{p:?} lies on no wall but in no chamber"));
        }
        if !sub.chambers.iter().any(|c| c.cone.contains_int(&p, Strictness::Closed)) {
            return Err(format!("{p:?} is not covered"));
        }
    }
    Ok(())
}
