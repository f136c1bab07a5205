//! Exact scalar types.
//!
//! Every computation in this crate is generic over an integer type `I`
//! implementing [`LatticeInt`]; rationals are `num_rational::Ratio<I>`.
//! Fixed-width types (`i64`, `i128`) are fast and panic on overflow in debug
//! builds; `BigInt` never overflows and backs the crate-root aliases.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

/// Integer ring usable as lattice coordinates.
pub trait LatticeInt:
    Integer
    + Signed
    + Roots
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> LatticeInt for T where
    T: Integer
        + Signed
        + Roots
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Rational number over the integer type `I`.
pub type Q<I> = Ratio<I>;

/// Integer coordinate vector in a lattice basis.
pub type IntVector<I> = Vec<I>;

/// Rational coordinate vector in a lattice basis.
pub type RatVector<I> = Vec<Ratio<I>>;

/// Dense row-major matrix.
pub type Matrix<T> = Vec<Vec<T>>;

#[inline]
pub fn int<I: LatticeInt>(v: i64) -> I {
    I::from_i64(v).expect("small integer fits the scalar type")
}

#[inline]
pub fn rat<I: LatticeInt>(numer: i64, denom: i64) -> Ratio<I> {
    Ratio::new(int(numer), int(denom))
}

pub fn to_rational<I: LatticeInt>(v: &[I]) -> RatVector<I> {
    v.iter().cloned().map(Ratio::from_integer).collect()
}

/// Returns `Some` integer vector when every entry has denominator one.
pub fn to_integral<I: LatticeInt>(v: &[Ratio<I>]) -> Option<IntVector<I>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

pub fn gcd_all<I: LatticeInt>(v: &[I]) -> I {
    v.iter().fold(I::zero(), |g, x| g.gcd(x))
}

/// Divides out the content of a nonzero integer vector (sign untouched).
pub fn divide_content<I: LatticeInt>(v: &[I]) -> IntVector<I> {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x.clone() / g.clone()).collect()
}

/// The unique primitive integer vector on the ray through `v`
/// (positive multiple). Returns the zero vector for zero input.
pub fn primitive_ray<I: LatticeInt>(v: &[Ratio<I>]) -> IntVector<I> {
    let lcm = v
        .iter()
        .fold(I::one(), |l, x| l.lcm(x.denom()));
    let scaled: IntVector<I> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    divide_content(&scaled)
}

/// Primitive vector with first nonzero coordinate positive.
pub fn primitive_line<I: LatticeInt>(v: &[I]) -> IntVector<I> {
    let mut p = divide_content(v);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        p.iter_mut().for_each(|x| *x = -x.clone());
    }
    p
}

pub fn dot<I: LatticeInt>(a: &[I], b: &[I]) -> I {
    a.iter()
        .zip(b)
        .fold(I::zero(), |s, (x, y)| s + x.clone() * y.clone())
}

pub fn dot_q<I: LatticeInt>(a: &[Ratio<I>], b: &[Ratio<I>]) -> Ratio<I> {
    a.iter()
        .zip(b)
        .fold(Ratio::zero(), |s, (x, y)| s + x.clone() * y.clone())
}

/// Dot product of an integer covector with a rational vector.
pub fn dot_iq<I: LatticeInt>(a: &[I], b: &[Ratio<I>]) -> Ratio<I> {
    a.iter().zip(b).fold(Ratio::zero(), |s, (x, y)| {
        s + y.clone() * Ratio::from_integer(x.clone())
    })
}

pub fn mat_vec<I: LatticeInt>(m: &[Vec<I>], v: &[I]) -> IntVector<I> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_vec_q<I: LatticeInt>(m: &[Vec<I>], v: &[Ratio<I>]) -> RatVector<I> {
    m.iter().map(|row| dot_iq(row, v)).collect()
}

pub fn mat_mul<I: LatticeInt>(a: &[Vec<I>], b: &[Vec<I>]) -> Matrix<I> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(I::zero(), |s, (x, brow)| s + x.clone() * brow[j].clone())
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Matrix<T> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn identity<I: LatticeInt>(n: usize) -> Matrix<I> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { I::one() } else { I::zero() }).collect())
        .collect()
}

/// Smallest integer `u` with `u*u >= x` for a nonnegative rational `x`.
pub fn ceil_sqrt<I: LatticeInt>(x: &Ratio<I>) -> I {
    debug_assert!(!x.is_negative());
    let mut u = x.floor().to_integer().sqrt();
    while Ratio::from_integer(u.clone() * u.clone()) < *x {
        u = u + I::one();
    }
    u
}

/// Largest integer `u` with `u*u <= x` for a nonnegative rational `x`.
pub fn floor_sqrt<I: LatticeInt>(x: &Ratio<I>) -> I {
    debug_assert!(!x.is_negative());
    x.floor().to_integer().sqrt()
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn format_rational<I: LatticeInt>(x: &Ratio<I>) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p/q` or `p` into a reduced rational.
pub fn parse_rational<I: LatticeInt>(s: &str) -> Option<Ratio<I>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse::<I>().ok()?;
            let q = q.trim().parse::<I>().ok()?;
            (!q.is_zero()).then(|| Ratio::new(p, q))
        }
        None => s.parse::<I>().ok().map(Ratio::from_integer),
    }
}

/// Converts between integer backends; `None` if the value does not fit.
pub fn convert_int<A: LatticeInt, B: LatticeInt>(x: &A) -> Option<B> {
    x.to_string().parse().ok()
}
