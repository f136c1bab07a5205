//! Problem files: parsing and conversion to library types.

use conewalls::scalar::{parse_rational, Matrix};
use conewalls::{Int, Lattice, Rational, RationalCone};
use serde::Deserialize;

use crate::Failure;

/// An integer given as a JSON number or a decimal string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Num(i64),
    Text(String),
}

/// A rational given as a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum JsonRational {
    Num(i64),
    Text(String),
}

/// A wall as a bare vector or as an entry of a `walls` result.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum WallEntry {
    Vector(Vec<JsonInt>),
    Object {
        v: Vec<JsonInt>,
        #[serde(default)]
        square: Option<JsonInt>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MukaiInput {
    pub gram: Vec<Vec<JsonInt>>,
    pub v: Vec<JsonInt>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    pub gram: Option<Vec<Vec<JsonInt>>>,
    pub h: Option<Vec<JsonInt>>,
    pub cone: Option<Vec<Vec<JsonInt>>>,
    #[serde(rename = "N")]
    pub bound: Option<JsonInt>,
    pub walls: Option<Vec<WallEntry>>,
    pub group: Option<Vec<Vec<Vec<JsonInt>>>>,
    pub pairing: Option<Vec<Vec<Vec<JsonInt>>>>,
    pub y: Option<Vec<JsonRational>>,
    pub depth: Option<u64>,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub mukai: Option<MukaiInput>,
}

impl Problem {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text).map_err(|e| Failure::validation("parse", e.to_string()))
    }
}

pub fn required<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T, Failure> {
    field.as_ref().ok_or_else(|| Failure::validation("missing_field", name.to_string()))
}

pub fn int(x: &JsonInt) -> Result<Int, Failure> {
    match x {
        JsonInt::Num(n) => Ok(Int::from(*n)),
        JsonInt::Text(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::validation("bad_number", format!("not an integer: {s:?}"))),
    }
}

pub fn vector(xs: &[JsonInt]) -> Result<Vec<Int>, Failure> {
    xs.iter().map(int).collect()
}

pub fn matrix(rows: &[Vec<JsonInt>]) -> Result<Matrix<Int>, Failure> {
    rows.iter().map(|r| vector(r)).collect()
}

pub fn rational(x: &JsonRational) -> Result<Rational, Failure> {
    match x {
        JsonRational::Num(n) => Ok(Rational::from_integer(Int::from(*n))),
        JsonRational::Text(s) => {
            parse_rational(s).ok_or_else(|| Failure::validation("bad_number", format!("not a rational: {s:?}")))
        }
    }
}

pub fn lattice(p: &Problem) -> Result<Lattice, Failure> {
    let gram = matrix(required(&p.gram, "gram")?)?;
    let h = vector(required(&p.h, "h")?)?;
    Ok(Lattice::new(gram, h)?)
}

pub fn cone(p: &Problem, lat: &Lattice) -> Result<RationalCone, Failure> {
    let gens = matrix(required(&p.cone, "cone")?)?;
    for g in &gens {
        lat.check_dim(g.len())?;
    }
    Ok(RationalCone::from_int_generators(lat, &gens))
}

pub fn matrices(ms: &[Vec<Vec<JsonInt>>]) -> Result<Vec<Matrix<Int>>, Failure> {
    ms.iter().map(|m| matrix(m)).collect()
}

/// Wall vectors; a stated square must agree with the lattice.
pub fn wall_vectors(entries: &[WallEntry], lat: &Lattice) -> Result<Vec<Vec<Int>>, Failure> {
    entries
        .iter()
        .map(|e| {
            let (v, square) = match e {
                WallEntry::Vector(v) => (vector(v)?, None),
                WallEntry::Object { v, square } => (vector(v)?, square.as_ref().map(int).transpose()?),
            };
            lat.check_dim(v.len())?;
            if let Some(s) = square {
                if s != lat.square(&v) {
                    return Err(Failure::validation("square_mismatch", format!("wall {v:?} has square {}", lat.square(&v))));
                }
            }
            Ok(v)
        })
        .collect()
}
