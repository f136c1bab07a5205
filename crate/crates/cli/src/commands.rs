//! One function per subcommand, each returning the result document.

use conewalls::chamber::subdivide;
use conewalls::group::{chamber_orbits, dirichlet_domain, find_face_pairings, verify_tiling, Status};
use conewalls::mukai::sigma_walls_meeting_cone;
use conewalls::scalar::format_rational;
use conewalls::wall::walls_meeting_cone;
use conewalls::{FacePairing, Int, IsometryGroup, Lattice, MukaiSetup, Rational, RationalCone, Subdivision, Wall, WallQuery};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::problem::{self, required, Problem};
use crate::Failure;

pub struct Overrides {
    pub depth: Option<u64>,
    pub seed: Option<u64>,
}

const DEFAULT_DEPTH: u64 = 10;
const DEFAULT_SAMPLES: u64 = 200;

fn int(x: &Int) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn rows(m: &[Vec<Int>]) -> Value {
    Value::Array(m.iter().map(|r| ints(r)).collect())
}

fn rat(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn rats(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn status(s: Status) -> (Value, Value) {
    match s {
        Status::Certified => (json!("certified"), Value::Null),
        Status::Heuristic(k) => (json!("heuristic"), json!(k)),
    }
}

/// Gram, reference class and cone generators as given, so results can be
/// fed back in.
fn header(lat: &Lattice, p: &Problem) -> Result<Map<String, Value>, Failure> {
    let mut m = Map::new();
    m.insert("gram".into(), rows(lat.gram()));
    m.insert("h".into(), ints(lat.reference()));
    m.insert("cone".into(), rows(&problem::matrix(required(&p.cone, "cone")?)?));
    Ok(m)
}

fn wall_list(walls: &[Wall]) -> Value {
    Value::Array(walls.iter().map(|w| json!({"v": ints(&w.v), "square": int(&w.square)})).collect())
}

fn depth(p: &Problem, o: &Overrides) -> usize {
    o.depth.or(p.depth).unwrap_or(DEFAULT_DEPTH) as usize
}

/// Explicit walls if given, else those of square `> -N` meeting the cone.
fn walls_for(p: &Problem, lat: &Lattice, cone: &RationalCone) -> Result<Vec<Wall>, Failure> {
    if let Some(entries) = &p.walls {
        return problem::wall_vectors(entries, lat)?
            .iter()
            .map(|v| Wall::new(lat, v).map_err(Failure::from))
            .collect();
    }
    let n = problem::int(required(&p.bound, "N or walls")?)?;
    let query = WallQuery::new(lat.clone(), cone.clone(), n)?;
    Ok(walls_meeting_cone(&query)?)
}

pub fn walls(p: &Problem) -> Result<Value, Failure> {
    let lat = problem::lattice(p)?;
    let cone = problem::cone(p, &lat)?;
    let n = problem::int(required(&p.bound, "N")?)?;
    let query = WallQuery::new(lat.clone(), cone.clone(), n.clone())?;
    let walls = walls_meeting_cone(&query)?;
    let mut doc = header(&lat, p)?;
    doc.insert("N".into(), int(&n));
    doc.insert("walls".into(), wall_list(&walls));
    Ok(Value::Object(doc))
}

fn chamber_list(sub: &Subdivision, with_boundary: bool) -> Value {
    Value::Array(
        sub.chambers
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("id".into(), json!(c.id));
                m.insert("generators".into(), rows(c.cone.generators()));
                if with_boundary {
                    m.insert("walls_on_boundary".into(), json!(sub.walls_on_boundary(c.id)));
                }
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn chambers(p: &Problem) -> Result<Value, Failure> {
    let lat = problem::lattice(p)?;
    let cone = problem::cone(p, &lat)?;
    let walls = walls_for(p, &lat, &cone)?;
    let sub = subdivide(&cone, &walls);
    let adjacency: Vec<Value> = sub
        .adjacency()
        .into_iter()
        .map(|e| json!({"chambers": [e.a, e.b], "walls": e.walls}))
        .collect();
    let mut doc = header(&lat, p)?;
    doc.insert("walls".into(), wall_list(&sub.walls));
    doc.insert("chambers".into(), chamber_list(&sub, true));
    doc.insert("adjacency".into(), Value::Array(adjacency));
    Ok(Value::Object(doc))
}

pub fn dirichlet(p: &Problem, o: &Overrides) -> Result<Value, Failure> {
    let lat = problem::lattice(p)?;
    let ambient = problem::cone(p, &lat)?;
    let group = IsometryGroup::new(&lat, problem::matrices(required(&p.group, "group")?)?)?;
    let y: Vec<Rational> = required(&p.y, "y")?.iter().map(problem::rational).collect::<Result<_, _>>()?;
    lat.check_dim(y.len())?;
    let max_depth = depth(p, o);
    let seed = o.seed.or(p.seed).unwrap_or(0);
    let samples = p.samples.unwrap_or(DEFAULT_SAMPLES) as usize;
    let d = dirichlet_domain(&group, &ambient, &y, max_depth)?;
    let report = verify_tiling(&d, &group, samples, max_depth, seed);
    let (st, stable) = status(d.status);
    let words: Vec<String> = d.contributing.iter().map(|g| g.word_text()).collect();
    let witnesses: Map<String, Value> = report.witnesses.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    let cover = report.cover_fraction();
    let mut doc = header(&lat, p)?;
    doc.insert("y".into(), rats(&y));
    doc.insert("domain_generators".into(), rows(d.domain.generators()));
    doc.insert("facet_words".into(), json!(words));
    doc.insert("status".into(), st);
    doc.insert("stable_depth".into(), stable);
    doc.insert("max_depth".into(), json!(max_depth));
    doc.insert(
        "tiling".into(),
        json!({
            "samples": report.samples,
            "covered": report.covered,
            "cover_fraction": cover.to_string(),
            "interior_collisions": report.interior_collisions,
            "witnesses": witnesses,
            "seed": seed,
        }),
    );
    Ok(Value::Object(doc))
}

pub fn models(p: &Problem, o: &Overrides) -> Result<Value, Failure> {
    let lat = problem::lattice(p)?;
    let cone = problem::cone(p, &lat)?;
    let walls = walls_for(p, &lat, &cone)?;
    let sub = subdivide(&cone, &walls);
    let depth = depth(p, o);
    let pairing = if let Some(ms) = &p.pairing {
        FacePairing::from_matrices(&cone, &problem::matrices(ms)?)?
    } else if let Some(gs) = &p.group {
        let group = IsometryGroup::new(&lat, problem::matrices(gs)?)?;
        find_face_pairings(&cone, &group, depth)
    } else {
        FacePairing::empty(&cone)
    };
    let orbits = chamber_orbits(&sub, &pairing, depth)?;
    let (st, stable) = status(orbits.status);
    let entries: Vec<Value> = pairing
        .entries
        .iter()
        .map(|e| json!({"facet": e.facet, "label": e.label, "matrix": rows(&e.matrix)}))
        .collect();
    let mut doc = header(&lat, p)?;
    doc.insert("walls".into(), wall_list(&sub.walls));
    doc.insert("chambers".into(), chamber_list(&sub, false));
    doc.insert("facets".into(), rows(cone.facets()));
    doc.insert("pairing".into(), Value::Array(entries));
    doc.insert("unpaired".into(), json!(pairing.unpaired));
    doc.insert("classes".into(), json!(orbits.classes));
    doc.insert("count".into(), json!(orbits.count()));
    doc.insert("status".into(), st);
    doc.insert("stable_depth".into(), stable);
    doc.insert("max_depth".into(), json!(depth));
    Ok(Value::Object(doc))
}

pub fn k3walls(p: &Problem) -> Result<Value, Failure> {
    let input = required(&p.mukai, "mukai")?;
    let gram = problem::matrix(&input.gram)?;
    let v = problem::vector(&input.v)?;
    let ms = MukaiSetup::new(gram, v)?;
    let h = problem::vector(required(&p.h, "h")?)?;
    let lat = ms.perp_lattice(&h)?;
    let gens = problem::matrix(required(&p.cone, "cone")?)?;
    let coords = gens.iter().map(|g| ms.perp_coordinates(g)).collect::<Result<Vec<_>, _>>()?;
    let cone = RationalCone::from_int_generators(&lat, &coords);
    let walls = sigma_walls_meeting_cone(&ms, &cone)?;
    let list: Vec<Value> = walls
        .iter()
        .map(|w| json!({"lambda": rats(&w.ambient), "coordinates": rats(&w.coords), "square": rat(&w.square)}))
        .collect();
    let mut doc = Map::new();
    doc.insert("mukai".into(), json!({"gram": rows(ms.gram()), "v": ints(ms.v())}));
    doc.insert("h".into(), ints(&h));
    doc.insert("cone".into(), rows(&gens));
    doc.insert("v_perp_basis".into(), rows(&ms.perp().basis));
    doc.insert("bound".into(), rat(&ms.wall_bound()));
    doc.insert("walls".into(), Value::Array(list));
    Ok(Value::Object(doc))
}
