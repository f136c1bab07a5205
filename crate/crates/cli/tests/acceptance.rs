//! Acceptance run: one line per criterion, nonzero exit if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;
mod support;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use conewalls::chamber::subdivide;
use conewalls::cone::{RationalCone, Strictness};
use conewalls::group::{chamber_orbits, dirichlet_domain, verify_tiling, FacePairing, IsometryGroup, Status};
use conewalls::lattice::Lattice;
use conewalls::mukai::{brute_force_sigma_walls, sigma_oracle_box, sigma_walls_meeting_cone, MukaiSetup};
use conewalls::scalar::{to_rational, Matrix};
use conewalls::wall::{brute_force_walls, oracle_box, walls_meeting_cone, Wall, WallQuery};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const INSTANCES: usize = 100;
const INSTANCE_SEED: u64 = 7;

fn instances() -> Vec<WallQuery<common::T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(INSTANCE_SEED);
    (0..INSTANCES).map(|_| common::random_query(&mut rng)).collect()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for (i, q) in instances().iter().enumerate() {
        let fast = walls_meeting_cone(q).map_err(|e| format!("instance {i}: {e}"))?;
        let slow = brute_force_walls(q, &oracle_box(q));
        let key = |w: &Wall<common::T>| (w.v.clone(), w.square);
        ensure!(fast.iter().map(key).eq(slow.iter().map(key)), "instance {i}: {} walls vs {} from the oracle", fast.len(), slow.len());
        total += fast.len();
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(300), "took {t:?}");
    Ok(format!("{INSTANCES} instances, {total} walls, {t:.1?}"))
}

fn ac2() -> Outcome {
    let lat = Lattice::new(vec![vec![0i64, 1], vec![1, 0]], vec![1, 1]).unwrap();
    let cone = RationalCone::from_int_generators(&lat, &[vec![2, 1], vec![1, 2]]);
    let three = walls_meeting_cone(&WallQuery::new(lat.clone(), cone.clone(), 3).unwrap()).unwrap();
    let got: Vec<(Vec<i64>, i64)> = three.iter().map(|w| (w.v.clone(), w.square)).collect();
    ensure!(got == vec![(vec![1, -1], -2)], "N=3 gave {got:?}");
    let one = walls_meeting_cone(&WallQuery::new(lat, cone, 1).unwrap()).unwrap();
    ensure!(one.is_empty(), "N=1 gave {} walls", one.len());
    Ok("N=3 gives (1,-1) of square -2, N=1 gives none".into())
}

fn proportional(a: &[common::T], b: &[common::T]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] * b[j] == a[j] * b[i]))
}

fn ac3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut zeros, mut pairs) = (0, 0);
    while pairs < 10_000 {
        let lat = common::random_lattice(rng.gen_range(2..=4), &mut rng);
        for _ in 0..100 {
            let x = common::random_cone_vector(&lat, 4, 0.4, &mut rng);
            // reuse x now and then so proportional isotropic pairs occur
            let y = if rng.gen_bool(0.1) {
                x.iter().map(|c| c * 2).collect()
            } else {
                common::random_cone_vector(&lat, 4, 0.4, &mut rng)
            };
            let p = lat.pair(&x, &y);
            ensure!(p >= 0, "({x:?},{y:?}) = {p}");
            if p == 0 {
                ensure!(
                    lat.square(&x) == 0 && lat.square(&y) == 0 && proportional(&x, &y),
                    "({x:?},{y:?}) = 0 but the pair is not proportional isotropic"
                );
                zeros += 1;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs, {zeros} zero pairings, no violations"))
}

fn ac4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut chambers = 0;
    for (i, q) in instances().iter().enumerate() {
        let walls = walls_meeting_cone(q).unwrap();
        let sub = subdivide(&q.cone, &walls);
        common::check_partition(&sub, 1000, &mut rng).map_err(|e| format!("instance {i}: {e}"))?;
        chambers += sub.len();
    }
    Ok(format!("{INSTANCES} instances, {chambers} chambers, 1000 samples each"))
}

fn swap() -> Matrix<i64> {
    vec![vec![0, 1], vec![1, 0]]
}

fn ac5() -> Outcome {
    let lat = Lattice::new(vec![vec![0i64, 1], vec![1, 0]], vec![1, 1]).unwrap();
    let group = IsometryGroup::new(&lat, vec![swap()]).unwrap();
    let ambient = RationalCone::from_int_generators(&lat, &[vec![1, 0], vec![0, 1]]);
    let d = dirichlet_domain(&group, &ambient, &to_rational(&[2, 1]), 10).map_err(|e| e.to_string())?;
    let want = RationalCone::from_int_generators(&lat, &[vec![1, 0], vec![1, 1]]);
    ensure!(d.domain == want, "domain {:?}", d.domain.generators());
    ensure!(d.status == Status::Certified, "status {}", d.status);
    let r = verify_tiling(&d, &group, 1000, 10, 5);
    ensure!(r.cover_fraction().is_one(), "cover {}", r.cover_fraction());
    ensure!(r.interior_collisions == 0, "{} interior collisions", r.interior_collisions);
    Ok("cone<(1,0),(1,1)>, certified, cover 1 over 1000 samples".into())
}

fn perm(p: &[usize], signs: &[i64]) -> Matrix<i64> {
    let n = p.len();
    (0..n).map(|i| (0..n).map(|j| if p[i] == j { signs[i] } else { 0 }).collect()).collect()
}

struct GroupFixture {
    gram: Matrix<i64>,
    h: Vec<i64>,
    gens: Vec<Matrix<i64>>,
    ambient: Vec<Vec<i64>>,
    y: Vec<i64>,
}

fn group_fixtures() -> Vec<GroupFixture> {
    vec![
        GroupFixture {
            gram: vec![vec![0, 1], vec![1, 0]],
            h: vec![1, 1],
            gens: vec![swap()],
            ambient: vec![vec![1, 0], vec![0, 1]],
            y: vec![3, 1],
        },
        GroupFixture {
            gram: vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -2]],
            h: vec![1, 1, 0],
            gens: vec![perm(&[1, 0, 2], &[1, 1, 1]), perm(&[0, 1, 2], &[1, 1, -1])],
            ambient: vec![vec![1, 0, 0], vec![0, 1, 0], vec![2, 2, 1], vec![2, 2, -1]],
            y: vec![4, 3, 1],
        },
        GroupFixture {
            gram: vec![vec![2, 0, 0], vec![0, -2, 0], vec![0, 0, -2]],
            h: vec![1, 0, 0],
            gens: vec![perm(&[0, 2, 1], &[1, 1, 1]), perm(&[0, 1, 2], &[1, -1, 1])],
            ambient: vec![vec![2, 1, 1], vec![2, 1, -1], vec![2, -1, 1], vec![2, -1, -1]],
            y: vec![5, 2, 1],
        },
        GroupFixture {
            gram: vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, -2, 0], vec![0, 0, 0, -2]],
            h: vec![1, 1, 0, 0],
            gens: vec![
                perm(&[1, 0, 2, 3], &[1; 4]),
                perm(&[0, 1, 3, 2], &[1; 4]),
                perm(&[0, 1, 2, 3], &[1, 1, -1, 1]),
            ],
            ambient: vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![2, 2, 1, 1],
                vec![2, 2, 1, -1],
                vec![2, 2, -1, 1],
                vec![2, 2, -1, -1],
            ],
            y: vec![6, 5, 2, 1],
        },
    ]
}

fn ac6() -> Outcome {
    let mut orders = Vec::new();
    for (i, f) in group_fixtures().into_iter().enumerate() {
        let lat = Lattice::new(f.gram, f.h).unwrap();
        let group = IsometryGroup::new(&lat, f.gens).unwrap();
        let ambient = RationalCone::from_int_generators(&lat, &f.ambient);
        let closure = (0..=10).find(|&k| group.layers(k).closed).ok_or(format!("fixture {i}: group does not close"))?;
        let y = to_rational(&f.y);
        let d = dirichlet_domain(&group, &ambient, &y, closure).map_err(|e| format!("fixture {i}: {e}"))?;
        ensure!(d.status == Status::Certified, "fixture {i}: status {}", d.status);
        ensure!(d.domain.dim() == lat.rank(), "fixture {i}: domain of dimension {}", d.domain.dim());
        ensure!(d.domain.contains(&y, Strictness::RelativeInterior), "fixture {i}: y not in the relative interior");
        let r = verify_tiling(&d, &group, 500, closure, 11);
        ensure!(r.cover_fraction().is_one(), "fixture {i}: cover {}", r.cover_fraction());
        ensure!(r.interior_collisions == 0, "fixture {i}: {} interior collisions", r.interior_collisions);
        orders.push(group.layers(closure).elements().count().to_string());
    }
    Ok(format!("group orders {}, all certified with cover 1", orders.join(", ")))
}

fn ac7() -> Outcome {
    let start = Instant::now();
    let uu = vec![vec![0i64, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]];
    let ms = MukaiSetup::new(uu, vec![1, 1, 0, 0]).map_err(|e| e.to_string())?;
    let bound = ms.wall_bound();
    ensure!(bound == num_rational::Ratio::new(-5, 2), "bound {bound}");
    let lat = ms.perp_lattice(&[0, 0, 1, 1]).unwrap();
    let gens = [vec![1, -1, 4, 4], vec![-1, 1, 4, 4], vec![0, 0, 2, 6]];
    let coords: Vec<Vec<i64>> = gens.iter().map(|g| ms.perp_coordinates(g).unwrap()).collect();
    let cone = RationalCone::from_int_generators(&lat, &coords);
    let fast = sigma_walls_meeting_cone(&ms, &cone).map_err(|e| e.to_string())?;
    for w in &fast {
        ensure!(w.square >= bound, "wall {:?} of square {}", w.ambient, w.square);
    }
    let size = sigma_oracle_box(&ms, &cone).map_err(|e| e.to_string())?;
    let slow = brute_force_sigma_walls(&ms, &cone, &size);
    ensure!(fast == slow, "{} walls vs {} from the oracle", fast.len(), slow.len());
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(60), "took {t:?}");
    Ok(format!("bound -5/2, {} walls match the oracle (box {size}), {t:.1?}", fast.len()))
}

fn ac8() -> Outcome {
    for (cmd, name, code) in support::FIXTURES {
        let a = support::run(cmd, &support::fixture(name));
        let b = support::run(cmd, &support::fixture(name));
        ensure!(a.code == *code, "{name}: exit {} ({})", a.code, a.stderr);
        ensure!(a.code == b.code && a.stdout == b.stdout && a.stderr == b.stderr, "{name}: runs differ");
    }
    Ok(format!("{} fixtures, two runs each, identical bytes", support::FIXTURES.len()))
}

fn ac9() -> Outcome {
    let lat = Lattice::new(vec![vec![0i64, 1], vec![1, 0]], vec![1, 1]).unwrap();
    let pi = RationalCone::from_int_generators(&lat, &[vec![2, 1], vec![1, 2]]);
    let sub = subdivide(&pi, &[Wall::new(&lat, &[1, -1]).unwrap()]);
    ensure!(sub.len() == 2, "{} chambers", sub.len());
    let glued = FacePairing::from_matrices(&pi, &[swap()]).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for (pairing, want) in [(glued, 1), (FacePairing::empty(&pi), 2)] {
        let mut first = None;
        for depth in 0..=8 {
            let o = chamber_orbits(&sub, &pairing, depth).map_err(|e| e.to_string())?;
            if o.status == Status::Certified {
                ensure!(o.count() == want, "depth {depth}: count {} instead of {want}", o.count());
                first.get_or_insert(depth);
            } else {
                ensure!(first.is_none(), "depth {depth}: heuristic after certification");
            }
        }
        let first = first.ok_or("never certified")?;
        counts.push(format!("{want} (certified from depth {first})"));
    }
    Ok(format!("count with pairing {}, without {}", counts[0], counts[1]))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 9] = [
        ("AC1", "wall enumeration equals the brute-force oracle", ac1),
        ("AC2", "U lattice pinned walls", ac2),
        ("AC3", "closed positive cone pairs nonnegatively", ac3),
        ("AC4", "chambers partition the cone", ac4),
        ("AC5", "swap group Dirichlet domain", ac5),
        ("AC6", "finite groups give fundamental domains", ac6),
        ("AC7", "Mukai wall bound and oracle", ac7),
        ("AC8", "CLI output is deterministic", ac8),
        ("AC9", "models count with and without pairing", ac9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, what, f) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id} {what}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {id} {what}: {detail}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
