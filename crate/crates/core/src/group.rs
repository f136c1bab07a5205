//! Finitely generated isometry groups acting on the positive cone:
//! word enumeration, Dirichlet domains, tiling checks, face pairings and
//! classification of chambers up to the group action.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chamber::Subdivision;
use crate::cone::{HalfspaceSign, RationalCone, Strictness};
use crate::error::{Error, Result};
use crate::lattice::{ConePosition, Lattice};
use crate::linalg::{determinant, inverse, rank_int, to_rational_matrix};
use crate::scalar::{
    dot, mat_mul, mat_vec, mat_vec_q, primitive_ray, to_integral, transpose, IntVector, LatticeInt,
    Matrix, RatVector,
};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "g{}^-1", self.generator)
        } else {
            write!(f, "g{}", self.generator)
        }
    }
}

/// Renders a word as `g0*g1^-1`; the empty word is `id`.
pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join("*")
}

/// A group element: the word `l1 l2 ... lk` acts as `M_l1 M_l2 ... M_lk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement<I: LatticeInt> {
    pub word: Vec<Letter>,
    pub matrix: Matrix<I>,
}

impl<I: LatticeInt> GroupElement<I> {
    pub fn identity(n: usize) -> Self {
        GroupElement { word: Vec::new(), matrix: crate::scalar::identity(n) }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == crate::scalar::identity(self.matrix.len())
    }

    pub fn word_text(&self) -> String {
        format_word(&self.word)
    }

    pub fn apply(&self, x: &[Ratio<I>]) -> RatVector<I> {
        mat_vec_q(&self.matrix, x)
    }

    pub fn apply_int(&self, x: &[I]) -> IntVector<I> {
        mat_vec(&self.matrix, x)
    }
}

/// `M^T G M = G`, `det M = ±1` and `M h` in the positive cone.
pub fn check_isometry<I: LatticeInt>(lattice: &Lattice<I>, m: &[Vec<I>]) -> bool {
    let n = lattice.rank();
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return false;
    }
    let g = lattice.gram();
    if mat_mul(&mat_mul(&transpose(m), g), m) != *g {
        return false;
    }
    let det = determinant(&to_rational_matrix(m));
    if det.abs() != Ratio::one() {
        return false;
    }
    lattice.position_int(&mat_vec(m, lattice.reference())) == ConePosition::InteriorPositive
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stabilizer {
    Trivial,
    NonTrivialWitness(String),
    UnknownAtDepth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Certified,
    Heuristic(usize),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Certified => write!(f, "certified"),
            Status::Heuristic(k) => write!(f, "heuristic({k})"),
        }
    }
}

/// Elements by word length; `closed` means no new element exists beyond.
#[derive(Clone, Debug)]
pub struct Layers<I: LatticeInt> {
    pub layers: Vec<Vec<GroupElement<I>>>,
    pub closed: bool,
}

impl<I: LatticeInt> Layers<I> {
    pub fn elements(&self) -> impl Iterator<Item = &GroupElement<I>> {
        self.layers.iter().flatten()
    }
}

#[derive(Clone, Debug)]
pub struct IsometryGroup<I: LatticeInt> {
    lattice: Lattice<I>,
    generators: Vec<Matrix<I>>,
    letters: Vec<(Letter, Matrix<I>)>,
}

/// Breadth-first word enumeration with exact dedup by matrix.
struct Walker<'a, I: LatticeInt> {
    group: &'a IsometryGroup<I>,
    seen: HashSet<Matrix<I>>,
    frontier: Vec<GroupElement<I>>,
}

impl<'a, I: LatticeInt> Walker<'a, I> {
    fn new(group: &'a IsometryGroup<I>) -> Self {
        let id = GroupElement::identity(group.lattice.rank());
        let mut seen = HashSet::new();
        seen.insert(id.matrix.clone());
        Walker { group, seen, frontier: vec![id] }
    }

    fn step(&mut self) -> Vec<GroupElement<I>> {
        let mut next = Vec::new();
        for e in &self.frontier {
            for (letter, m) in &self.group.letters {
                let prod = mat_mul(&e.matrix, m);
                debug_assert!(check_isometry(&self.group.lattice, &prod));
                if self.seen.insert(prod.clone()) {
                    let mut word = e.word.clone();
                    word.push(*letter);
                    next.push(GroupElement { word, matrix: prod });
                }
            }
        }
        self.frontier = next.clone();
        next
    }
}

impl<I: LatticeInt> IsometryGroup<I> {
    pub fn new(lattice: &Lattice<I>, generators: Vec<Matrix<I>>) -> Result<Self> {
        let n = lattice.rank();
        let mut letters = Vec::new();
        for (k, m) in generators.iter().enumerate() {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::Dimension { expected: n, found: m.len() });
            }
            if !check_isometry(lattice, m) {
                return Err(Error::NotIsometry { index: k });
            }
            let inv = integer_inverse(m);
            letters.push((Letter { generator: k, inverse: false }, m.clone()));
            if inv != *m {
                letters.push((Letter { generator: k, inverse: true }, inv));
            }
        }
        Ok(IsometryGroup { lattice: lattice.clone(), generators, letters })
    }

    pub fn trivial(lattice: &Lattice<I>) -> Self {
        IsometryGroup { lattice: lattice.clone(), generators: Vec::new(), letters: Vec::new() }
    }

    pub fn lattice(&self) -> &Lattice<I> {
        &self.lattice
    }

    pub fn generators(&self) -> &[Matrix<I>] {
        &self.generators
    }

    /// All elements of word length `<= depth`, grouped by length.
    pub fn layers(&self, depth: usize) -> Layers<I> {
        let mut walker = Walker::new(self);
        let mut layers = vec![walker.frontier.clone()];
        for _ in 0..depth {
            let next = walker.step();
            if next.is_empty() {
                return Layers { layers, closed: true };
            }
            layers.push(next);
        }
        let closed = walker.step().is_empty();
        Layers { layers, closed }
    }

    /// Distinct images of `y` under words of length `<= depth`, sorted.
    pub fn orbit(&self, y: &[Ratio<I>], depth: usize) -> Vec<RatVector<I>> {
        let mut out: Vec<RatVector<I>> = self.layers(depth).elements().map(|g| g.apply(y)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn stabilizer_trivial(&self, y: &[Ratio<I>], depth: usize) -> Stabilizer {
        let layers = self.layers(depth);
        for g in layers.elements().skip(1) {
            if g.apply(y) == y {
                return Stabilizer::NonTrivialWitness(g.word_text());
            }
        }
        if layers.closed {
            Stabilizer::Trivial
        } else {
            Stabilizer::UnknownAtDepth
        }
    }
}

fn integer_inverse<I: LatticeInt>(m: &[Vec<I>]) -> Matrix<I> {
    let inv = inverse(&to_rational_matrix(m)).expect("unimodular");
    inv.iter().map(|r| to_integral(r).expect("unimodular")).collect()
}

#[derive(Clone, Debug)]
pub struct DirichletDomain<I: LatticeInt> {
    pub basepoint: RatVector<I>,
    pub ambient: RationalCone<I>,
    pub domain: RationalCone<I>,
    /// Elements whose inequality `(x, g(y) - y) >= 0` cuts out a facet.
    pub contributing: Vec<GroupElement<I>>,
    pub status: Status,
}

/// `D_y = ambient ∩ {x : (x, g(y) - y) >= 0}` over words of growing length.
///
/// Stops when the group is exhausted (certified) or when the domain is
/// unchanged for three consecutive depths (heuristic); in the latter case
/// the remaining words up to `max_depth` are still enumerated, and if the
/// group turns out finite their inequalities are added and the result is
/// certified.
pub fn dirichlet_domain<I: LatticeInt>(
    group: &IsometryGroup<I>,
    ambient: &RationalCone<I>,
    y: &[Ratio<I>],
    max_depth: usize,
) -> Result<DirichletDomain<I>> {
    let lat = group.lattice();
    lat.check_dim(y.len())?;
    if lat.position(y) != ConePosition::InteriorPositive {
        return Err(Error::precondition("base point is not in the positive cone"));
    }
    if !ambient.contains(y, Strictness::Closed) {
        return Err(Error::NotInCone);
    }
    let gram = lat.gram();
    let mut ineqs: Vec<(IntVector<I>, GroupElement<I>)> = Vec::new();
    let cut = |g: GroupElement<I>, ineqs: &mut Vec<(IntVector<I>, GroupElement<I>)>| -> Result<IntVector<I>> {
        let gy = g.apply(y);
        if gy == y {
            return Err(Error::Stabilizer { word: g.word_text() });
        }
        let diff: RatVector<I> = gy.iter().zip(y).map(|(a, b)| a.clone() - b.clone()).collect();
        let cov = primitive_ray(&mat_vec_q(gram, &diff));
        ineqs.push((cov.clone(), g));
        Ok(cov)
    };

    let mut walker = Walker::new(group);
    let mut history = vec![ambient.clone()];
    let mut status = None;
    for k in 1..=max_depth + 1 {
        let layer = walker.step();
        if layer.is_empty() {
            status = Some(Status::Certified);
            break;
        }
        if k > max_depth {
            break;
        }
        let mut covs = Vec::with_capacity(layer.len());
        for g in layer {
            covs.push(cut(g, &mut ineqs)?);
        }
        let prev = history.last().expect("nonempty");
        let mut all = prev.facet_covectors().clone();
        all.extend(covs);
        history.push(RationalCone::from_inequalities(lat, &all, prev.equations()));
        let h = history.len();
        if h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3] {
            // probe for closure before settling for a heuristic answer
            let mut rest = Vec::new();
            let mut closed = false;
            for _ in k..max_depth {
                let next = walker.step();
                if next.is_empty() {
                    closed = true;
                    break;
                }
                rest.extend(next);
            }
            if !closed {
                closed = walker.step().is_empty();
            }
            if closed {
                let mut covs = Vec::new();
                for g in rest {
                    covs.push(cut(g, &mut ineqs)?);
                }
                let last = history.last().expect("nonempty");
                let mut all = last.facet_covectors().clone();
                all.extend(covs);
                history.push(RationalCone::from_inequalities(lat, &all, last.equations()));
                status = Some(Status::Certified);
            } else {
                history.truncate(h - 2);
                status = Some(Status::Heuristic(h - 3));
            }
            break;
        }
    }
    let status = status.unwrap_or(Status::Heuristic(max_depth));
    let domain = history.pop().expect("nonempty");
    let d = domain.dim();
    let n = lat.rank();
    let contributing = ineqs
        .into_iter()
        .filter(|(cov, _)| {
            let tight: Matrix<I> = domain
                .generators()
                .iter()
                .filter(|g| dot(cov, g).is_zero())
                .cloned()
                .collect();
            tight.len() < domain.generators().len() && rank_int(&tight, n) + 1 == d
        })
        .map(|(_, g)| g)
        .collect();
    debug_assert!(domain.contains(y, Strictness::RelativeInterior));
    Ok(DirichletDomain { basepoint: y.to_vec(), ambient: ambient.clone(), domain, contributing, status })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingReport {
    pub samples: usize,
    pub covered: usize,
    /// Word of the first element mapping a sample into the domain, counted.
    pub witnesses: BTreeMap<String, usize>,
    /// Samples mapped into the relative interior by two distinct elements.
    pub interior_collisions: usize,
    pub seed: u64,
    pub depth: usize,
}

impl TilingReport {
    pub fn cover_fraction(&self) -> Ratio<u64> {
        if self.samples == 0 {
            return Ratio::one();
        }
        Ratio::new(self.covered as u64, self.samples as u64)
    }
}

/// Samples random interior points of the ambient cone and looks for words
/// moving each into the domain.
pub fn verify_tiling<I: LatticeInt>(
    domain: &DirichletDomain<I>,
    group: &IsometryGroup<I>,
    samples: usize,
    depth: usize,
    seed: u64,
) -> TilingReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<GroupElement<I>> = group.layers(depth).elements().cloned().collect();
    let gens = domain.ambient.generators();
    let n = group.lattice().rank();
    let mut report = TilingReport {
        samples,
        covered: 0,
        witnesses: BTreeMap::new(),
        interior_collisions: 0,
        seed,
        depth,
    };
    for _ in 0..samples {
        let mut p = vec![I::zero(); n];
        for g in gens {
            let w = I::from_u32(rng.gen_range(1..=1000)).expect("small weight");
            for (pi, gi) in p.iter_mut().zip(g) {
                *pi = pi.clone() + w.clone() * gi.clone();
            }
        }
        let mut first = None;
        let mut interior = 0;
        for g in &elements {
            let q = crate::scalar::to_rational(&g.apply_int(&p));
            if domain.domain.contains(&q, Strictness::Closed) {
                first.get_or_insert_with(|| g.word_text());
                if domain.domain.contains(&q, Strictness::RelativeInterior) {
                    interior += 1;
                }
            }
        }
        if let Some(word) = first {
            report.covered += 1;
            *report.witnesses.entry(word).or_insert(0) += 1;
        }
        if interior >= 2 {
            report.interior_collisions += 1;
        }
    }
    report
}

/// An element gluing facet `facet` of the cone: the facet lies in
/// `matrix(cone)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingEntry<I: LatticeInt> {
    pub facet: usize,
    pub matrix: Matrix<I>,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct FacePairing<I: LatticeInt> {
    pub cone: RationalCone<I>,
    pub entries: Vec<PairingEntry<I>>,
    pub unpaired: Vec<usize>,
}

impl<I: LatticeInt> FacePairing<I> {
    pub fn empty(cone: &RationalCone<I>) -> Self {
        FacePairing { cone: cone.clone(), entries: Vec::new(), unpaired: (0..cone.facets().len()).collect() }
    }

    /// Validated pairing from explicit entries.
    pub fn new(cone: &RationalCone<I>, entries: Vec<PairingEntry<I>>) -> Result<Self> {
        let lat = cone.lattice();
        for e in &entries {
            if e.facet >= cone.facets().len() {
                return Err(Error::Pairing(format!("{}: no facet {}", e.label, e.facet)));
            }
            if !check_isometry(lat, &e.matrix) {
                return Err(Error::Pairing(format!("{} is not an isometry preserving the positive cone", e.label)));
            }
            let image = cone.transform(&e.matrix);
            if !image.contains_cone(&cone.facet_face(e.facet)) {
                return Err(Error::Pairing(format!("{} does not carry the cone onto facet {}", e.label, e.facet)));
            }
        }
        let unpaired = (0..cone.facets().len()).filter(|k| entries.iter().all(|e| e.facet != *k)).collect();
        Ok(FacePairing { cone: cone.clone(), entries, unpaired })
    }

    /// Attaches each matrix to every facet it glues; a matrix gluing no
    /// facet is an error.
    pub fn from_matrices(cone: &RationalCone<I>, matrices: &[Matrix<I>]) -> Result<Self> {
        let lat = cone.lattice();
        let mut entries = Vec::new();
        for (i, m) in matrices.iter().enumerate() {
            let label = format!("p{i}");
            if !check_isometry(lat, m) {
                return Err(Error::Pairing(format!("{label} is not an isometry preserving the positive cone")));
            }
            let image = cone.transform(m);
            let before = entries.len();
            for k in 0..cone.facets().len() {
                if image.contains_cone(&cone.facet_face(k)) {
                    entries.push(PairingEntry { facet: k, matrix: m.clone(), label: label.clone() });
                }
            }
            if entries.len() == before {
                return Err(Error::Pairing(format!("{label} glues no facet of the cone")));
            }
        }
        Self::new(cone, entries)
    }
}

/// For each facet `F` of `cone`, the shortest word `g != id` with
/// `F ⊆ g(cone)` and `g(cone)` on the far side of `F`.
pub fn find_face_pairings<I: LatticeInt>(cone: &RationalCone<I>, group: &IsometryGroup<I>, depth: usize) -> FacePairing<I> {
    let layers = group.layers(depth);
    let mut entries = Vec::new();
    for k in 0..cone.facets().len() {
        let face = cone.facet_face(k);
        let cov = &cone.facet_covectors()[k];
        let found = layers.elements().skip(1).find(|g| {
            let image = cone.transform(&g.matrix);
            image.generators().iter().all(|x| !dot(cov, x).is_positive()) && image.contains_cone(&face)
        });
        if let Some(g) = found {
            entries.push(PairingEntry { facet: k, matrix: g.matrix.clone(), label: g.word_text() });
        }
    }
    let unpaired = (0..cone.facets().len()).filter(|k| entries.iter().all(|e| e.facet != *k)).collect();
    FacePairing { cone: cone.clone(), entries, unpaired }
}

/// A word (over pairing entries) moving `chamber` next to `root` in the
/// wall complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitWitness<I: LatticeInt> {
    pub chamber: usize,
    pub root: usize,
    pub entries: Vec<usize>,
    pub matrix: Matrix<I>,
}

#[derive(Clone, Debug)]
pub struct ChamberOrbits<I: LatticeInt> {
    pub classes: Vec<Vec<usize>>,
    pub status: Status,
    pub witnesses: Vec<OrbitWitness<I>>,
}

impl<I: LatticeInt> ChamberOrbits<I> {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// Chambers glued across non-wall facets of the cone, via the pairing.
/// Each edge `(j, j', e)` means `g_e(Π_j')` meets `Π_j` in a common facet
/// lying on facet `e.facet` of the cone and on no wall.
pub fn crossing_edges<I: LatticeInt>(sub: &Subdivision<I>, pairing: &FacePairing<I>) -> Vec<(usize, usize, usize)> {
    let lat = sub.ambient.lattice();
    let d = sub.ambient.dim();
    let mut edges = Vec::new();
    let images: Vec<Vec<RationalCone<I>>> = pairing
        .entries
        .iter()
        .map(|e| sub.chambers.iter().map(|c| c.cone.transform(&e.matrix)).collect())
        .collect();
    for (j, ch) in sub.chambers.iter().enumerate() {
        for (ei, e) in pairing.entries.iter().enumerate() {
            let cov = &pairing.cone.facet_covectors()[e.facet];
            let side = ch.cone.intersect_covector(cov, HalfspaceSign::Zero);
            if side.dim() + 1 != d {
                continue;
            }
            let on_wall = sub
                .walls
                .iter()
                .any(|w| side.generators().iter().all(|g| lat.pair(&w.v, g).is_zero()));
            if on_wall {
                continue;
            }
            for (jp, image) in images[ei].iter().enumerate() {
                if image.intersect(&side).dim() + 1 == d {
                    edges.push((j, jp, ei));
                }
            }
        }
    }
    edges
}

/// Classes of chambers equivalent under the group, found by breadth-first
/// search over pairing crossings with at most `depth` crossings from a
/// class root.
pub fn chamber_orbits<I: LatticeInt>(
    sub: &Subdivision<I>,
    pairing: &FacePairing<I>,
    depth: usize,
) -> Result<ChamberOrbits<I>> {
    if pairing.cone != sub.ambient {
        return Err(Error::Pairing("pairing is for a different cone".into()));
    }
    let n = sub.ambient.lattice().rank();
    let edges = crossing_edges(sub, pairing);
    let k = sub.chambers.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for &(j, jp, e) in &edges {
        adj[j].push((jp, e));
    }
    let mut class_of: Vec<Option<usize>> = vec![None; k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut witnesses = Vec::new();
    let mut truncated = false;
    for root in 0..k {
        if class_of[root].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[root] = Some(id);
        let mut members = vec![root];
        let mut frontier = vec![(root, Vec::new(), crate::scalar::identity::<I>(n))];
        for round in 0..=depth {
            let mut next = Vec::new();
            for (j, path, m) in &frontier {
                for &(jp, e) in &adj[*j] {
                    if class_of[jp].is_some() {
                        continue;
                    }
                    if round == depth {
                        truncated = true;
                        continue;
                    }
                    class_of[jp] = Some(id);
                    members.push(jp);
                    let mut p: Vec<usize> = path.clone();
                    p.push(e);
                    let mm = mat_mul(m, &pairing.entries[e].matrix);
                    witnesses.push(OrbitWitness { chamber: jp, root, entries: p.clone(), matrix: mm.clone() });
                    next.push((jp, p, mm));
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes.sort();
    let status = if truncated { Status::Heuristic(depth) } else { Status::Certified };
    Ok(ChamberOrbits { classes, status, witnesses })
}
