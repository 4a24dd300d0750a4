//! Combinatorics of the regular icosahedron.
//!
//! Distances are tracked by class only: two distinct vertices are joined by
//! an edge (`Short`), by a pentagon diagonal (`Long`, φ times an edge) or are
//! antipodal (`Diameter`). Every golden figure is recognised from those
//! classes, so no coordinates are needed.
//!
//! Vertex numbering is fixed:
//!
//! | vertex | position                                     |
//! |--------|----------------------------------------------|
//! | 0      | top                                          |
//! | 1..=5  | upper ring, in cyclic order                  |
//! | 6..=10 | lower ring; `6 + k` touches `1 + k`, `1 + (k + 1) % 5` |
//! | 11     | bottom                                       |

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const VERTEX_COUNT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(u8);

impl VertexId {
    pub fn new(index: usize) -> Option<VertexId> {
        (index < VERTEX_COUNT).then_some(VertexId(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = VertexId> {
        (0..VERTEX_COUNT as u8).map(VertexId)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

/// A set of vertices as a 12-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 & (1 << v.0) != 0
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let fresh = !self.contains(v);
        self.0 |= 1 << v.0;
        fresh
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        (0..VERTEX_COUNT as u8)
            .filter(move |i| self.0 & (1 << i) != 0)
            .map(VertexId)
    }

    fn pairs(self) -> impl Iterator<Item = (VertexId, VertexId)> {
        let members: Vec<VertexId> = self.iter().collect();
        let mut out = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                out.push((a, b));
            }
        }
        out.into_iter()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DistanceClass {
    Short,
    Long,
    Diameter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TripleShape {
    Face,
    GoldenTriangle,
    GoldenGnomon,
    GreatTriangle,
    DiameterTriple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureKind {
    Triangle,
    Gnomon,
    Rectangle,
}

impl FigureKind {
    /// `gt`, `gg` or `gr`.
    pub fn abbreviation(self) -> &'static str {
        match self {
            FigureKind::Triangle => "gt",
            FigureKind::Gnomon => "gg",
            FigureKind::Rectangle => "gr",
        }
    }

    /// Triangle and gnomon trade places; rectangles are fixed.
    pub fn swapped(self) -> FigureKind {
        match self {
            FigureKind::Triangle => FigureKind::Gnomon,
            FigureKind::Gnomon => FigureKind::Triangle,
            FigureKind::Rectangle => FigureKind::Rectangle,
        }
    }
}

/// A golden triangle, gnomon or rectangle on the icosahedron.
///
/// Triangles and gnomons carry their apex (the vertex joined to both base
/// vertices by equal sides). Equality ignores the order of base vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GoldenFigure {
    pub kind: FigureKind,
    pub vertices: VertexSet,
    pub apex: Option<VertexId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NeighborhoodMode {
    /// Same kind, same apex, one shared leg.
    ApexShared,
    /// Opposite kind, shared short edge, same link pentagon.
    SEdgePentagon,
    /// Opposite kind, shared long edge, same link pentagon.
    LEdgePentagon,
}

impl NeighborhoodMode {
    pub const ALL: [NeighborhoodMode; 3] = [
        NeighborhoodMode::ApexShared,
        NeighborhoodMode::SEdgePentagon,
        NeighborhoodMode::LEdgePentagon,
    ];

    pub fn label(self) -> &'static str {
        match self {
            NeighborhoodMode::ApexShared => "apex",
            NeighborhoodMode::SEdgePentagon => "s-pentagon",
            NeighborhoodMode::LEdgePentagon => "l-pentagon",
        }
    }
}

/// A bijection on the twelve vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([VertexId; VERTEX_COUNT]);

impl Permutation {
    pub fn identity() -> Permutation {
        let mut images = [VertexId(0); VERTEX_COUNT];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = VertexId(i as u8);
        }
        Permutation(images)
    }

    /// Returns `None` unless `images` is a bijection.
    pub fn from_images(images: [VertexId; VERTEX_COUNT]) -> Option<Permutation> {
        let seen: VertexSet = images.iter().copied().collect();
        (seen.len() == VERTEX_COUNT).then_some(Permutation(images))
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.0[v.index()]
    }

    pub fn apply_set(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.apply(v)).collect()
    }

    pub fn images(&self) -> &[VertexId; VERTEX_COUNT] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut images = [VertexId(0); VERTEX_COUNT];
        for v in VertexId::all() {
            images[v.index()] = self.apply(other.apply(v));
        }
        Permutation(images)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [VertexId(0); VERTEX_COUNT];
        for v in VertexId::all() {
            images[self.apply(v).index()] = v;
        }
        Permutation(images)
    }

    pub fn is_identity(&self) -> bool {
        VertexId::all().all(|v| self.apply(v) == v)
    }

    pub fn order(&self) -> usize {
        let mut power = *self;
        let mut order = 1;
        while !power.is_identity() {
            power = self.compose(&power);
            order += 1;
        }
        order
    }

    /// Disjoint cycles, each starting at its smallest vertex, sorted by
    /// that vertex. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<VertexId>> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in VertexId::all() {
            if seen.contains(start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while seen.insert(v) {
                cycle.push(v);
                v = self.apply(v);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter().map(|v| v.0)).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryOperation {
    pub permutation: Permutation,
    pub proper_rotation: bool,
}

/// The vertex/edge structure of the regular icosahedron in the canonical
/// numbering.
#[derive(Clone, Debug)]
pub struct Topology {
    adjacency: [u16; VERTEX_COUNT],
    antipode: [VertexId; VERTEX_COUNT],
    /// Neighbors of each vertex in a consistent rotational order.
    links: [[VertexId; 5]; VERTEX_COUNT],
    /// Oriented faces `(a, b, c)` with the smallest vertex first.
    faces: Vec<[VertexId; 3]>,
    catalog: FigureCatalog,
}

impl Default for Topology {
    fn default() -> Self {
        Topology::new()
    }
}

impl Topology {
    pub fn new() -> Topology {
        let mut adjacency = [0u16; VERTEX_COUNT];
        let mut join = |a: usize, b: usize| {
            adjacency[a] |= 1 << b;
            adjacency[b] |= 1 << a;
        };
        for k in 0..5 {
            let upper = 1 + k;
            let upper_next = 1 + (k + 1) % 5;
            let lower = 6 + k;
            let lower_next = 6 + (k + 1) % 5;
            join(0, upper);
            join(upper, upper_next);
            join(upper, lower);
            join(upper_next, lower);
            join(lower, lower_next);
            join(11, lower);
        }

        let mut antipode = [VertexId(0); VERTEX_COUNT];
        for v in 0..VERTEX_COUNT {
            let far: Vec<usize> = (0..VERTEX_COUNT)
                .filter(|&w| w != v && adjacency[v] & (1 << w) == 0 && adjacency[v] & adjacency[w] == 0)
                .collect();
            assert_eq!(far.len(), 1, "vertex {v} must have exactly one antipode");
            antipode[v] = VertexId(far[0] as u8);
        }

        let faces = orient_faces(&adjacency);
        let mut links = [[VertexId(0); 5]; VERTEX_COUNT];
        for v in 0..VERTEX_COUNT {
            // successor of each neighbor around v, read off the oriented faces
            let mut next = [usize::MAX; VERTEX_COUNT];
            for face in &faces {
                let idx = face.iter().map(|x| x.index()).collect::<Vec<_>>();
                if let Some(pos) = idx.iter().position(|&x| x == v) {
                    next[idx[(pos + 1) % 3]] = idx[(pos + 2) % 3];
                }
            }
            let first = adjacency[v].trailing_zeros() as usize;
            let mut cur = first;
            for slot in links[v].iter_mut() {
                *slot = VertexId(cur as u8);
                cur = next[cur];
            }
            debug_assert_eq!(cur, first);
        }

        let mut topology = Topology { adjacency, antipode, links, faces, catalog: FigureCatalog::default() };
        topology.catalog = topology.enumerate_golden_figures();
        topology
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.index()] & (1 << v.0) != 0
    }

    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        VertexSet(self.adjacency[v.index()])
    }

    pub fn antipode(&self, v: VertexId) -> VertexId {
        self.antipode[v.index()]
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        VertexId::all()
            .flat_map(|u| self.neighbors(u).iter().filter(move |&v| u < v).map(move |v| (u, v)))
            .collect()
    }

    pub fn faces(&self) -> &[[VertexId; 3]] {
        &self.faces
    }

    pub fn distance_class(&self, u: VertexId, v: VertexId) -> Result<DistanceClass> {
        if u == v {
            Err(Error::DegeneratePair(u))
        } else if self.is_adjacent(u, v) {
            Ok(DistanceClass::Short)
        } else if self.antipode(u) == v {
            Ok(DistanceClass::Diameter)
        } else {
            Ok(DistanceClass::Long)
        }
    }

    fn class_of(&self, u: VertexId, v: VertexId) -> DistanceClass {
        self.distance_class(u, v).expect("distinct vertices")
    }

    pub fn classify_triple(&self, triple: [VertexId; 3]) -> Result<TripleShape> {
        let [a, b, c] = triple;
        if a == b || b == c || a == c {
            return Err(Error::DegenerateTriple);
        }
        let classes = [self.class_of(a, b), self.class_of(b, c), self.class_of(a, c)];
        let count = |d: DistanceClass| classes.iter().filter(|&&x| x == d).count();
        Ok(match (count(DistanceClass::Short), count(DistanceClass::Long), count(DistanceClass::Diameter)) {
            (_, _, 1..) => TripleShape::DiameterTriple,
            (3, 0, 0) => TripleShape::Face,
            (1, 2, 0) => TripleShape::GoldenTriangle,
            (2, 1, 0) => TripleShape::GoldenGnomon,
            _ => TripleShape::GreatTriangle,
        })
    }

    /// Recognises a 3- or 4-vertex set as a golden figure.
    pub fn golden_figure(&self, vertices: VertexSet) -> Option<GoldenFigure> {
        match vertices.len() {
            3 => {
                let vs: Vec<VertexId> = vertices.iter().collect();
                let kind = match self.classify_triple([vs[0], vs[1], vs[2]]).ok()? {
                    TripleShape::GoldenTriangle => FigureKind::Triangle,
                    TripleShape::GoldenGnomon => FigureKind::Gnomon,
                    _ => return None,
                };
                let apex = vs.iter().copied().find(|&a| {
                    let others: Vec<VertexId> = vs.iter().copied().filter(|&x| x != a).collect();
                    self.class_of(a, others[0]) == self.class_of(a, others[1])
                })?;
                Some(GoldenFigure { kind, vertices, apex: Some(apex) })
            }
            4 => {
                let a = vertices.iter().next()?;
                let b = vertices.iter().find(|&x| x != a && x != self.antipode(a))?;
                let expected: VertexSet =
                    [a, self.antipode(a), b, self.antipode(b)].into_iter().collect();
                (expected == vertices).then_some(GoldenFigure {
                    kind: FigureKind::Rectangle,
                    vertices,
                    apex: None,
                })
            }
            _ => None,
        }
    }

    /// Every golden triangle, gnomon and rectangle, in ascending vertex-set
    /// order within each kind.
    pub fn golden_figures(&self) -> &FigureCatalog {
        &self.catalog
    }

    fn enumerate_golden_figures(&self) -> FigureCatalog {
        let mut catalog = FigureCatalog::default();
        for bits in 0u16..(1 << VERTEX_COUNT) {
            let set = VertexSet(bits);
            if !(3..=4).contains(&set.len()) {
                continue;
            }
            if let Some(figure) = self.golden_figure(set) {
                match figure.kind {
                    FigureKind::Triangle => catalog.triangles.push(figure),
                    FigureKind::Gnomon => catalog.gnomons.push(figure),
                    FigureKind::Rectangle => catalog.rectangles.push(figure),
                }
            }
        }
        for list in [&mut catalog.triangles, &mut catalog.gnomons, &mut catalog.rectangles] {
            list.sort();
        }
        catalog
    }

    /// The five neighbors of `v` in cyclic order; consecutive entries are
    /// adjacent.
    pub fn link_pentagon(&self, v: VertexId) -> [VertexId; 5] {
        self.links[v.index()]
    }

    /// The vertex whose link pentagon contains every vertex of `figure`.
    pub fn pentagon_center(&self, figure: &GoldenFigure) -> Option<VertexId> {
        let mut centers = VertexId::all().filter(|&w| figure.vertices.is_subset(self.neighbors(w)));
        let first = centers.next();
        match centers.next() {
            None => first,
            Some(_) => None,
        }
    }

    fn edges_of_class(&self, set: VertexSet, class: DistanceClass) -> Vec<VertexSet> {
        set.pairs()
            .filter(|&(a, b)| self.class_of(a, b) == class)
            .map(|(a, b)| [a, b].into_iter().collect())
            .collect()
    }

    /// The two golden figures neighboring `figure` in the given mode.
    pub fn golden_neighborhood(
        &self,
        figure: &GoldenFigure,
        mode: NeighborhoodMode,
    ) -> Result<[GoldenFigure; 2]> {
        let own_kind = match figure.kind {
            FigureKind::Rectangle => return Err(Error::UnsupportedFigure),
            k => k,
        };
        let (target_kind, shared_class) = match mode {
            NeighborhoodMode::ApexShared => (
                own_kind,
                if own_kind == FigureKind::Triangle { DistanceClass::Long } else { DistanceClass::Short },
            ),
            NeighborhoodMode::SEdgePentagon => (own_kind.swapped(), DistanceClass::Short),
            NeighborhoodMode::LEdgePentagon => (own_kind.swapped(), DistanceClass::Long),
        };
        let own_edges = self.edges_of_class(figure.vertices, shared_class);
        let region = match mode {
            NeighborhoodMode::ApexShared => None,
            _ => Some(self.neighbors(self.pentagon_center(figure).ok_or(Error::UnsupportedFigure)?)),
        };

        let found: Vec<GoldenFigure> = self
            .catalog
            .of_kind(target_kind)
            .iter()
            .filter(|other| other.vertices != figure.vertices)
            .filter(|other| match region {
                None => other.apex == figure.apex,
                Some(pentagon) => other.vertices.is_subset(pentagon),
            })
            .filter(|other| {
                self.edges_of_class(other.vertices, shared_class)
                    .iter()
                    .any(|e| own_edges.contains(e))
            })
            .copied()
            .collect();
        <[GoldenFigure; 2]>::try_from(found).map_err(|v| Error::NeighborhoodSize(v.len()))
    }

    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| self.is_adjacent(perm.apply(u), perm.apply(v)))
    }

    /// Whether an automorphism preserves the orientation of the faces.
    pub fn is_proper(&self, perm: &Permutation) -> bool {
        let [a, b, c] = self.faces[0];
        let image = normalize_face([perm.apply(a), perm.apply(b), perm.apply(c)]);
        self.faces.contains(&image)
    }

    /// All 120 adjacency-preserving permutations, sorted by image list.
    ///
    /// An automorphism is fixed by where it sends vertex 0, where it sends
    /// the first neighbor of 0, and whether it keeps or reverses the
    /// rotational order of links; the rest follows by walking the links.
    pub fn symmetry_group(&self) -> Vec<SymmetryOperation> {
        let mut out = BTreeSet::new();
        let base = VertexId(0);
        let base_link = self.link_pentagon(base);
        for target in VertexId::all() {
            let target_link = self.link_pentagon(target);
            for offset in 0..5 {
                for reverse in [false, true] {
                    let mut images: [Option<VertexId>; VERTEX_COUNT] = [None; VERTEX_COUNT];
                    images[0] = Some(target);
                    for (i, &n) in base_link.iter().enumerate() {
                        images[n.index()] = Some(target_link[step(offset, i, reverse)]);
                    }
                    if let Some(perm) = self.extend(images, reverse) {
                        let proper_rotation = self.is_proper(&perm);
                        out.insert(SymmetryOperation { permutation: perm, proper_rotation });
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    fn extend(&self, mut images: [Option<VertexId>; VERTEX_COUNT], reverse: bool) -> Option<Permutation> {
        let mut queue: VecDeque<VertexId> = self.link_pentagon(VertexId(0)).into_iter().collect();
        while let Some(v) = queue.pop_front() {
            let image = images[v.index()]?;
            let link = self.link_pentagon(v);
            let image_link = self.link_pentagon(image);
            let (anchor_pos, anchor) = link
                .iter()
                .enumerate()
                .find_map(|(i, n)| images[n.index()].map(|img| (i, img)))?;
            let anchor_target = image_link.iter().position(|&x| x == anchor)?;
            for k in 0..5 {
                let n = link[(anchor_pos + k) % 5];
                let mapped = image_link[step(anchor_target, k, reverse)];
                match images[n.index()] {
                    Some(existing) if existing != mapped => return None,
                    Some(_) => {}
                    None => {
                        images[n.index()] = Some(mapped);
                        queue.push_back(n);
                    }
                }
            }
        }
        let mut resolved = [VertexId(0); VERTEX_COUNT];
        for (slot, img) in resolved.iter_mut().zip(images) {
            *slot = img?;
        }
        let perm = Permutation::from_images(resolved)?;
        self.is_automorphism(&perm).then_some(perm)
    }
}

fn step(start: usize, k: usize, reverse: bool) -> usize {
    if reverse {
        (start + 4 * k) % 5
    } else {
        (start + k) % 5
    }
}

fn normalize_face(face: [VertexId; 3]) -> [VertexId; 3] {
    let min = (0..3).min_by_key(|&i| face[i]).unwrap_or(0);
    [face[min], face[(min + 1) % 3], face[(min + 2) % 3]]
}

/// Orients the 20 faces consistently, starting from `(0, 1, 2)`.
fn orient_faces(adjacency: &[u16; VERTEX_COUNT]) -> Vec<[VertexId; 3]> {
    let adj = |a: usize, b: usize| adjacency[a] & (1 << b) != 0;
    let mut unoriented = Vec::new();
    for a in 0..VERTEX_COUNT {
        for b in a + 1..VERTEX_COUNT {
            for c in b + 1..VERTEX_COUNT {
                if adj(a, b) && adj(b, c) && adj(a, c) {
                    unoriented.push([a, b, c]);
                }
            }
        }
    }
    let mut oriented: Vec<Option<[usize; 3]>> = vec![None; unoriented.len()];
    let start = unoriented.iter().position(|f| *f == [0, 1, 2]).expect("0-1-2 is a face");
    oriented[start] = Some([0, 1, 2]);
    let mut queue = VecDeque::from([start]);
    while let Some(fi) = queue.pop_front() {
        let f = oriented[fi].expect("queued faces are oriented");
        for e in 0..3 {
            let (x, y) = (f[e], f[(e + 1) % 3]);
            for (gi, g) in unoriented.iter().enumerate() {
                if oriented[gi].is_some() || !g.contains(&x) || !g.contains(&y) {
                    continue;
                }
                let z = g.iter().copied().find(|&w| w != x && w != y).expect("third vertex");
                // the neighbor traverses the shared edge the other way
                oriented[gi] = Some([y, x, z]);
                queue.push_back(gi);
            }
        }
    }
    let mut faces: Vec<[VertexId; 3]> = oriented
        .into_iter()
        .map(|f| {
            let f = f.expect("icosahedron faces are connected");
            normalize_face([VertexId(f[0] as u8), VertexId(f[1] as u8), VertexId(f[2] as u8)])
        })
        .collect();
    faces.sort();
    faces
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FigureCatalog {
    pub triangles: Vec<GoldenFigure>,
    pub gnomons: Vec<GoldenFigure>,
    pub rectangles: Vec<GoldenFigure>,
}

impl FigureCatalog {
    pub fn of_kind(&self, kind: FigureKind) -> &[GoldenFigure] {
        match kind {
            FigureKind::Triangle => &self.triangles,
            FigureKind::Gnomon => &self.gnomons,
            FigureKind::Rectangle => &self.rectangles,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &GoldenFigure> {
        self.triangles.iter().chain(&self.gnomons).chain(&self.rectangles)
    }

    pub fn len(&self) -> usize {
        self.triangles.len() + self.gnomons.len() + self.rectangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
