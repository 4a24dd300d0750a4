//! Pitch-class-to-vertex assignments and the four exceptional musical
//! icosahedra.
//!
//! An assignment places the twelve pitch classes on the twelve vertices.
//! The exceptional ones are recovered by search: transposition by a whole
//! tone must act as an icosahedral symmetry, and every major and minor triad
//! must land on a golden triangle or gnomon. Survivors are grouped by the
//! full symmetry group and labeled from fixed chord anchors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{golden_decompositions, Harmony};
use crate::error::{Error, Result};
use crate::icosahedron::{
    FigureKind, GoldenFigure, Permutation, SymmetryOperation, Topology, VertexId, VertexSet,
    VERTEX_COUNT,
};
use crate::pitch::{pcs, PcSet, PitchClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExceptionalType {
    T1,
    T2,
    T3,
    T4,
}

impl ExceptionalType {
    pub const ALL: [ExceptionalType; 4] =
        [ExceptionalType::T1, ExceptionalType::T2, ExceptionalType::T3, ExceptionalType::T4];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// The type whose triangles and gnomons are this type's gnomons and
    /// triangles (1* with 4*, 2* with 3*).
    pub fn dual(self) -> ExceptionalType {
        match self {
            ExceptionalType::T1 => ExceptionalType::T4,
            ExceptionalType::T2 => ExceptionalType::T3,
            ExceptionalType::T3 => ExceptionalType::T2,
            ExceptionalType::T4 => ExceptionalType::T1,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ExceptionalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*", self.number())
    }
}

impl FromStr for ExceptionalType {
    type Err = Error;

    /// Accepts `1`, `1*`, `T1` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['T', 't']).trim_end_matches('*');
        match t {
            "1" => Ok(ExceptionalType::T1),
            "2" => Ok(ExceptionalType::T2),
            "3" => Ok(ExceptionalType::T3),
            "4" => Ok(ExceptionalType::T4),
            _ => Err(Error::Parse { line: 0, message: format!("unknown type `{s}`") }),
        }
    }
}

/// A bijection from pitch classes to vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MusicalIcosahedron {
    to_vertex: [VertexId; VERTEX_COUNT],
    from_vertex: [PitchClass; VERTEX_COUNT],
}

impl MusicalIcosahedron {
    /// `to_vertex[pc]` is the vertex carrying pitch class `pc`.
    pub fn new(to_vertex: [VertexId; VERTEX_COUNT]) -> Result<MusicalIcosahedron> {
        let mut from_vertex = [PitchClass::C; VERTEX_COUNT];
        let mut seen = VertexSet::EMPTY;
        for (pc, &v) in to_vertex.iter().enumerate() {
            if !seen.insert(v) {
                return Err(Error::NotBijective);
            }
            from_vertex[v.index()] = PitchClass::new(pc as i32);
        }
        Ok(MusicalIcosahedron { to_vertex, from_vertex })
    }

    pub fn vertex(&self, pc: PitchClass) -> VertexId {
        self.to_vertex[pc.index()]
    }

    pub fn pitch_class(&self, v: VertexId) -> PitchClass {
        self.from_vertex[v.index()]
    }

    pub fn to_vertex(&self) -> &[VertexId; VERTEX_COUNT] {
        &self.to_vertex
    }

    pub fn vertices_of(&self, set: PcSet) -> VertexSet {
        set.iter().map(|pc| self.vertex(pc)).collect()
    }

    pub fn pitch_classes_of(&self, set: VertexSet) -> PcSet {
        set.iter().map(|v| self.pitch_class(v)).collect()
    }

    /// The vertex permutation that transposition by `interval` induces:
    /// `v ↦ to_vertex(from_vertex(v) + interval)`.
    pub fn induced_permutation(&self, interval: i32) -> Permutation {
        let mut images = [VertexId::new(0).expect("vertex 0"); VERTEX_COUNT];
        for v in VertexId::all() {
            images[v.index()] = self.vertex(self.pitch_class(v).transpose(interval));
        }
        Permutation::from_images(images).expect("conjugate of a bijection")
    }

    /// Whether raising every tone by two semitones is an icosahedral
    /// symmetry.
    pub fn has_hexagon_symmetry(&self, topology: &Topology) -> bool {
        topology.is_automorphism(&self.induced_permutation(2))
    }

    /// Whether every major and minor triad is a golden triangle or gnomon.
    pub fn is_golden_self_dual(&self, topology: &Topology) -> bool {
        (0..12).all(|root| {
            [pcs(&[root, root + 4, root + 7]), pcs(&[root, root + 3, root + 7])]
                .into_iter()
                .all(|triad| {
                    matches!(
                        self.figure(topology, triad).map(|f| f.kind),
                        Some(FigureKind::Triangle | FigureKind::Gnomon)
                    )
                })
        })
    }

    pub fn figure(&self, topology: &Topology, set: PcSet) -> Option<GoldenFigure> {
        topology.golden_figure(self.vertices_of(set))
    }

    /// The assignment `g ∘ to_vertex`.
    pub fn moved_by(&self, g: &Permutation) -> MusicalIcosahedron {
        let mut to_vertex = self.to_vertex;
        for slot in to_vertex.iter_mut() {
            *slot = g.apply(*slot);
        }
        MusicalIcosahedron::new(to_vertex).expect("permuted bijection")
    }

    pub fn golden_structure(&self, topology: &Topology) -> GoldenStructure {
        let catalog = topology.golden_figures();
        let lift = |figs: &[GoldenFigure]| {
            let mut out: Vec<PcSet> = figs.iter().map(|f| self.pitch_classes_of(f.vertices)).collect();
            out.sort();
            out
        };
        GoldenStructure {
            triangles: lift(&catalog.triangles),
            gnomons: lift(&catalog.gnomons),
            rectangles: lift(&catalog.rectangles),
        }
    }
}

/// Which pitch-class sets are golden triangles, gnomons and rectangles on
/// one assignment. Independent of the representative within a symmetry
/// class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoldenStructure {
    triangles: Vec<PcSet>,
    gnomons: Vec<PcSet>,
    rectangles: Vec<PcSet>,
}

impl GoldenStructure {
    pub fn from_sets(mut triangles: Vec<PcSet>, mut gnomons: Vec<PcSet>, mut rectangles: Vec<PcSet>) -> Self {
        triangles.sort();
        gnomons.sort();
        rectangles.sort();
        GoldenStructure { triangles, gnomons, rectangles }
    }

    pub fn triangles(&self) -> &[PcSet] {
        &self.triangles
    }

    pub fn gnomons(&self) -> &[PcSet] {
        &self.gnomons
    }

    pub fn rectangles(&self) -> &[PcSet] {
        &self.rectangles
    }

    pub fn of_kind(&self, kind: FigureKind) -> &[PcSet] {
        match kind {
            FigureKind::Triangle => &self.triangles,
            FigureKind::Gnomon => &self.gnomons,
            FigureKind::Rectangle => &self.rectangles,
        }
    }

    /// All figures with their kinds, triangles first.
    pub fn figures(&self) -> impl Iterator<Item = (FigureKind, PcSet)> + '_ {
        [FigureKind::Triangle, FigureKind::Gnomon, FigureKind::Rectangle]
            .into_iter()
            .flat_map(move |k| self.of_kind(k).iter().map(move |&s| (k, s)))
    }

    pub fn kind_of(&self, set: PcSet) -> Option<FigureKind> {
        [FigureKind::Triangle, FigureKind::Gnomon, FigureKind::Rectangle]
            .into_iter()
            .find(|&k| self.of_kind(k).binary_search(&set).is_ok())
    }

    /// The figure kind of a 3- or 4-tone set.
    pub fn chord_figure_kind(&self, set: PcSet) -> Result<Option<FigureKind>> {
        match set.len() {
            3 | 4 => Ok(self.kind_of(set)),
            got => Err(Error::Arity { expected: "3 or 4", got }),
        }
    }

    /// Triangles and gnomons exchanged.
    pub fn swapped(&self) -> GoldenStructure {
        GoldenStructure {
            triangles: self.gnomons.clone(),
            gnomons: self.triangles.clone(),
            rectangles: self.rectangles.clone(),
        }
    }

    pub fn mapped(&self, f: impl Fn(PitchClass) -> PitchClass) -> GoldenStructure {
        let m = |sets: &[PcSet]| sets.iter().map(|s| s.map(&f)).collect();
        GoldenStructure::from_sets(m(&self.triangles), m(&self.gnomons), m(&self.rectangles))
    }

    pub fn transposed(&self, interval: i32) -> GoldenStructure {
        self.mapped(|pc| pc.transpose(interval))
    }

    /// Canonical JSON: sorted arrays of pitch-class integers.
    pub fn to_json(&self, ty: Option<ExceptionalType>) -> Value {
        let mut doc = json!({
            "triangles": self.triangles,
            "gnomons": self.gnomons,
            "rectangles": self.rectangles,
        });
        if let Some(ty) = ty {
            doc["type"] = json!(ty.to_string());
        }
        doc
    }
}

/// One symmetry class of exceptional assignments.
#[derive(Clone, Debug)]
pub struct ExceptionalClass {
    /// First member in candidate order.
    pub representative: MusicalIcosahedron,
    pub members: usize,
    /// Number of classes this one splits into under proper rotations only.
    pub rotation_classes: usize,
    pub structure: GoldenStructure,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub candidates: usize,
    pub hexagon_symmetric: usize,
    pub self_dual: usize,
    pub classes: Vec<ExceptionalClass>,
}

/// Enumerates every assignment in which whole-tone transposition is an
/// order-6 symmetry with two 6-cycles (even pitch classes along one cycle,
/// odd along the other), keeps the golden self-dual ones and groups them by
/// the full symmetry group.
pub fn search_exceptional(topology: &Topology, group: &[SymmetryOperation]) -> SearchOutcome {
    let mut candidates = Vec::new();
    for op in group {
        let cycles = op.permutation.cycles();
        if cycles.len() != 2 || cycles.iter().any(|c| c.len() != 6) {
            continue;
        }
        for (even, odd) in [(&cycles[0], &cycles[1]), (&cycles[1], &cycles[0])] {
            for even_start in 0..6 {
                for odd_start in 0..6 {
                    let mut to_vertex = [VertexId::new(0).expect("vertex 0"); VERTEX_COUNT];
                    for i in 0..6 {
                        to_vertex[2 * i] = even[(even_start + i) % 6];
                        to_vertex[2 * i + 1] = odd[(odd_start + i) % 6];
                    }
                    candidates.push(MusicalIcosahedron::new(to_vertex).expect("cycles partition the vertices"));
                }
            }
        }
    }

    let hexagon: Vec<MusicalIcosahedron> =
        candidates.iter().copied().filter(|a| a.has_hexagon_symmetry(topology)).collect();
    let survivors: Vec<MusicalIcosahedron> =
        hexagon.iter().copied().filter(|a| a.is_golden_self_dual(topology)).collect();

    let orbit_key = |a: &MusicalIcosahedron, proper_only: bool| {
        group
            .iter()
            .filter(|g| !proper_only || g.proper_rotation)
            .map(|g| *a.moved_by(&g.permutation).to_vertex())
            .min()
            .expect("group is non-empty")
    };

    // key -> (representative, members, rotation keys)
    let mut grouped: BTreeMap<[VertexId; VERTEX_COUNT], (MusicalIcosahedron, usize, Vec<[VertexId; VERTEX_COUNT]>)> =
        BTreeMap::new();
    let mut order = Vec::new();
    for a in &survivors {
        let key = orbit_key(a, false);
        let entry = grouped.entry(key).or_insert_with(|| {
            order.push(key);
            (*a, 0, Vec::new())
        });
        entry.1 += 1;
        let rot = orbit_key(a, true);
        if !entry.2.contains(&rot) {
            entry.2.push(rot);
        }
    }

    let classes = order
        .into_iter()
        .map(|key| {
            let (representative, members, rotations) = &grouped[&key];
            ExceptionalClass {
                representative: *representative,
                members: *members,
                rotation_classes: rotations.len(),
                structure: representative.golden_structure(topology),
            }
        })
        .collect();

    SearchOutcome {
        candidates: candidates.len(),
        hexagon_symmetric: hexagon.len(),
        self_dual: survivors.len(),
        classes,
    }
}

/// One labeled exceptional musical icosahedron.
#[derive(Clone, Debug)]
pub struct ExceptionalIcosahedron {
    pub ty: ExceptionalType,
    pub assignment: MusicalIcosahedron,
    pub structure: GoldenStructure,
}

#[derive(Clone, Debug)]
pub struct TypeTable {
    pub types: [ExceptionalIcosahedron; 4],
    /// Classes that matched no label. Empty unless the search changes.
    pub surplus: Vec<ExceptionalClass>,
}

/// Names the searched classes.
///
/// 1* and 2* are the two classes where C major is a golden triangle, C minor
/// a gnomon, C♯ major a gnomon and C♯ minor a triangle; 1* is the one where
/// the dominant seventh is golden singular. 4* and 3* are 1* and 2* with
/// triangles and gnomons exchanged. The result is then checked against the
/// seventh-chord decomposition counts.
pub fn label_types(classes: &[ExceptionalClass]) -> Result<TypeTable> {
    let anchors = [
        (pcs(&[0, 4, 7]), FigureKind::Triangle),
        (pcs(&[1, 5, 8]), FigureKind::Gnomon),
        (pcs(&[0, 3, 7]), FigureKind::Gnomon),
        (pcs(&[1, 4, 8]), FigureKind::Triangle),
    ];
    let dominant = Harmony::new(pcs(&[0, 4, 7, 10]))?;
    let half_diminished = Harmony::new(pcs(&[0, 3, 6, 10]))?;

    let anchored: Vec<usize> = (0..classes.len())
        .filter(|&i| anchors.iter().all(|&(s, k)| classes[i].structure.kind_of(s) == Some(k)))
        .collect();
    if anchored.len() != 2 {
        return Err(Error::Labeling(format!(
            "expected 2 classes matching the C/C# triad anchors, found {}",
            anchored.len()
        )));
    }
    let singular = |i: usize, h: &Harmony| golden_decompositions(&classes[i].structure, h).is_empty();
    let pick = |h: &Harmony, what: &str| -> Result<usize> {
        let hits: Vec<usize> = anchored.iter().copied().filter(|&i| singular(i, h)).collect();
        match hits.as_slice() {
            [one] => Ok(*one),
            _ => Err(Error::Labeling(format!(
                "expected exactly one anchored class with the {what} singular, found {}",
                hits.len()
            ))),
        }
    };
    let t1 = pick(&dominant, "dominant seventh")?;
    let t2 = pick(&half_diminished, "half-diminished seventh")?;
    if t1 == t2 {
        return Err(Error::Labeling("one class is singular on both seventh chords".into()));
    }
    let find_swap = |i: usize, name: &str| -> Result<usize> {
        let want = classes[i].structure.swapped();
        let hits: Vec<usize> = (0..classes.len()).filter(|&j| classes[j].structure == want).collect();
        match hits.as_slice() {
            [one] => Ok(*one),
            _ => Err(Error::Labeling(format!("{name}: {} classes equal the swapped structure", hits.len()))),
        }
    };
    let t4 = find_swap(t1, "type 4*")?;
    let t3 = find_swap(t2, "type 3*")?;

    let chosen = [t1, t2, t3, t4];
    let make = |ty: ExceptionalType, i: usize| ExceptionalIcosahedron {
        ty,
        assignment: classes[i].representative,
        structure: classes[i].structure.clone(),
    };
    let table = TypeTable {
        types: [
            make(ExceptionalType::T1, t1),
            make(ExceptionalType::T2, t2),
            make(ExceptionalType::T3, t3),
            make(ExceptionalType::T4, t4),
        ],
        surplus: (0..classes.len())
            .filter(|i| !chosen.contains(i))
            .map(|i| classes[i].clone())
            .collect(),
    };
    check_seventh_oracle(&table)?;
    Ok(table)
}

/// Decomposition counts of the C-rooted tertian sevenths that pin the
/// labels: (chord, count on 1*/4*, count on 2*/3*). Zero means singular.
pub const SEVENTH_LABEL_ORACLE: [(&str, [i32; 4], usize, usize); 5] = [
    ("dominant seventh", [0, 4, 7, 10], 0, 1),
    ("diminished seventh", [0, 3, 6, 9], 1, 1),
    ("half-diminished seventh", [0, 3, 6, 10], 1, 0),
    ("minor major seventh", [0, 3, 7, 11], 1, 3),
    ("augmented major seventh", [0, 4, 8, 11], 3, 1),
];

fn check_seventh_oracle(table: &TypeTable) -> Result<()> {
    for entry in &table.types {
        for (name, tones, first, second) in SEVENTH_LABEL_ORACLE {
            let expected = match entry.ty {
                ExceptionalType::T1 | ExceptionalType::T4 => first,
                ExceptionalType::T2 | ExceptionalType::T3 => second,
            };
            let got = golden_decompositions(&entry.structure, &Harmony::new(pcs(&tones))?).len();
            if got != expected {
                return Err(Error::Labeling(format!(
                    "type {}: {name} has {got} golden decompositions, expected {expected}",
                    entry.ty
                )));
            }
        }
    }
    Ok(())
}

/// The derived model: topology, symmetry group and the four labeled types.
#[derive(Clone, Debug)]
pub struct Atlas {
    topology: Topology,
    group: Vec<SymmetryOperation>,
    table: TypeTable,
    search: SearchOutcome,
}

impl Atlas {
    pub fn derive() -> Result<Atlas> {
        let topology = Topology::new();
        let group = topology.symmetry_group();
        let search = search_exceptional(&topology, &group);
        let table = label_types(&search.classes)?;
        Ok(Atlas { topology, group, table, search })
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn group(&self) -> &[SymmetryOperation] {
        &self.group
    }

    pub fn search(&self) -> &SearchOutcome {
        &self.search
    }

    pub fn table(&self) -> &TypeTable {
        &self.table
    }

    pub fn get(&self, ty: ExceptionalType) -> &ExceptionalIcosahedron {
        &self.table.types[ty.index()]
    }

    pub fn structure(&self, ty: ExceptionalType) -> &GoldenStructure {
        &self.get(ty).structure
    }

    pub fn to_json(&self) -> Value {
        let types: Vec<Value> = self
            .table
            .types
            .iter()
            .map(|t| {
                let mut doc = t.structure.to_json(Some(t.ty));
                doc["assignment"] = json!(t.assignment.to_vertex());
                doc
            })
            .collect();
        json!({
            "search": {
                "candidates": self.search.candidates,
                "hexagon_symmetric": self.search.hexagon_symmetric,
                "self_dual": self.search.self_dual,
                "classes": self.search.classes.len(),
                "rotation_classes": self.search.classes.iter().map(|c| c.rotation_classes).sum::<usize>(),
            },
            "surplus": self.table.surplus.len(),
            "types": types,
        })
    }
}

/// Exchanges each pitch class with the one a tritone away.
pub fn tritone_relabel(pc: PitchClass) -> PitchClass {
    pc.transpose(6)
}

/// Adds `interval` to every member of `set`.
pub fn transpose_harmony(set: PcSet, interval: i32) -> PcSet {
    set.transpose(interval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn atlas() -> &'static Atlas {
        static ATLAS: OnceLock<Atlas> = OnceLock::new();
        ATLAS.get_or_init(|| Atlas::derive().expect("derivation succeeds"))
    }

    #[test]
    fn induced_permutation_identities() {
        let a = atlas().get(ExceptionalType::T1).assignment;
        assert!(a.induced_permutation(0).is_identity());
        assert!(a.induced_permutation(12).is_identity());
        let step = a.induced_permutation(2);
        let mut p = Permutation::identity();
        for _ in 0..6 {
            p = step.compose(&p);
        }
        assert!(p.is_identity());
        assert_eq!(step.order(), 6);
    }

    #[test]
    fn chromatic_order_on_a_hamiltonian_path_lacks_hexagon_symmetry() {
        let topo = atlas().topology();
        // 0 - ring - ring - 11 walk that visits each vertex once
        let path = [0usize, 1, 6, 2, 7, 3, 8, 4, 9, 5, 10, 11];
        for w in path.windows(2) {
            assert!(topo.is_adjacent(VertexId::new(w[0]).unwrap(), VertexId::new(w[1]).unwrap()));
        }
        let to_vertex = path.map(|i| VertexId::new(i).unwrap());
        let a = MusicalIcosahedron::new(to_vertex).unwrap();
        assert!(!a.has_hexagon_symmetry(topo));
        assert!(!a.is_golden_self_dual(topo));
    }

    #[test]
    fn hexagon_symmetry_survives_symmetry_moves() {
        let at = atlas();
        let a = at.get(ExceptionalType::T2).assignment;
        for g in at.group() {
            let moved = a.moved_by(&g.permutation);
            assert!(moved.has_hexagon_symmetry(at.topology()));
            assert!(moved.is_golden_self_dual(at.topology()));
            assert_eq!(moved.golden_structure(at.topology()), at.get(ExceptionalType::T2).structure);
        }
    }

    #[test]
    fn hexagon_symmetry_matches_group_membership() {
        let at = atlas();
        let a = at.get(ExceptionalType::T1).assignment;
        let perm = a.induced_permutation(2);
        assert!(at.group().iter().any(|g| g.permutation == perm));
        assert!(!at.group().iter().any(|g| g.permutation == a.induced_permutation(1)));
    }

    #[test]
    fn face_placed_major_triad_is_not_self_dual() {
        let topo = atlas().topology();
        // C, E, G on the face 0-1-2, everything else in order
        let order = [0usize, 3, 4, 5, 1, 6, 7, 2, 8, 9, 10, 11];
        let a = MusicalIcosahedron::new(order.map(|i| VertexId::new(i).unwrap())).unwrap();
        assert_eq!(a.figure(topo, pcs(&[0, 4, 7])), None);
        assert!(!a.is_golden_self_dual(topo));
    }

    #[test]
    fn search_finds_four_classes() {
        let s = atlas().search();
        assert_eq!(s.candidates, 1440);
        assert_eq!(s.hexagon_symmetric, 1440);
        assert_eq!(s.self_dual, 480);
        assert_eq!(s.classes.len(), 4);
        assert!(s.classes.iter().all(|c| c.members == 120 && c.rotation_classes == 2));
        assert!(atlas().table().surplus.is_empty());
    }

    #[test]
    fn classes_pair_under_swap() {
        let s = atlas().search();
        for c in &s.classes {
            let swapped = c.structure.swapped();
            let partner: Vec<_> = s.classes.iter().filter(|d| d.structure == swapped).collect();
            assert_eq!(partner.len(), 1);
            assert_ne!(partner[0].structure, c.structure);
        }
    }

    #[test]
    fn anchors_per_type() {
        let at = atlas();
        let ceg = pcs(&[0, 4, 7]);
        let cebg = pcs(&[0, 3, 7]);
        assert_eq!(at.structure(ExceptionalType::T1).kind_of(ceg), Some(FigureKind::Triangle));
        assert_eq!(at.structure(ExceptionalType::T2).kind_of(ceg), Some(FigureKind::Triangle));
        assert_eq!(at.structure(ExceptionalType::T2).kind_of(cebg), Some(FigureKind::Gnomon));
        assert_eq!(at.structure(ExceptionalType::T4).kind_of(ceg), Some(FigureKind::Gnomon));
        assert_eq!(at.structure(ExceptionalType::T3).kind_of(ceg), Some(FigureKind::Gnomon));
        assert_eq!(at.structure(ExceptionalType::T4), &at.structure(ExceptionalType::T1).swapped());
        assert_eq!(at.structure(ExceptionalType::T3), &at.structure(ExceptionalType::T2).swapped());
    }

    #[test]
    fn tritone_relabeling_fixes_every_structure() {
        for ty in ExceptionalType::ALL {
            let s = atlas().structure(ty);
            assert_eq!(&s.mapped(tritone_relabel), s);
        }
    }

    #[test]
    fn chord_figure_kind_lookup() {
        let at = atlas();
        let t1 = at.structure(ExceptionalType::T1);
        assert_eq!(t1.chord_figure_kind(pcs(&[0, 4, 7])), Ok(Some(FigureKind::Triangle)));
        assert_eq!(t1.chord_figure_kind(pcs(&[0, 3, 6, 9])), Ok(Some(FigureKind::Rectangle)));
        for ty in ExceptionalType::ALL {
            assert_eq!(at.structure(ty).chord_figure_kind(pcs(&[0, 4, 8])), Ok(None));
        }
        assert_eq!(
            t1.chord_figure_kind(pcs(&[0, 4])),
            Err(Error::Arity { expected: "3 or 4", got: 2 })
        );
    }

    #[test]
    fn structure_sizes() {
        for ty in ExceptionalType::ALL {
            let s = atlas().structure(ty);
            assert_eq!((s.triangles().len(), s.gnomons().len(), s.rectangles().len()), (60, 60, 15));
            assert!(s.triangles().iter().all(|t| s.gnomons().binary_search(t).is_err()));
        }
    }

    #[test]
    fn type_names_parse() {
        assert_eq!("1".parse::<ExceptionalType>().unwrap(), ExceptionalType::T1);
        assert_eq!("3*".parse::<ExceptionalType>().unwrap(), ExceptionalType::T3);
        assert_eq!("T4".parse::<ExceptionalType>().unwrap(), ExceptionalType::T4);
        assert!("5".parse::<ExceptionalType>().is_err());
        assert_eq!(ExceptionalType::T2.to_string(), "2*");
    }

    #[test]
    fn bijection_enforced() {
        let mut to_vertex = [VertexId::new(0).unwrap(); 12];
        for (i, slot) in to_vertex.iter_mut().enumerate() {
            *slot = VertexId::new(i).unwrap();
        }
        to_vertex[3] = VertexId::new(4).unwrap();
        assert_eq!(MusicalIcosahedron::new(to_vertex), Err(Error::NotBijective));
    }

    #[test]
    fn structure_json_is_sorted_integer_arrays() {
        let doc = atlas().structure(ExceptionalType::T1).to_json(Some(ExceptionalType::T1));
        assert_eq!(doc["type"], "1*");
        assert_eq!(doc["triangles"].as_array().unwrap().len(), 60);
        assert_eq!(doc["rectangles"][0], json!([0, 1, 6, 7]));
    }
}
