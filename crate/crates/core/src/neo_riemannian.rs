//! Triad transformations and how golden neighborhoods realize them.

use std::fmt;
use std::str::FromStr;

use petgraph::algo::connected_components;
use petgraph::graph::UnGraph;
use serde::Serialize;
use serde_json::{json, Value};

use crate::assignment::{Atlas, ExceptionalType};
use crate::error::{Error, Result};
use crate::icosahedron::{FigureKind, NeighborhoodMode};
use crate::pitch::{PcSet, PitchClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quality {
    Major,
    Minor,
}

/// A major or minor triad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triad {
    pub root: PitchClass,
    pub quality: Quality,
}

impl Triad {
    pub fn major(root: i32) -> Triad {
        Triad { root: PitchClass::new(root), quality: Quality::Major }
    }

    pub fn minor(root: i32) -> Triad {
        Triad { root: PitchClass::new(root), quality: Quality::Minor }
    }

    /// All 24 triads: the twelve majors, then the twelve minors.
    pub fn all() -> impl Iterator<Item = Triad> {
        (0..12).map(Triad::major).chain((0..12).map(Triad::minor))
    }

    pub fn pcs(self) -> PcSet {
        let third = match self.quality {
            Quality::Major => 4,
            Quality::Minor => 3,
        };
        [0, third, 7].into_iter().map(|i| self.root.transpose(i)).collect()
    }

    pub fn transpose(self, interval: i32) -> Triad {
        Triad { root: self.root.transpose(interval), quality: self.quality }
    }

    /// The major or minor triad with exactly these tones, if any.
    pub fn from_pcs(set: PcSet) -> Option<Triad> {
        set.iter()
            .flat_map(|pc| {
                let r = pc.value() as i32;
                [Triad::major(r), Triad::minor(r)]
            })
            .find(|t| t.pcs() == set)
    }

    fn index(self) -> usize {
        self.root.index() + 12 * (self.quality == Quality::Minor) as usize
    }
}

impl fmt::Display for Triad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.quality {
            Quality::Major => write!(f, "{} major", self.root),
            Quality::Minor => write!(f, "{} minor", self.root),
        }
    }
}

impl FromStr for Triad {
    type Err = Error;

    /// `C`, `Eb`, `F#m`, `C# minor`, `Bb major`.
    fn from_str(s: &str) -> Result<Triad> {
        let s = s.trim();
        let (name, quality) = if let Some(rest) = s.strip_suffix("minor") {
            (rest.trim(), Quality::Minor)
        } else if let Some(rest) = s.strip_suffix("major") {
            (rest.trim(), Quality::Major)
        } else if let Some(rest) = s.strip_suffix('m') {
            (rest, Quality::Minor)
        } else {
            (s, Quality::Major)
        };
        Ok(Triad { root: name.parse()?, quality })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Transform {
    P,
    R,
    L,
    D,
}

impl Transform {
    pub const ALL: [Transform; 4] = [Transform::P, Transform::R, Transform::L, Transform::D];
}

/// Applies a transformation.
///
/// D follows the source definition literally: X major goes to the X+5
/// minor triad and X minor to X+5 major. Unlike the usual dominant relation
/// it changes quality and is not an involution.
pub fn apply_transform(t: Triad, k: Transform) -> Triad {
    use Quality::*;
    let (shift, quality) = match (k, t.quality) {
        (Transform::P, Major) => (0, Minor),
        (Transform::P, Minor) => (0, Major),
        (Transform::R, Major) => (9, Minor),
        (Transform::R, Minor) => (3, Major),
        (Transform::L, Major) => (4, Minor),
        (Transform::L, Minor) => (8, Major),
        (Transform::D, Major) => (5, Minor),
        (Transform::D, Minor) => (5, Major),
    };
    Triad { root: t.root.transpose(shift), quality }
}

/// Which neighborhood of a triad's figure contains its P or R image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub ty: ExceptionalType,
    pub triad: Triad,
    pub transform: Transform,
    pub target: Triad,
    pub source_kind: FigureKind,
    pub target_kind: FigureKind,
    /// Every mode whose pair contains the target exactly once.
    pub modes: Vec<NeighborhoodMode>,
}

impl Realization {
    pub fn mode(&self) -> NeighborhoodMode {
        self.modes[0]
    }

    pub fn is_unique(&self) -> bool {
        self.modes.len() == 1
    }
}

/// Evaluates the three neighborhood modes of the triad's figure and reports
/// those whose two figures include the transformed triad exactly once.
pub fn realize_via_neighborhood(
    atlas: &Atlas,
    ty: ExceptionalType,
    triad: Triad,
    transform: Transform,
) -> Result<Realization> {
    if !matches!(transform, Transform::P | Transform::R) {
        return Err(Error::UnsupportedTransform(transform));
    }
    let failure = Error::Realization { ty, triad, transform };
    let topology = atlas.topology();
    let assignment = &atlas.get(ty).assignment;
    let target = apply_transform(triad, transform);

    let figure = assignment.figure(topology, triad.pcs()).ok_or_else(|| failure.clone())?;
    let target_figure = assignment.figure(topology, target.pcs()).ok_or_else(|| failure.clone())?;

    let mut modes = Vec::new();
    for mode in NeighborhoodMode::ALL {
        let pair = topology.golden_neighborhood(&figure, mode)?;
        let hits = pair
            .iter()
            .filter(|f| Triad::from_pcs(assignment.pitch_classes_of(f.vertices)) == Some(target))
            .count();
        if hits == 1 {
            modes.push(mode);
        }
    }
    if modes.is_empty() {
        return Err(failure);
    }
    Ok(Realization {
        ty,
        triad,
        transform,
        target,
        source_kind: figure.kind,
        target_kind: target_figure.kind,
        modes,
    })
}

/// Whether an order-3 rotation carries the P image of `triad` onto its L
/// image.
pub fn verify_l_via_rotation(atlas: &Atlas, ty: ExceptionalType, triad: Triad) -> bool {
    let assignment = &atlas.get(ty).assignment;
    let from = assignment.vertices_of(apply_transform(triad, Transform::P).pcs());
    let to = assignment.vertices_of(apply_transform(triad, Transform::L).pcs());
    atlas
        .group()
        .iter()
        .filter(|g| g.permutation.order() == 3)
        .any(|g| g.permutation.apply_set(from) == to)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReachabilityReport {
    pub ty: ExceptionalType,
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
}

impl ReachabilityReport {
    pub fn is_connected(&self) -> bool {
        self.components == 1
    }
}

/// Connects each triad to its neighborhood-realized P and R images and to
/// its whole-tone transposition (an icosahedral symmetry on every type),
/// then counts components.
pub fn triad_reachability(atlas: &Atlas, ty: ExceptionalType) -> Result<ReachabilityReport> {
    let mut graph: UnGraph<Triad, ()> = UnGraph::default();
    let nodes: Vec<_> = Triad::all().map(|t| graph.add_node(t)).collect();
    for t in Triad::all() {
        for k in [Transform::P, Transform::R] {
            let r = realize_via_neighborhood(atlas, ty, t, k)?;
            graph.update_edge(nodes[t.index()], nodes[r.target.index()], ());
        }
        graph.update_edge(nodes[t.index()], nodes[t.transpose(2).index()], ());
    }
    Ok(ReachabilityReport {
        ty,
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        components: connected_components(&graph),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModeRow {
    /// `even` or `odd` root.
    pub parity: &'static str,
    pub quality: Quality,
    pub transform: Transform,
    pub mode: NeighborhoodMode,
}

/// P/R realizing modes of one type, by root parity and quality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModeTable {
    pub ty: ExceptionalType,
    pub rows: Vec<ModeRow>,
    /// Whether every triad of a given parity and quality uses the same mode.
    pub parity_consistent: bool,
    /// Whether every realization was unique.
    pub unique: bool,
}

pub fn mode_table(atlas: &Atlas, ty: ExceptionalType) -> Result<ModeTable> {
    let mut rows = Vec::new();
    let mut parity_consistent = true;
    let mut unique = true;
    for (parity, start) in [("even", 0), ("odd", 1)] {
        for quality in [Quality::Major, Quality::Minor] {
            for transform in [Transform::P, Transform::R] {
                let mut seen = None;
                for root in (start..12).step_by(2) {
                    let r = realize_via_neighborhood(atlas, ty, Triad { root: PitchClass::new(root), quality }, transform)?;
                    unique &= r.is_unique();
                    match seen {
                        None => seen = Some(r.mode()),
                        Some(m) => parity_consistent &= m == r.mode(),
                    }
                }
                rows.push(ModeRow { parity, quality, transform, mode: seen.expect("six roots") });
            }
        }
    }
    Ok(ModeTable { ty, rows, parity_consistent, unique })
}

impl ModeTable {
    pub fn to_json(&self) -> Value {
        json!({
            "type": self.ty.to_string(),
            "parity_consistent": self.parity_consistent,
            "unique": self.unique,
            "rows": self.rows.iter().map(|r| json!({
                "parity": r.parity,
                "quality": r.quality,
                "transform": r.transform,
                "mode": r.mode.label(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("type {}\n{:<6} {:<6} {:<4} {}\n", self.ty, "root", "triad", "op", "mode");
        for r in &self.rows {
            let q = match r.quality {
                Quality::Major => "major",
                Quality::Minor => "minor",
            };
            out += &format!("{:<6} {:<6} {:<4} {}\n", r.parity, q, format!("{:?}", r.transform), r.mode.label());
        }
        out
    }
}
