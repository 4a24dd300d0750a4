//! Golden decompositions of harmonies.
//!
//! A golden decomposition of a harmony covers its tones with golden figures
//! drawn from the harmony itself, using as few figures as possible. Parts may
//! share tones. When several minimum covers exist, those using the most
//! golden rectangles are kept: a rectangle is one four-tone figure and is
//! preferred over spelling the same tones as triangles and gnomons. On three-
//! and four-tone harmonies this never changes the result.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::assignment::{Atlas, ExceptionalType, GoldenStructure};
use crate::error::{Error, Result};
use crate::icosahedron::FigureKind;
use crate::pitch::{pcs, PcSet, PitchClass};

/// A set of at least three pitch classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Harmony(PcSet);

impl Harmony {
    pub fn new(set: PcSet) -> Result<Harmony> {
        if set.len() < 3 {
            return Err(Error::Arity { expected: "at least 3", got: set.len() });
        }
        Ok(Harmony(set))
    }

    pub fn parse(text: &str) -> Result<Harmony> {
        Harmony::new(PcSet::parse_tones(text)?)
    }

    pub fn pcs(self) -> PcSet {
        self.0
    }

    pub fn transpose(self, interval: i32) -> Harmony {
        Harmony(self.0.transpose(interval))
    }
}

impl fmt::Display for Harmony {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A golden figure contained in a harmony. Ordered by pitch content first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GoldenBaseHarmony {
    pub pcs: PcSet,
    pub kind: FigureKind,
}

impl GoldenBaseHarmony {
    pub fn swapped(self) -> GoldenBaseHarmony {
        GoldenBaseHarmony { pcs: self.pcs, kind: self.kind.swapped() }
    }
}

impl fmt::Display for GoldenBaseHarmony {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.pcs, self.kind.abbreviation())
    }
}

/// An unordered set of parts, stored sorted. Decompositions compare part
/// by part in that order, which is the canonical enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Decomposition {
    parts: Vec<GoldenBaseHarmony>,
}

impl Decomposition {
    pub fn new(mut parts: Vec<GoldenBaseHarmony>) -> Decomposition {
        parts.sort();
        parts.dedup();
        Decomposition { parts }
    }

    pub fn parts(&self) -> &[GoldenBaseHarmony] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn union(&self) -> PcSet {
        self.parts.iter().fold(PcSet::EMPTY, |acc, p| acc.union(p.pcs))
    }

    pub fn shape(&self) -> CombinationShape {
        let count = |k| self.parts.iter().filter(|p| p.kind == k).count() as u8;
        CombinationShape {
            triangles: count(FigureKind::Triangle),
            gnomons: count(FigureKind::Gnomon),
            rectangles: count(FigureKind::Rectangle),
        }
    }

    /// Triangles and gnomons exchanged.
    pub fn swapped(&self) -> Decomposition {
        Decomposition::new(self.parts.iter().map(|p| p.swapped()).collect())
    }

    pub fn to_json(&self) -> Value {
        json!(self.parts.iter().map(|p| json!({"kind": p.kind, "pcs": p.pcs})).collect::<Vec<_>>())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// How many figures of each kind a decomposition uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CombinationShape {
    pub triangles: u8,
    pub gnomons: u8,
    pub rectangles: u8,
}

impl CombinationShape {
    pub fn total(self) -> u8 {
        self.triangles + self.gnomons + self.rectangles
    }

    fn kinds(self) -> u8 {
        [self.triangles, self.gnomons, self.rectangles].iter().filter(|&&c| c > 0).count() as u8
    }

    fn key(self) -> (u8, u8, u8, u8, u8) {
        (self.rectangles, self.total(), self.kinds(), self.gnomons, self.triangles)
    }

    /// `gt`, `gg2`, `gr&gt` and so on: rectangles first, then triangles,
    /// then gnomons, each with its count when above one.
    pub fn label(self) -> String {
        let parts: Vec<String> = [
            (FigureKind::Rectangle, self.rectangles),
            (FigureKind::Triangle, self.triangles),
            (FigureKind::Gnomon, self.gnomons),
        ]
        .into_iter()
        .filter(|&(_, c)| c > 0)
        .map(|(k, c)| if c == 1 { k.abbreviation().to_string() } else { format!("{}{c}", k.abbreviation()) })
        .collect();
        parts.join("&")
    }

    pub fn swapped(self) -> CombinationShape {
        CombinationShape { triangles: self.gnomons, gnomons: self.triangles, rectangles: self.rectangles }
    }
}

/// Canonical order: gt < gg < gt2 < gg2 < gt&gg < gr < gr&gt < gr&gg.
impl Ord for CombinationShape {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for CombinationShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CombinationShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for CombinationShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// Every figure of the structure whose tones lie inside the harmony, in
/// canonical order.
pub fn figures_within(structure: &GoldenStructure, h: &Harmony) -> Vec<GoldenBaseHarmony> {
    let mut out: Vec<GoldenBaseHarmony> = structure
        .figures()
        .filter(|(_, set)| set.is_subset(h.pcs()))
        .map(|(kind, pcs)| GoldenBaseHarmony { pcs, kind })
        .collect();
    out.sort();
    out
}

/// All covers of the harmony by contained figures with the fewest parts.
pub fn minimum_covers(structure: &GoldenStructure, h: &Harmony) -> Vec<Decomposition> {
    let figures = figures_within(structure, h);
    let reachable = figures.iter().fold(PcSet::EMPTY, |acc, f| acc.union(f.pcs));
    if reachable != h.pcs() {
        return Vec::new();
    }
    for depth in 1..=h.pcs().len() {
        let mut found = Vec::new();
        let mut chosen = Vec::new();
        search(&figures, h.pcs(), PcSet::EMPTY, depth, &mut chosen, &mut found);
        if !found.is_empty() {
            found.sort();
            found.dedup();
            return found;
        }
    }
    unreachable!("every tone lies in some figure, so singletons per tone cover")
}

/// Branches on the lowest uncovered tone; with the depth capped at the
/// minimum every minimum cover is reached.
fn search(
    figures: &[GoldenBaseHarmony],
    target: PcSet,
    covered: PcSet,
    depth: usize,
    chosen: &mut Vec<GoldenBaseHarmony>,
    found: &mut Vec<Decomposition>,
) {
    let missing = target.difference(covered);
    let Some(tone) = missing.iter().next() else {
        found.push(Decomposition::new(chosen.clone()));
        return;
    };
    if depth == 0 {
        return;
    }
    for f in figures.iter().filter(|f| f.pcs.contains(tone)) {
        chosen.push(*f);
        search(figures, target, covered.union(f.pcs), depth - 1, chosen, found);
        chosen.pop();
    }
}

/// Minimum covers using the largest number of golden rectangles, in
/// canonical order. Empty when the harmony is golden singular.
pub fn golden_decompositions(structure: &GoldenStructure, h: &Harmony) -> Vec<Decomposition> {
    let covers = minimum_covers(structure, h);
    let best = covers.iter().map(|d| d.shape().rectangles).max().unwrap_or(0);
    covers.into_iter().filter(|d| d.shape().rectangles == best).collect()
}

/// Convenience wrapper that validates the tone count.
pub fn decompose(structure: &GoldenStructure, set: PcSet) -> Result<Vec<Decomposition>> {
    Ok(golden_decompositions(structure, &Harmony::new(set)?))
}

/// True when some tone of the harmony lies in no figure inside it.
pub fn is_golden_singular(structure: &GoldenStructure, h: &Harmony) -> bool {
    let covered = structure
        .figures()
        .filter(|(_, s)| s.is_subset(h.pcs()))
        .fold(PcSet::EMPTY, |acc, (_, s)| acc.union(s));
    covered != h.pcs()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SeventhChord {
    Major,
    Minor,
    Dominant,
    Diminished,
    HalfDiminished,
    MinorMajor,
    AugmentedMajor,
}

impl SeventhChord {
    pub const ALL: [SeventhChord; 7] = [
        SeventhChord::Major,
        SeventhChord::Minor,
        SeventhChord::Dominant,
        SeventhChord::Diminished,
        SeventhChord::HalfDiminished,
        SeventhChord::MinorMajor,
        SeventhChord::AugmentedMajor,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            SeventhChord::Major => "maj7",
            SeventhChord::Minor => "min7",
            SeventhChord::Dominant => "dom7",
            SeventhChord::Diminished => "dim7",
            SeventhChord::HalfDiminished => "halfdim7",
            SeventhChord::MinorMajor => "minMaj7",
            SeventhChord::AugmentedMajor => "augMaj7",
        }
    }

    pub fn intervals(self) -> [i32; 4] {
        match self {
            SeventhChord::Major => [0, 4, 7, 11],
            SeventhChord::Minor => [0, 3, 7, 10],
            SeventhChord::Dominant => [0, 4, 7, 10],
            SeventhChord::Diminished => [0, 3, 6, 9],
            SeventhChord::HalfDiminished => [0, 3, 6, 10],
            SeventhChord::MinorMajor => [0, 3, 7, 11],
            SeventhChord::AugmentedMajor => [0, 4, 8, 11],
        }
    }

    pub fn on(self, root: PitchClass) -> Harmony {
        Harmony::new(pcs(&self.intervals()).transpose(root.value() as i32)).expect("four tones")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeventhRow {
    pub ty: ExceptionalType,
    pub chord: SeventhChord,
    pub decompositions: Vec<Decomposition>,
}

/// Decompositions of the seven C-rooted tertian sevenths on every type.
pub fn seventh_chord_table(atlas: &Atlas) -> Vec<SeventhRow> {
    ExceptionalType::ALL
        .into_iter()
        .flat_map(|ty| {
            SeventhChord::ALL.into_iter().map(move |chord| SeventhRow {
                ty,
                chord,
                decompositions: golden_decompositions(atlas.structure(ty), &chord.on(PitchClass::C)),
            })
        })
        .collect()
}

pub fn seventh_table_text(rows: &[SeventhRow]) -> String {
    let mut out = format!("{:<5} {:<9} {:>5}  decompositions\n", "type", "chord", "count");
    for r in rows {
        let detail = if r.decompositions.is_empty() {
            "golden singular".to_string()
        } else {
            r.decompositions.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")
        };
        out += &format!("{:<5} {:<9} {:>5}  {}\n", r.ty.to_string(), r.chord.symbol(), r.decompositions.len(), detail);
    }
    out
}

pub fn seventh_table_json(rows: &[SeventhRow]) -> Value {
    json!(rows
        .iter()
        .map(|r| json!({
            "type": r.ty.to_string(),
            "chord": r.chord.symbol(),
            "count": r.decompositions.len(),
            "singular": r.decompositions.is_empty(),
            "decompositions": r.decompositions.iter().map(Decomposition::to_json).collect::<Vec<_>>(),
        }))
        .collect::<Vec<_>>())
}

/// Every golden-singular `k`-subset of the twelve tones, in canonical order.
pub fn scan_k_subsets(structure: &GoldenStructure, k: usize) -> Result<Vec<PcSet>> {
    if !(3..=12).contains(&k) {
        return Err(Error::Arity { expected: "3 to 12", got: k });
    }
    Ok(PcSet::k_subsets(k)
        .into_iter()
        .filter(|&s| is_golden_singular(structure, &Harmony(s)))
        .collect())
}

/// C, F♯, B♭, E, A, D.
pub const MYSTIC_CHORD: [i32; 6] = [0, 6, 10, 4, 9, 2];

pub fn mystic_chord_analysis(atlas: &Atlas) -> Vec<(ExceptionalType, Vec<Decomposition>)> {
    let h = Harmony::new(pcs(&MYSTIC_CHORD)).expect("six tones");
    ExceptionalType::ALL
        .into_iter()
        .map(|ty| (ty, golden_decompositions(atlas.structure(ty), &h)))
        .collect()
}

/// Whether the ordered harmony `a` (read in `sa`) is a generalized
/// major-minor dual of `b` (read in `sb`).
///
/// The multisets must differ in exactly one tone, and every golden triangle
/// or gnomon formed by three positions of `a` must sit on the same three
/// positions of `b` as a figure of the opposite kind.
pub fn generalized_dual_check(
    a: &[PitchClass],
    b: &[PitchClass],
    sa: &GoldenStructure,
    sb: &GoldenStructure,
) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Arity { expected: "two harmonies of equal size", got: b.len() });
    }
    if a.len() < 3 {
        return Err(Error::Arity { expected: "at least 3", got: a.len() });
    }
    let mut rest = b.to_vec();
    let mut unmatched = 0;
    for pc in a {
        match rest.iter().position(|x| x == pc) {
            Some(i) => {
                rest.swap_remove(i);
            }
            None => unmatched += 1,
        }
    }
    if unmatched != 1 {
        return Ok(false);
    }
    let n = a.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let ta: PcSet = [a[i], a[j], a[k]].into_iter().collect();
                let kind = match sa.kind_of(ta) {
                    Some(kind @ (FigureKind::Triangle | FigureKind::Gnomon)) if ta.len() == 3 => kind,
                    _ => continue,
                };
                let tb: PcSet = [b[i], b[j], b[k]].into_iter().collect();
                if tb.len() != 3 || sb.kind_of(tb) != Some(kind.swapped()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
