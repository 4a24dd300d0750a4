//! Measure-by-measure golden analysis of a piece.
//!
//! Each measure is reduced to one harmony. The analysis picks one golden
//! decomposition per measure so that the piece as a whole uses as few
//! distinct combination shapes as possible.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;
use serde_json::{json, Value};

use crate::analysis::{golden_decompositions, CombinationShape, Decomposition, Harmony};
use crate::assignment::{Atlas, ExceptionalType};
use crate::error::{Error, Result};
use crate::pitch::{PcSet, PitchClass};

const BWV846: &str = include_str!("../data/bwv846.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Measure {
    pub number: u32,
    pub harmony: Harmony,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub title: String,
    pub measures: Vec<Measure>,
}

#[derive(Deserialize)]
struct JsonPiece {
    #[serde(default)]
    title: String,
    measures: Vec<JsonMeasure>,
}

#[derive(Deserialize)]
struct JsonMeasure {
    measure: u32,
    pcs: Vec<i32>,
}

impl Piece {
    /// Reads either the text format or a JSON document (detected by a
    /// leading `{`).
    pub fn load(document: &str) -> Result<Piece> {
        if document.trim_start().starts_with('{') {
            Piece::from_json(document)
        } else {
            Piece::parse(document)
        }
    }

    /// Text format: one `<measure>: <tone> <tone> ...` per line. Lines
    /// starting with `#` are comments; `# title: ...` names the piece.
    pub fn parse(document: &str) -> Result<Piece> {
        let mut title = String::new();
        let mut measures = Vec::new();
        for (i, raw) in document.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(t) = comment.trim().strip_prefix("title:") {
                    title = t.trim().to_string();
                }
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            let (number, tones) = line
                .split_once(':')
                .ok_or_else(|| err("expected `<measure>: <tones>`".into()))?;
            let number: u32 = number
                .trim()
                .parse()
                .map_err(|_| err(format!("bad measure number `{}`", number.trim())))?;
            let set = PcSet::parse_tones(tones).map_err(|e| err(format!("measure {number}: {e}")))?;
            if set.is_empty() {
                return Err(err(format!("measure {number} is empty")));
            }
            let harmony = Harmony::new(set).map_err(|e| err(format!("measure {number}: {e}")))?;
            measures.push((line_no, Measure { number, harmony }));
        }
        Piece::validated(title, measures)
    }

    pub fn from_json(document: &str) -> Result<Piece> {
        let raw: JsonPiece = serde_json::from_str(document)
            .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
        let mut measures = Vec::new();
        for m in raw.measures {
            let mut set = PcSet::EMPTY;
            for &v in &m.pcs {
                if !(0..12).contains(&v) {
                    return Err(Error::Parse { line: 0, message: format!("measure {}: pitch class {v} out of range", m.measure) });
                }
                if !set.insert(PitchClass::new(v)) {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("measure {}: {}", m.measure, Error::DuplicateTone(PitchClass::new(v))),
                    });
                }
            }
            let harmony = Harmony::new(set)
                .map_err(|e| Error::Parse { line: 0, message: format!("measure {}: {e}", m.measure) })?;
            measures.push((0, Measure { number: m.measure, harmony }));
        }
        Piece::validated(raw.title, measures)
    }

    fn validated(title: String, measures: Vec<(usize, Measure)>) -> Result<Piece> {
        for pair in measures.windows(2) {
            let ((_, a), (line, b)) = (&pair[0], &pair[1]);
            if b.number <= a.number {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("measure {} does not follow measure {}", b.number, a.number),
                });
            }
        }
        if measures.is_empty() {
            return Err(Error::Parse { line: 0, message: "no measures".into() });
        }
        Ok(Piece { title, measures: measures.into_iter().map(|(_, m)| m).collect() })
    }

    /// The same piece with every measure raised by `interval` semitones.
    pub fn transposed(&self, interval: i32) -> Piece {
        Piece {
            title: self.title.clone(),
            measures: self
                .measures
                .iter()
                .map(|m| Measure { number: m.number, harmony: m.harmony.transpose(interval) })
                .collect(),
        }
    }
}

/// The harmonic reduction of the C major prelude, 34 measures (measure 30
/// is not part of the listing).
pub fn bwv846() -> Piece {
    Piece::parse(BWV846).expect("embedded corpus parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureAnalysis {
    pub measure: u32,
    pub harmony: Harmony,
    pub chosen: Decomposition,
    pub shape: CombinationShape,
    /// Number of golden decompositions the measure admits.
    pub alternatives: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceSummary {
    pub histogram: BTreeMap<CombinationShape, usize>,
}

impl PieceSummary {
    pub fn distinct_shapes(&self) -> usize {
        self.histogram.len()
    }

    pub fn count(&self, label: &str) -> usize {
        self.histogram.iter().find(|(s, _)| s.label() == label).map_or(0, |(_, &c)| c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceAnalysis {
    pub ty: ExceptionalType,
    pub measures: Vec<MeasureAnalysis>,
    pub summary: PieceSummary,
}

impl PieceAnalysis {
    pub fn measure(&self, number: u32) -> Option<&MeasureAnalysis> {
        self.measures.iter().find(|m| m.measure == number)
    }

    pub fn to_json(&self) -> Value {
        let histogram: serde_json::Map<String, Value> =
            self.summary.histogram.iter().map(|(s, &c)| (s.label(), json!(c))).collect();
        json!({
            "type": self.ty.to_string(),
            "measures": self.measures.iter().map(|m| json!({
                "measure": m.measure,
                "pcs": m.harmony.pcs(),
                "figures": m.chosen.to_json(),
                "shape": m.shape.label(),
                "alternatives": m.alternatives,
            })).collect::<Vec<_>>(),
            "summary": {
                "histogram": histogram,
                "distinct_shapes": self.summary.distinct_shapes(),
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("type {}\n{:>7}  {:<20} {:<7} {}\n", self.ty, "measure", "tones", "shape", "figures");
        for m in &self.measures {
            out += &format!("{:>7}  {:<20} {:<7} {}\n", m.measure, m.harmony.to_string(), m.shape.label(), m.chosen);
        }
        out += &format!("{} distinct shapes:", self.summary.distinct_shapes());
        for (s, c) in &self.summary.histogram {
            out += &format!(" {}={c}", s.label());
        }
        out.push('\n');
        out
    }
}

fn decompositions_per_measure(atlas: &Atlas, piece: &Piece, ty: ExceptionalType) -> Result<Vec<Vec<Decomposition>>> {
    piece
        .measures
        .iter()
        .map(|m| {
            let ds = golden_decompositions(atlas.structure(ty), &m.harmony);
            if ds.is_empty() {
                Err(Error::SingularMeasure { measure: m.number, ty })
            } else {
                Ok(ds)
            }
        })
        .collect()
}

fn summarize(ty: ExceptionalType, piece: &Piece, options: &[Vec<Decomposition>], pick: impl Fn(&[Decomposition]) -> Decomposition) -> PieceAnalysis {
    let measures: Vec<MeasureAnalysis> = piece
        .measures
        .iter()
        .zip(options)
        .map(|(m, ds)| {
            let chosen = pick(ds);
            MeasureAnalysis { measure: m.number, harmony: m.harmony, shape: chosen.shape(), chosen, alternatives: ds.len() }
        })
        .collect();
    let mut histogram = BTreeMap::new();
    for m in &measures {
        *histogram.entry(m.shape).or_insert(0) += 1;
    }
    PieceAnalysis { ty, measures, summary: PieceSummary { histogram } }
}

/// Chooses one decomposition per measure so that the number of distinct
/// shapes is minimal.
///
/// Candidate shape sets are tried by size and, within a size, in
/// lexicographic order of the canonical shape order; the first set that
/// offers every measure a decomposition wins. A measure that can still use
/// several shapes of the set takes the one most measures are already forced
/// into (ties by canonical shape order), then its first decomposition of
/// that shape in canonical order. Deciding by counts rather than pitch
/// content keeps the choice stable under whole-step transposition and
/// mirrored between dual types.
pub fn analyze_piece(atlas: &Atlas, piece: &Piece, ty: ExceptionalType) -> Result<PieceAnalysis> {
    let options = decompositions_per_measure(atlas, piece, ty)?;
    let offered: Vec<BTreeSet<CombinationShape>> =
        options.iter().map(|ds| ds.iter().map(Decomposition::shape).collect()).collect();
    let universe: Vec<CombinationShape> = offered.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();

    let chosen = (1..=universe.len())
        .find_map(|size| {
            combinations(universe.len(), size)
                .map(|idx| idx.iter().map(|&i| universe[i]).collect::<BTreeSet<_>>())
                .find(|set| offered.iter().all(|o| !o.is_disjoint(set)))
        })
        .expect("the full universe always works");

    let mut forced: BTreeMap<CombinationShape, usize> = BTreeMap::new();
    for o in &offered {
        let usable: Vec<_> = o.intersection(&chosen).collect();
        if let [only] = usable.as_slice() {
            *forced.entry(**only).or_insert(0) += 1;
        }
    }
    Ok(summarize(ty, piece, &options, |ds| {
        let shape = ds
            .iter()
            .map(Decomposition::shape)
            .filter(|s| chosen.contains(s))
            .min_by_key(|s| (std::cmp::Reverse(forced.get(s).copied().unwrap_or(0)), *s))
            .expect("feasible shape set");
        ds.iter().find(|d| d.shape() == shape).expect("shape is offered").clone()
    }))
}

/// Baseline that takes each measure's first decomposition in canonical
/// order, ignoring the rest of the piece.
pub fn analyze_piece_greedy(atlas: &Atlas, piece: &Piece, ty: ExceptionalType) -> Result<PieceAnalysis> {
    let options = decompositions_per_measure(atlas, piece, ty)?;
    Ok(summarize(ty, piece, &options, |ds| ds[0].clone()))
}

/// Index combinations of `k` out of `n` in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = {
            let mut c = out.clone();
            match (0..k).rev().find(|&i| c[i] < n - k + i) {
                Some(i) => {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    Some(c)
                }
                None => None,
            }
        };
        current = next;
        Some(out)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRow {
    pub measure: u32,
    pub t2: Decomposition,
    pub t3: Decomposition,
}

impl DualityRow {
    pub fn consistent(&self) -> bool {
        self.t3 == self.t2.swapped()
    }
}

/// Compares the type 2* and type 3* analyses measure by measure.
pub fn duality_report(atlas: &Atlas, piece: &Piece) -> Result<Vec<DualityRow>> {
    let a = analyze_piece(atlas, piece, ExceptionalType::T2)?;
    let b = analyze_piece(atlas, piece, ExceptionalType::T3)?;
    Ok(a.measures
        .into_iter()
        .zip(b.measures)
        .map(|(x, y)| DualityRow { measure: x.measure, t2: x.chosen, t3: y.chosen })
        .collect())
}
