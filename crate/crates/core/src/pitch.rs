//! Pitch classes and pitch-class sets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// One of the twelve pitch classes, `C = 0` through `B = 11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PitchClass(u8);

const NAMES: [&str; 12] = [
    "C", "C#", "D", "Eb", "E", "F", "F#", "G", "Ab", "A", "Bb", "B",
];

impl PitchClass {
    pub const C: PitchClass = PitchClass(0);

    /// Reduces any integer modulo 12.
    pub fn new(value: i32) -> PitchClass {
        PitchClass(value.rem_euclid(12) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn transpose(self, interval: i32) -> PitchClass {
        PitchClass::new(self.0 as i32 + interval)
    }

    pub fn all() -> impl Iterator<Item = PitchClass> {
        (0..12).map(PitchClass)
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PitchClass {
    type Err = Error;

    /// Accepts a letter `A`-`G` followed by any number of `#`/`♯` or `b`/`♭`.
    /// Sharps and flats are synonyms (`C#` and `Db` are the same class).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.trim().chars();
        let base = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('C') => 0,
            Some('D') => 2,
            Some('E') => 4,
            Some('F') => 5,
            Some('G') => 7,
            Some('A') => 9,
            Some('B') => 11,
            _ => return Err(Error::UnknownTone(s.to_string())),
        };
        let mut offset = 0i32;
        for c in chars {
            match c {
                '#' | '♯' => offset += 1,
                'b' | '♭' => offset -= 1,
                _ => return Err(Error::UnknownTone(s.to_string())),
            }
        }
        Ok(PitchClass::new(base + offset))
    }
}

impl Serialize for PitchClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

/// A set of pitch classes stored as a 12-bit mask.
///
/// Ordering compares the ascending member sequences lexicographically, so
/// `{C, D, B}` sorts before `{C, E, F}`. That order is the canonical order
/// used for figures and decompositions throughout the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PcSet(u16);

impl PcSet {
    pub const EMPTY: PcSet = PcSet(0);
    pub const CHROMATIC: PcSet = PcSet(0x0fff);

    pub fn from_bits(bits: u16) -> PcSet {
        PcSet(bits & 0x0fff)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, pc: PitchClass) -> bool {
        self.0 & (1 << pc.0) != 0
    }

    pub fn insert(&mut self, pc: PitchClass) -> bool {
        let fresh = !self.contains(pc);
        self.0 |= 1 << pc.0;
        fresh
    }

    pub fn union(self, other: PcSet) -> PcSet {
        PcSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PcSet) -> PcSet {
        PcSet(self.0 & other.0)
    }

    pub fn difference(self, other: PcSet) -> PcSet {
        PcSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PcSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = PitchClass> {
        (0..12u8).filter(move |i| self.0 & (1 << i) != 0).map(PitchClass)
    }

    pub fn to_vec(self) -> Vec<PitchClass> {
        self.iter().collect()
    }

    /// Adds `interval` (mod 12) to every member.
    pub fn transpose(self, interval: i32) -> PcSet {
        let shift = interval.rem_euclid(12) as u32;
        let wide = (self.0 as u32) << shift;
        PcSet(((wide | (wide >> 12)) & 0x0fff) as u16)
    }

    pub fn map(self, f: impl Fn(PitchClass) -> PitchClass) -> PcSet {
        self.iter().map(f).collect()
    }

    /// Parses whitespace- or comma-separated tone names, rejecting repeats.
    pub fn parse_tones(text: &str) -> Result<PcSet, Error> {
        let mut set = PcSet::EMPTY;
        for token in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let pc: PitchClass = token.parse()?;
            if !set.insert(pc) {
                return Err(Error::DuplicateTone(pc));
            }
        }
        Ok(set)
    }

    /// All subsets of the chromatic set with exactly `k` members, in
    /// canonical order.
    pub fn k_subsets(k: usize) -> Vec<PcSet> {
        let mut out: Vec<PcSet> = (0u16..0x1000)
            .filter(|b| b.count_ones() as usize == k)
            .map(PcSet)
            .collect();
        out.sort();
        out
    }

    /// Sub-masks of `self` (including `self`) with exactly `k` members.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = PcSet> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || loop {
            if done {
                return None;
            }
            let current = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            if current.count_ones() as usize == k {
                return Some(PcSet(current));
            }
        })
    }
}

impl Ord for PcSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PcSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<PitchClass> for PcSet {
    fn from_iter<I: IntoIterator<Item = PitchClass>>(iter: I) -> Self {
        let mut set = PcSet::EMPTY;
        for pc in iter {
            set.insert(pc);
        }
        set
    }
}

impl fmt::Debug for PcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}

impl fmt::Display for PcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(PitchClass::name).collect();
        f.write_str(&names.join(","))
    }
}

impl Serialize for PcSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|pc| pc.0))
    }
}

/// Builds a set from integers reduced mod 12.
pub fn pcs(values: &[i32]) -> PcSet {
    values.iter().map(|&v| PitchClass::new(v)).collect()
}
