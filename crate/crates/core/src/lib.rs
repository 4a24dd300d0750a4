//! Exceptional musical icosahedra: the four ways to place the twelve pitch
//! classes on an icosahedron so that every major and minor triad is a golden
//! triangle or golden gnomon, and the harmonic analysis built on them.

pub mod analysis;
pub mod assignment;
pub mod error;
pub mod icosahedron;
pub mod neo_riemannian;
pub mod piece;
pub mod pitch;

pub use analysis::{
    golden_decompositions, is_golden_singular, CombinationShape, Decomposition, GoldenBaseHarmony, Harmony,
};
pub use assignment::{Atlas, ExceptionalType, GoldenStructure, MusicalIcosahedron};
pub use error::{Error, Result};
pub use icosahedron::{FigureKind, GoldenFigure, NeighborhoodMode, Topology, VertexId, VertexSet};
pub use neo_riemannian::{apply_transform, Quality, Transform, Triad};
pub use piece::{analyze_piece, bwv846, Piece, PieceAnalysis};
pub use pitch::{pcs, PcSet, PitchClass};
